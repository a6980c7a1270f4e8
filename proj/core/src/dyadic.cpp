#include "cotlat/dyadic.hpp"

#include <cmath>
#include <limits>
#include <numbers>
#include <string>

#include "cotlat/closed_form.hpp"
#include "cotlat/direct_sum.hpp"

namespace cotlat {

namespace {

constexpr double kEps = std::numeric_limits<double>::epsilon();

EvalResult descend(int m, Complex z, const Tolerance& tol, MethodId base) {
  if (m == 1) {
    return base == MethodId::DirectSum ? u_direct(SeriesOrder(2), z, tol)
                                       : u_closed(SeriesOrder(2), z, tol);
  }
  const DyadicLevel level(m);
  const SeriesOrder child_order(1 << (m - 1));
  const Complex w_neg = level.rotation_neg * z;
  const Complex w_pos = level.rotation_pos * z;
  for (const Complex w : {w_neg, w_pos}) {
    if (validate_domain(child_order, w) != DomainStatus::Ok) {
      throw EvalError(ErrorKind::RecursionPole,
                      "phi: rotated argument hits a pole of U_" + std::to_string(child_order.value()));
    }
  }
  const EvalResult lo = descend(m - 1, w_neg, tol, base);
  const EvalResult hi = descend(m - 1, w_pos, tol, base);

  const Complex denom = Complex{0.0, 2.0} * ipow(z, static_cast<unsigned>(child_order.value()));
  const Complex diff = lo.value - hi.value;
  const Complex value = diff / denom;
  // Absolute errors pass straight through the subtraction; its rounding is
  // relative to |lo| + |hi|, which dominates when they nearly cancel.
  const double abs_sum = std::abs(lo.value) + std::abs(hi.value);
  const double err = (lo.err_estimate + hi.err_estimate + 4.0 * kEps * abs_sum) / std::abs(denom) +
                     4.0 * kEps * std::abs(value);
  return {value, err, MethodId::DyadicRecursion, lo.work + hi.work};
}

}  // namespace

Complex principal_i_pow(double t) noexcept { return std::polar(1.0, std::numbers::pi * t / 2.0); }

DyadicLevel::DyadicLevel(int level)
    : m(level),
      rotation_pos(principal_i_pow(std::ldexp(1.0, 1 - level))),
      rotation_neg(principal_i_pow(3.0 * std::ldexp(1.0, 1 - level))) {
  if (level < 1 || level > kMaxDyadicLevel) {
    throw EvalError(ErrorKind::DomainError, "dyadic level must lie in [1, " + std::to_string(kMaxDyadicLevel) + "]");
  }
}

EvalResult phi(int m, Complex z, const Tolerance& tol, MethodId base) {
  tol.validate();
  if (m < 1 || m > kMaxDyadicLevel) {
    throw EvalError(ErrorKind::DomainError,
                    "phi: level m=" + std::to_string(m) + " outside [1, " +
                        std::to_string(kMaxDyadicLevel) + "]; use the closed form for larger exponents");
  }
  if (base != MethodId::DirectSum && base != MethodId::ClosedForm) {
    throw EvalError(ErrorKind::DomainError, "phi: base must be DirectSum or ClosedForm");
  }
  require_domain(SeriesOrder(1 << m), z);
  EvalResult r = descend(m, z, tol, base);
  r.method = MethodId::DyadicRecursion;
  if (!is_finite(r.value)) {
    throw EvalError(ErrorKind::DomainError, "phi: value not representable in double precision");
  }
  return r;
}

}  // namespace cotlat
