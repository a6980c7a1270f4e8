#include "cotlat/theta.hpp"

#include <cmath>
#include <limits>
#include <string>

#include "cotlat/compensated.hpp"
#include "cotlat/detail/quadrature.hpp"

namespace cotlat {

namespace {

constexpr double kEps = std::numeric_limits<double>::epsilon();

struct SeriesValue {
  double value;
  double err;
  std::int64_t terms;
};

// 2 sum_{k>=1} exp(-t k^{2n}) = Psi_n - 1, stopping once the remainder bound
// is below target / 4.
SeriesValue psi_minus_one(int n, double t, double target, std::int64_t max_terms) {
  const double p = 2.0 * n;
  CompensatedSum<double> sum;
  for (std::int64_t k = 1;; ++k) {
    const double kd = static_cast<double>(k);
    sum += 2.0 * std::exp(-t * std::pow(kd, p));
    // Remaining terms k' >= k+1 satisfy k'^{2n} >= (k+1)^{2n} + (k' - k - 1) d.
    const double next = std::pow(kd + 1.0, p);
    const double d = std::pow(kd + 2.0, p) - next;
    const double head = std::exp(-t * next);
    const double rem = head == 0.0 ? 0.0 : 2.0 * head / -std::expm1(-t * d);
    if (rem <= 0.25 * target) {
      const double v = sum.value();
      return {v, rem + 2.0 * kEps * v, k + 1};
    }
    if (k >= max_terms) {
      throw EvalError(ErrorKind::NonConvergent,
                      "psi: max_terms=" + std::to_string(max_terms) + " reached before tolerance");
    }
  }
}

// int_T^inf e^{-t r} (Psi_n(t) - 1) dt, using Psi_n - 1 <= 2 e^{-t} / (1 - e^{-t}).
double laplace_tail_bound(double T, double r) {
  return 2.0 * std::exp(-T * (r + 1.0)) / ((r + 1.0) * -std::expm1(-T));
}

}  // namespace

ThetaArg ThetaArg::from_q(double q) {
  if (!(q > 0.0 && q < 1.0)) {
    throw EvalError(ErrorKind::DomainError, "theta: q must lie in (0, 1)");
  }
  return ThetaArg(q, -std::log(q));
}

ThetaArg ThetaArg::from_t(double t) {
  if (!(t > 0.0) || !std::isfinite(t)) {
    throw EvalError(ErrorKind::DomainError, "theta: t must be positive and finite");
  }
  return ThetaArg(std::exp(-t), t);
}

EvalResult psi(SeriesOrder n, ThetaArg arg, const Tolerance& tol) {
  tol.validate();
  // Psi_n >= 1, so target(1) never exceeds the relative target at the value.
  const auto s = psi_minus_one(n.value(), arg.t(), tol.target(1.0), tol.max_terms);
  return {Complex{1.0 + s.value, 0.0}, s.err + kEps, MethodId::DirectSum, s.terms};
}

EvalResult u_theta(SeriesOrder n, Complex z, const Tolerance& tol) {
  tol.validate();
  const int two_n = 2 * n.value();
  const Complex zp = ipow(z, static_cast<unsigned>(two_n));
  const double re_zp = zp.real();
  if (!(re_zp > 0.0) || !is_finite(zp)) {
    throw EvalError(ErrorKind::DomainError, "u_theta: requires Re(z^{2n}) > 0");
  }

  // The k = 0 term of Psi_n integrates to z^{-2n} exactly; only Psi_n - 1 goes
  // through quadrature.
  const Complex head = 1.0 / zp;
  const double tail_target = 0.1 * tol.abs_tol;
  double T = 1.0;
  while (laplace_tail_bound(T, re_zp) > tail_target) T *= 1.25;
  const double tail = laplace_tail_bound(T, re_zp);
  const double U = std::pow(T, 1.0 / two_n);

  auto integrand = [&](double u) -> Complex {
    const double t = std::pow(u, two_n);
    const auto s = psi_minus_one(n.value(), t, 2e-16 * (1.0 + 1.0 / u), tol.max_terms);
    return two_n * std::pow(u, two_n - 1) * std::exp(-t * zp) * s.value;
  };

  const auto q = detail::integrate_adaptive(integrand, 0.0, U, 0.8 * tol.abs_tol, 0.8 * tol.rel_tol,
                                            tol.max_nodes);
  const Complex value = head + q.value;
  return {value, q.err + tail + 4.0 * kEps * std::abs(value), MethodId::ThetaIntegral, q.nodes};
}

}  // namespace cotlat
