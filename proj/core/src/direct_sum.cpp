#include "cotlat/direct_sum.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <complex>
#include <limits>
#include <string>

#include "cotlat/compensated.hpp"
#include "cotlat/detail/tail.hpp"

namespace cotlat {

namespace {

constexpr double kEps = std::numeric_limits<double>::epsilon();
constexpr double kEpsExt = static_cast<double>(std::numeric_limits<long double>::epsilon());

// Exponent of the paired terms' decay.
int pair_decay(SeriesOrder n) { return n.is_odd() ? 2 * n.value() : n.value(); }

}  // namespace

double tail_bound(SeriesOrder n, Complex z, std::int64_t K) {
  const double az = std::abs(z);
  if (!(static_cast<double>(K) > std::ceil(az) + 1.0)) {
    throw EvalError(ErrorKind::InvalidCutoff, "tail_bound: cutoff K=" + std::to_string(K) +
                                                  " must exceed ceil(|z|) + 1");
  }
  const int p = pair_decay(n);
  const double Kd = static_cast<double>(K);
  const double Kp = std::pow(Kd, p);
  const double zp = std::pow(az, p);
  // Paired numerator: 2 (even n) or 2|z|^n (odd n).
  const double numer = n.is_odd() ? 2.0 * std::pow(az, n.value()) : 2.0;
  const double factor = (Kp >= 2.0 * zp) ? 2.0 : 1.0 / (1.0 - zp / Kp);
  return numer * factor * Kd / Kp / (p - 1);
}

TruncationPlan plan_truncation(SeriesOrder n, Complex z, std::int64_t K) {
  return {K, tail_bound(n, z, K)};
}

Complex paired_term(SeriesOrder n, Complex zn, std::int64_t k) noexcept {
  const double kn = ipow(static_cast<double>(k), static_cast<unsigned>(n.value()));
  if (n.is_odd()) {
    return 2.0 * zn / (zn * zn - kn * kn);
  }
  return 2.0 / (kn + zn);
}

EvalResult u_direct(SeriesOrder n, Complex z, const Tolerance& tol) {
  tol.validate();
  require_domain(n, z);

  const auto e = static_cast<unsigned>(n.value());
  const Complex zn = ipow(z, e);
  const int p = pair_decay(n);
  // Tail terms are c / (k^p + w).
  const Complex tail_c = n.is_odd() ? -2.0 * zn : Complex{2.0, 0.0};
  const Complex tail_w = n.is_odd() ? -(zn * zn) : zn;
  const double aw = std::abs(tail_w);

  // Powers of two only, so the cutoff reached is monotone in |z|.
  const auto start = std::max<std::uint64_t>(16, 2 * static_cast<std::uint64_t>(std::ceil(std::abs(z))));
  auto K = static_cast<std::int64_t>(std::bit_ceil(start));
  while (aw > detail::kMaxTailRatio * std::pow(static_cast<double>(K) + 0.5, p)) K *= 2;

  // Relative rounding of z^n itself propagates into every pair.
  const double pow_rel = (2.0 * n.value() + 4.0) * kEps;

  // The k = 0 term dominates for small |z|; it is kept in extended precision
  // so that the final rounding is the only double-precision error it carries.
  using LComplex = std::complex<long double>;
  LComplex zn_ext = 1.0L;
  for (unsigned i = 0; i < e; ++i) zn_ext *= LComplex(z);
  const LComplex head = 1.0L / zn_ext;
  const double head_err = (n.value() + 4.0) * kEpsExt * std::abs(Complex(head));

  CompensatedSum<Complex> sum;
  double rounding = 0.0;
  double abs_sum = 0.0;
  std::int64_t done = 0;

  for (;;) {
    if (2 * K + 1 > tol.max_terms) {
      throw EvalError(ErrorKind::NonConvergent,
                      "u_direct: max_terms=" + std::to_string(tol.max_terms) +
                          " reached before tolerance (n=" + std::to_string(n.value()) + ")");
    }
    for (std::int64_t k = done + 1; k <= K; ++k) {
      const double kn = ipow(static_cast<double>(k), e);
      Complex term;
      double den_scale;
      double den_abs;
      if (n.is_odd()) {
        const Complex den = zn * zn - kn * kn;
        term = 2.0 * zn / den;
        den_scale = std::norm(zn) + kn * kn;
        den_abs = std::abs(den);
      } else {
        const Complex den = kn + zn;
        term = 2.0 / den;
        den_scale = kn + std::abs(zn);
        den_abs = std::abs(den);
      }
      sum += term;
      const double at = std::abs(term);
      abs_sum += at;
      rounding += at * (4.0 * kEps + pow_rel * den_scale / den_abs);
    }
    done = K;

    const auto tail = detail::midpoint_tail(tail_c, p, tail_w, K);
    const Complex value = Complex(head + LComplex(sum.value() + tail.value));
    const double err = tail.bound + head_err + rounding + 2.0 * kEps * abs_sum + kEps * std::abs(value);
    if (err <= tol.target(std::abs(value))) {
      return {value, err, MethodId::DirectSum, 2 * K + 1};
    }
    K *= 2;
  }
}

}  // namespace cotlat
