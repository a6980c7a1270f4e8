#include "cotlat/detail/tail.hpp"

#include <cmath>
#include <limits>
#include <string>

namespace cotlat::detail {

TailEstimate midpoint_tail(Complex c, int p, Complex w, std::int64_t K) {
  if (p < 2 || K < 1) {
    throw EvalError(ErrorKind::InvalidCutoff, "midpoint_tail: need p >= 2 and K >= 1");
  }
  const double a = static_cast<double>(K) + 0.5;
  const double ap = std::pow(a, p);
  const double r = std::abs(w) / ap;
  if (!(r <= kMaxTailRatio)) {
    throw EvalError(ErrorKind::InvalidCutoff,
                    "midpoint_tail: cutoff K=" + std::to_string(K) + " too small for |w|");
  }
  if (c == Complex{0.0, 0.0} || !std::isfinite(ap)) {
    return {Complex{0.0, 0.0}, 0.0};
  }

  // int_a^inf c x^{-p(j+1)} (-w)^j dx = c (-w)^j a^{1-p(j+1)} / (p(j+1) - 1)
  const Complex ratio = -w / ap;
  Complex power = c * (a / ap);
  Complex sum{0.0, 0.0};
  double series_rem = 0.0;
  for (int j = 0;; ++j) {
    const Complex term = power / static_cast<double>(p * (j + 1) - 1);
    sum += term;
    power *= ratio;
    const double next = std::abs(power) / static_cast<double>(p * (j + 2) - 1);
    if (next <= 0x1p-60 * std::abs(sum) || j >= 400) {
      series_rem = next / (1.0 - r);
      break;
    }
  }

  // sum_{k>K} [g(k) - int_{k-1/2}^{k+1/2} g] with |g''(x)| <= |c| p(p+1) F(r) x^{-p-2},
  // F(r) = sum_j (j+1)^2 r^j = (1+r)/(1-r)^3. The midpoint error per cell is
  // g''/24 for each of Re and Im, hence sqrt(2)/24 < 1/16 for the modulus.
  const double pp = static_cast<double>(p);
  const double F = (1.0 + r) / ((1.0 - r) * (1.0 - r) * (1.0 - r));
  const double g2 = std::abs(c) * pp * (pp + 1.0) * F;
  const double midpoint_rem = g2 * (std::pow(a, -pp - 2.0) + std::pow(a, -pp - 1.0) / (pp + 1.0)) / 16.0;

  return {sum, midpoint_rem + series_rem + 4.0 * std::numeric_limits<double>::epsilon() * std::abs(sum)};
}

}  // namespace cotlat::detail
