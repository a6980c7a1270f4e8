#pragma once

#include <cstdint>

#include "cotlat/types.hpp"

namespace cotlat::detail {

struct TailEstimate {
  Complex value;
  /// Bound on |true tail - value|.
  double bound;
};

/// Estimates sum_{k>K} c / (k^p + w) by the midpoint-rule integral
///   int_{K+1/2}^inf c / (x^p + w) dx,
/// expanded as a power series in w / x^p. The bound covers the midpoint-rule
/// remainder (via |g''| on [K+1/2, inf)) and the series truncation.
///
/// Requires p >= 2 and |w| <= (K+1/2)^p / 2; throws EvalError(InvalidCutoff)
/// otherwise.
TailEstimate midpoint_tail(Complex c, int p, Complex w, std::int64_t K);

/// Largest |w| / (K+1/2)^p accepted by midpoint_tail.
inline constexpr double kMaxTailRatio = 0.5;

}  // namespace cotlat::detail
