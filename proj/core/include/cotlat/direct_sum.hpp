#pragma once

#include <cstdint>

#include "cotlat/types.hpp"

namespace cotlat {

struct TruncationPlan {
  /// Symmetric cutoff: terms with |k| <= cutoff are summed.
  std::int64_t cutoff = 0;
  double tail_bound = 0.0;
};

/// Majorant on the modulus of the discarded tail sum_{|k|>K} 1/(k^n + z^n)
/// (symmetric pairs for odd n). Uses sum_{k>K} 1/(k^p - |z|^p) <= factor *
/// int_K^inf x^-p dx, with factor 2 once K^p >= 2|z|^p.
///
/// Throws EvalError(InvalidCutoff) unless K > ceil(|z|) + 1.
double tail_bound(SeriesOrder n, Complex z, std::int64_t K);

/// Plan with the majorant evaluated at K.
TruncationPlan plan_truncation(SeriesOrder n, Complex z, std::int64_t K);

/// Sum of the k and -k terms of 1/(k^n + z^n) for k >= 1; `zn` is z^n.
/// Odd n uses the rewrite 2 z^n / (z^{2n} - k^{2n}).
Complex paired_term(SeriesOrder n, Complex zn, std::int64_t k) noexcept;

/// U_n(z) = sum_{k in Z} 1/(k^n + z^n) by symmetric summation.
///
/// The k = 0 term is added first, then the pairs k = 1..K in compensated
/// summation; K runs through powers of two from max(16, 2 ceil|z|). The discarded tail
/// is replaced by its midpoint-rule integral, so err_estimate bounds the
/// remainder of that correction plus accumulated rounding. `work` counts the
/// lattice points 2K + 1.
///
/// Throws EvalError(DomainError) off-domain, EvalError(NonConvergent) when
/// 2K + 1 would exceed tol.max_terms before the target is met.
EvalResult u_direct(SeriesOrder n, Complex z, const Tolerance& tol);

}  // namespace cotlat
