#pragma once

#include <cstdint>
#include <vector>

#include "cotlat/types.hpp"

namespace cotlat {

/// zeta(2n) = sum_{k>=1} k^{-2n}: the k != 0 part of U_{2n} at z = 0, halved.
/// Compensated partial sum plus a midpoint-integral tail; K doubles from 16.
///
/// Throws EvalError(DomainError) for n < 1, EvalError(NonConvergent) past
/// tol.max_terms.
EvalResult zeta_even(int n, const Tolerance& tol = {});

struct ZetaSample {
  double z;
  /// U_{2n}(z) - z^{-2n} from the closed form.
  double difference;
  double err;
};

/// The limit route: samples of U_{2n}(z_j) - z_j^{-2n} at z_j = 2^-j,
/// j = 3..10, extrapolated to z -> 0 with a Richardson tableau in h = z^{2n}.
/// The subtraction loses about 2n log10(1/z) digits, so the tableau entry with
/// the smallest estimated error is kept. Diagnostic only.
struct ZetaExtraction {
  int n = 0;
  std::vector<ZetaSample> samples;
  double extrapolated = 0.0;
  double err_estimate = 0.0;
};

/// Throws EvalError(DomainError) for n < 1.
ZetaExtraction zeta_limit_extrapolation(int n);

/// 0 < x <= y < 1.
struct ProductQuery {
  /// Throws EvalError(DomainError) when the ordering or range fails.
  ProductQuery(int n, double x, double y);

  int n;
  double x;
  double y;
};

struct ProductEvaluation {
  /// prod_{k in Z} ((y^n + k^n) / (x^n + k^n))^2 from symmetric partial
  /// products with bracketed log tail (method DirectSum, work = 2K + 1).
  EvalResult lhs;
  /// prod_{j=1}^n [cosh(2 pi y b_j) - cos(2 pi y a_j)] / [same at x]
  /// (method ClosedForm, work = n).
  EvalResult rhs;
};

ProductEvaluation product_ratio_both(const ProductQuery& query, const Tolerance& tol = {});

/// Value is the closed-form side; err_estimate = |lhs - rhs| + both sides' errors.
/// Exactly 1 with zero error when x == y.
EvalResult product_ratio(const ProductQuery& query, const Tolerance& tol = {});

}  // namespace cotlat
