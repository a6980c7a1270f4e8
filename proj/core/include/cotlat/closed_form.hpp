#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "cotlat/types.hpp"

namespace cotlat {

/// (cos t, sin t) for t = (2k - 1) pi / n.
struct RootKernel {
  int index = 0;
  double a = 0.0;
  double b = 0.0;
};

/// The n roots of -1 on the unit circle, in increasing angle. Angles are
/// reduced in exact integer arithmetic before calling cos/sin, so the table
/// is closed under b -> -b bit-for-bit.
class KernelTable {
 public:
  explicit KernelTable(SeriesOrder n);

  SeriesOrder order() const noexcept { return n_; }
  std::span<const RootKernel> roots() const noexcept { return roots_; }

 private:
  SeriesOrder n_;
  std::vector<RootKernel> roots_;
};

inline KernelTable kernel_table(SeriesOrder n) { return KernelTable(n); }

struct KernelTerm {
  Complex value;
  double err;
};

/// [a sin(2 pi z a) + b sinh(2 pi z b)] / [cosh(2 pi z b) - cos(2 pi z a)],
/// evaluated with every exponential scaled by exp(-max(|Re 2pi z b|, |Im 2pi z a|))
/// and the denominator factored as 2 sinh(pi z (b + ia)) sinh(pi z (b - ia)).
///
/// Throws EvalError(KernelSingular) when z (a +- ib) lies on a nonzero integer.
KernelTerm root_kernel(Complex z, double a, double b);

/// U_n(z) by the finite root-kernel representation. n = 1, 2 use cot/coth
/// directly; n = 3, 4 use their explicit reductions; larger n loop over the
/// kernel table. Kernels are evaluated in long double and rounded once, so the
/// result is within about an ulp even where the k = 0 term dominates.
/// `work` is n, the number of kernel terms represented.
///
/// Throws EvalError(DomainError) for invalid (n, z), EvalError(KernelSingular)
/// at a pole of a kernel term.
EvalResult u_closed(SeriesOrder n, Complex z, const Tolerance& tol = {});

/// Same representation, always through the kernel-table loop.
EvalResult u_closed_general(SeriesOrder n, Complex z);

struct UnitCircleParts {
  double re = 0.0;
  double im = 0.0;
  double err_estimate = 0.0;
  std::int64_t work = 0;
};

/// Re and Im of U_n(e^{i theta}) from the rationalised sums
///   Re = sum_k (k^n + cos n theta) / D_k,   Im = -sum_k sin n theta / D_k,
///   D_k = k^{2n} + 2 k^n cos n theta + 1,
/// summed in +-k pairs with a midpoint-integral tail.
///
/// Throws EvalError(DomainError) when some D_k vanishes,
/// EvalError(NonConvergent) past tol.max_terms.
UnitCircleParts unit_circle_parts(SeriesOrder n, double theta, const Tolerance& tol = {});

}  // namespace cotlat
