#pragma once

#include "cotlat/types.hpp"

namespace cotlat {

inline constexpr int kMaxDyadicLevel = 10;

/// i^t on the principal branch, exp(i pi t / 2).
Complex principal_i_pow(double t) noexcept;

/// Rotations used to descend from phi_m (exponent 2^m) to phi_{m-1}.
///
/// rotation_pos = i^{2^{1-m}}   : (rotation_pos z)^{2^{m-1}} = +i z^{2^{m-1}}
/// rotation_neg = i^{3 2^{1-m}} : (rotation_neg z)^{2^{m-1}} = -i z^{2^{m-1}}
struct DyadicLevel {
  /// Throws EvalError(DomainError) outside [1, kMaxDyadicLevel].
  explicit DyadicLevel(int m);

  int m;
  Complex rotation_pos;
  Complex rotation_neg;
};

/// phi_m(z) = U_{2^m}(z) via
///   phi_m(z) = [phi_{m-1}(rotation_neg z) - phi_{m-1}(rotation_pos z)] / (2i z^{2^{m-1}}),
/// bottoming out at phi_1 = U_2 evaluated by `base` (DirectSum or ClosedForm).
///
/// Child errors are summed, rounding of the subtraction is added, and the
/// total is divided by |2 z^{2^{m-1}}|. `work` sums the leaves' work.
///
/// Throws EvalError(DomainError) for m outside [1, kMaxDyadicLevel], z = 0, an
/// unsupported base, or a pole of U_{2^m}; EvalError(RecursionPole) when a
/// rotated argument hits a pole of a lower level.
EvalResult phi(int m, Complex z, const Tolerance& tol, MethodId base = MethodId::ClosedForm);

}  // namespace cotlat
