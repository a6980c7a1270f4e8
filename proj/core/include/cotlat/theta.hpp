#pragma once

#include "cotlat/types.hpp"

namespace cotlat {

/// Nome q in (0, 1) together with its Laplace variable t = -log q.
/// q underflows to 0 for t beyond ~745; evaluators work from t.
class ThetaArg {
 public:
  /// Throws EvalError(DomainError) unless 0 < q < 1.
  static ThetaArg from_q(double q);
  /// Throws EvalError(DomainError) unless t > 0 and finite.
  static ThetaArg from_t(double t);

  double q() const noexcept { return q_; }
  double t() const noexcept { return t_; }

 private:
  ThetaArg(double q, double t) : q_(q), t_(t) {}
  double q_;
  double t_;
};

/// Psi_n(q) = sum_{k in Z} q^{k^{2n}} = 1 + 2 sum_{k>=1} exp(-t k^{2n}).
///
/// Truncated once the bound 2 e^{-t K^{2n}} / (1 - e^{-t d}), d = (K+1)^{2n} - K^{2n},
/// on the remaining terms falls below a quarter of the target.
///
/// Throws EvalError(NonConvergent) past tol.max_terms.
EvalResult psi(SeriesOrder n, ThetaArg arg, const Tolerance& tol = {});

/// U_{2n}(z) = int_0^inf exp(-t z^{2n}) Psi_n(e^{-t}) dt.
///
/// The constant term of Psi_n contributes z^{-2n} exactly. The rest,
/// Psi_n - 1 <= 2 e^{-t} / (1 - e^{-t}), is cut at T where its Laplace tail
/// drops below abs_tol / 10 and integrated by adaptive Gauss-Kronrod in
/// u = t^{1/(2n)}, which removes the t^{-1/(2n)} growth of Psi_n at t -> 0.
/// `work` is the number of integrand evaluations.
///
/// Throws EvalError(DomainError) when Re z^{2n} <= 0,
/// EvalError(QuadratureFailure) past tol.max_nodes.
EvalResult u_theta(SeriesOrder n, Complex z, const Tolerance& tol = {});

}  // namespace cotlat
