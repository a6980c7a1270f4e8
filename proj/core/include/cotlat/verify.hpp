#pragma once

#include <optional>
#include <string>
#include <vector>

#include "cotlat/types.hpp"

namespace cotlat {

struct GridPoint {
  int n = 1;
  Complex z{};
};

struct GridSpec {
  std::vector<GridPoint> points;
  std::vector<MethodId> methods;
  Tolerance tol;

  /// Every (n, z) pair, n-major.
  static GridSpec cartesian(const std::vector<int>& n_values, const std::vector<Complex>& z_points,
                            std::vector<MethodId> methods, Tolerance tol = {});
};

/// DyadicRecursion needs n = 2^m with 1 <= m <= kMaxDyadicLevel;
/// ThetaIntegral needs even n and Re(z^n) > 0. The other two always apply.
bool method_applicable(MethodId method, int n, Complex z) noexcept;

/// Dispatches to u_direct, u_closed, phi (closed-form base) or u_theta.
/// Throws whatever the evaluator throws; EvalError(DomainError) when the
/// method does not apply to (n, z).
EvalResult evaluate(MethodId method, int n, Complex z, const Tolerance& tol);

struct MethodOutcome {
  MethodId method;
  std::optional<EvalResult> result;
  std::optional<ErrorKind> error;
  std::string message;
};

struct PointReport {
  GridPoint point;
  DomainStatus domain = DomainStatus::Ok;
  std::vector<MethodOutcome> outcomes;
};

struct Comparison {
  GridPoint point;
  MethodId a;
  MethodId b;
  double delta = 0.0;
  double bound = 0.0;
  bool pass = false;
};

struct VerifySummary {
  double max_delta = 0.0;
  /// Entry with the largest delta / bound.
  std::optional<Comparison> worst;
  int pass_count = 0;
  int fail_count = 0;
  /// Method evaluations (or whole points) that raised instead of returning.
  int error_count = 0;
};

struct VerifyReport {
  static constexpr int kSchemaVersion = 1;

  std::vector<PointReport> points;
  std::vector<Comparison> entries;
  VerifySummary summary;

  bool all_pass() const noexcept { return summary.fail_count == 0 && summary.error_count == 0; }
};

/// Evaluates every applicable method at every point and compares each pair:
/// pass iff |a - b| <= err_a + err_b + 4 eps max(|a|, |b|). Evaluator errors
/// are recorded, never propagated. Points are distributed over `threads`
/// workers (0 = hardware concurrency); results are merged in grid order, so
/// the report does not depend on scheduling.
VerifyReport run_verify(const GridSpec& spec, unsigned threads = 1);

}  // namespace cotlat
