#pragma once

#include <cstdint>
#include <vector>

#include "cotlat/verify.hpp"

namespace cotlat::cli {

struct BenchRow {
  GridPoint point;
  MethodId method;
  EvalResult result;
  /// Fastest of the repeats.
  std::int64_t wall_time_ns = 0;
  bool failed = false;
  ErrorKind error = ErrorKind::DomainError;
};

/// Times every applicable method at every point, best of `repeats`.
std::vector<BenchRow> run_bench(const std::vector<GridPoint>& points, const std::vector<MethodId>& methods,
                                const Tolerance& tol, int repeats);

}  // namespace cotlat::cli
