#include "cotlat_cli/bench.hpp"

#include <algorithm>
#include <chrono>
#include <limits>

namespace cotlat::cli {

std::vector<BenchRow> run_bench(const std::vector<GridPoint>& points, const std::vector<MethodId>& methods,
                                const Tolerance& tol, int repeats) {
  using clock = std::chrono::steady_clock;
  std::vector<BenchRow> rows;
  for (const auto& p : points) {
    for (const MethodId m : methods) {
      if (!method_applicable(m, p.n, p.z)) continue;
      BenchRow row{p, m, {}, 0, false, ErrorKind::DomainError};
      std::int64_t best = std::numeric_limits<std::int64_t>::max();
      for (int r = 0; r < std::max(1, repeats); ++r) {
        const auto t0 = clock::now();
        try {
          row.result = evaluate(m, p.n, p.z, tol);
        } catch (const EvalError& e) {
          row.failed = true;
          row.error = e.kind();
          break;
        }
        const auto ns = std::chrono::duration_cast<std::chrono::nanoseconds>(clock::now() - t0).count();
        best = std::min<std::int64_t>(best, ns);
      }
      row.wall_time_ns = row.failed ? 0 : best;
      rows.push_back(row);
    }
  }
  return rows;
}

}  // namespace cotlat::cli
