#include "cotlat/verify.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <limits>
#include <thread>

#include "cotlat/closed_form.hpp"
#include "cotlat/direct_sum.hpp"
#include "cotlat/dyadic.hpp"
#include "cotlat/theta.hpp"

namespace cotlat {

namespace {

int dyadic_level(int n) noexcept {
  if (n < 2 || (n & (n - 1)) != 0) return 0;
  int m = 0;
  while ((1 << m) < n) ++m;
  return m;
}

PointReport evaluate_point(const GridPoint& point, const std::vector<MethodId>& methods, const Tolerance& tol) {
  PointReport report{point, DomainStatus::Ok, {}};
  if (point.n < 1) {
    report.domain = DomainStatus::Excluded;
    report.outcomes.push_back({methods.empty() ? MethodId::DirectSum : methods.front(), std::nullopt,
                               ErrorKind::DomainError, "series order must be >= 1"});
    return report;
  }
  report.domain = validate_domain(SeriesOrder(point.n), point.z);
  if (report.domain != DomainStatus::Ok) {
    report.outcomes.push_back({methods.empty() ? MethodId::DirectSum : methods.front(), std::nullopt,
                               ErrorKind::DomainError,
                               point.n % 2 == 0 && point.z == Complex{} ? "domain: z=0 excluded for even n"
                                                                        : "domain: pole of U_n"});
    return report;
  }
  for (const MethodId m : methods) {
    if (!method_applicable(m, point.n, point.z)) continue;
    MethodOutcome outcome{m, std::nullopt, std::nullopt, {}};
    try {
      outcome.result = evaluate(m, point.n, point.z, tol);
    } catch (const EvalError& e) {
      outcome.error = e.kind();
      outcome.message = e.what();
    }
    report.outcomes.push_back(std::move(outcome));
  }
  return report;
}

}  // namespace

GridSpec GridSpec::cartesian(const std::vector<int>& n_values, const std::vector<Complex>& z_points,
                             std::vector<MethodId> methods, Tolerance tol) {
  GridSpec spec;
  for (const int n : n_values) {
    for (const Complex z : z_points) spec.points.push_back({n, z});
  }
  spec.methods = std::move(methods);
  spec.tol = tol;
  return spec;
}

bool method_applicable(MethodId method, int n, Complex z) noexcept {
  switch (method) {
    case MethodId::DirectSum:
    case MethodId::ClosedForm:
      return n >= 1;
    case MethodId::DyadicRecursion: {
      const int m = dyadic_level(n);
      return m >= 1 && m <= kMaxDyadicLevel;
    }
    case MethodId::ThetaIntegral:
      return n >= 2 && n % 2 == 0 && ipow(z, static_cast<unsigned>(n)).real() > 0.0;
  }
  return false;
}

EvalResult evaluate(MethodId method, int n, Complex z, const Tolerance& tol) {
  if (!method_applicable(method, n, z)) {
    throw EvalError(ErrorKind::DomainError, std::string("method ") + std::string(to_string(method)) +
                                                " does not apply to n=" + std::to_string(n));
  }
  switch (method) {
    case MethodId::DirectSum:
      return u_direct(SeriesOrder(n), z, tol);
    case MethodId::ClosedForm:
      return u_closed(SeriesOrder(n), z, tol);
    case MethodId::DyadicRecursion:
      return phi(dyadic_level(n), z, tol, MethodId::ClosedForm);
    case MethodId::ThetaIntegral:
      return u_theta(SeriesOrder(n / 2), z, tol);
  }
  throw EvalError(ErrorKind::DomainError, "unknown method");
}

VerifyReport run_verify(const GridSpec& spec, unsigned threads) {
  spec.tol.validate();
  VerifyReport report;
  report.points.resize(spec.points.size());

  if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
  threads = std::min<unsigned>(threads, static_cast<unsigned>(std::max<std::size_t>(1, spec.points.size())));
  std::atomic<std::size_t> next{0};
  auto worker = [&]() {
    for (std::size_t i = next++; i < spec.points.size(); i = next++) {
      report.points[i] = evaluate_point(spec.points[i], spec.methods, spec.tol);
    }
  };
  if (threads <= 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    for (unsigned t = 0; t < threads; ++t) pool.emplace_back(worker);
  }

  constexpr double kEps = std::numeric_limits<double>::epsilon();
  auto& summary = report.summary;
  double worst_ratio = -1.0;
  for (const auto& point : report.points) {
    for (std::size_t i = 0; i < point.outcomes.size(); ++i) {
      const auto& a = point.outcomes[i];
      if (!a.result) {
        ++summary.error_count;
        continue;
      }
      for (std::size_t j = i + 1; j < point.outcomes.size(); ++j) {
        const auto& b = point.outcomes[j];
        if (!b.result) continue;
        const double delta = std::abs(a.result->value - b.result->value);
        const double scale = std::max(std::abs(a.result->value), std::abs(b.result->value));
        const double bound = a.result->err_estimate + b.result->err_estimate + 4.0 * kEps * scale;
        Comparison c{point.point, a.method, b.method, delta, bound, delta <= bound};
        (c.pass ? summary.pass_count : summary.fail_count)++;
        summary.max_delta = std::max(summary.max_delta, delta);
        const double ratio = bound > 0.0 ? delta / bound : (delta > 0.0 ? std::numeric_limits<double>::infinity() : 0.0);
        if (ratio > worst_ratio) {
          worst_ratio = ratio;
          summary.worst = c;
        }
        report.entries.push_back(c);
      }
    }
  }
  return report;
}

}  // namespace cotlat
