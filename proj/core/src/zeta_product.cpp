#include "cotlat/zeta_product.hpp"

#include <cmath>
#include <limits>
#include <numbers>
#include <string>

#include "cotlat/closed_form.hpp"
#include "cotlat/compensated.hpp"
#include "cotlat/detail/scaled.hpp"
#include "cotlat/detail/tail.hpp"

namespace cotlat {

namespace {

constexpr double kEps = std::numeric_limits<double>::epsilon();

void require_positive_order(int n, const char* who) {
  if (n < 1) {
    throw EvalError(ErrorKind::DomainError, std::string(who) + ": n must be >= 1, got " + std::to_string(n));
  }
}

}  // namespace

EvalResult zeta_even(int n, const Tolerance& tol) {
  tol.validate();
  require_positive_order(n, "zeta_even");
  const int p = 2 * n;
  CompensatedSum<double> sum;
  double abs_sum = 0.0;
  std::int64_t K = 16;
  std::int64_t done = 0;
  for (;;) {
    if (K > tol.max_terms) {
      throw EvalError(ErrorKind::NonConvergent, "zeta_even: max_terms reached before tolerance");
    }
    for (std::int64_t k = done + 1; k <= K; ++k) {
      const double term = 1.0 / ipow(static_cast<double>(k), static_cast<unsigned>(p));
      sum += term;
      abs_sum += term;
    }
    done = K;
    const auto tail = detail::midpoint_tail(Complex{1.0, 0.0}, p, Complex{0.0, 0.0}, K);
    const double value = sum.value() + tail.value.real();
    const double err = tail.bound + (p + 4.0) * kEps * abs_sum;
    if (err <= tol.target(value)) {
      return {Complex{value, 0.0}, err, MethodId::DirectSum, K};
    }
    K *= 2;
  }
}

ZetaExtraction zeta_limit_extrapolation(int n) {
  require_positive_order(n, "zeta_limit_extrapolation");
  ZetaExtraction out;
  out.n = n;
  const auto e = static_cast<unsigned>(2 * n);
  const SeriesOrder order(2 * n);
  for (int j = 3; j <= 10; ++j) {
    const double z = std::ldexp(1.0, -j);
    const double inv = ipow(1.0 / z, e);
    if (!std::isfinite(inv)) break;
    EvalResult r;
    try {
      r = u_closed(order, Complex{z, 0.0});
    } catch (const EvalError&) {
      break;
    }
    const double diff = r.value.real() - inv;
    out.samples.push_back({z, diff, r.err_estimate + kEps * std::abs(diff)});
  }
  if (out.samples.empty()) {
    out.extrapolated = std::numeric_limits<double>::quiet_NaN();
    out.err_estimate = std::numeric_limits<double>::infinity();
    return out;
  }

  // Richardson in h = z^{2n}; consecutive h shrink by rho = 2^{2n}.
  const double rho = std::ldexp(1.0, 2 * n);
  const std::size_t m = out.samples.size();
  std::vector<std::vector<double>> table(m), noise(m);
  double best = out.samples[0].difference;
  double best_err = std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < m; ++i) {
    table[i].push_back(out.samples[i].difference);
    noise[i].push_back(out.samples[i].err);
    if (i > 0) {
      const double e0 = std::abs(table[i][0] - table[i - 1][0]) + noise[i][0];
      if (e0 < best_err) {
        best_err = e0;
        best = table[i][0];
      }
    }
    double factor = 1.0;
    for (std::size_t k = 1; k <= i; ++k) {
      factor *= rho;
      const double prev = table[i][k - 1];
      const double up = table[i - 1][k - 1];
      const double value = prev + (prev - up) / (factor - 1.0);
      const double nz = noise[i][k - 1] + (noise[i][k - 1] + noise[i - 1][k - 1]) / (factor - 1.0);
      table[i].push_back(value);
      noise[i].push_back(nz);
      const double est = std::max(std::abs(value - prev), std::abs(value - up)) + nz;
      if (est < best_err) {
        best_err = est;
        best = value;
      }
    }
  }
  // U_{2n}(z) - z^{-2n} -> 2 zeta(2n)
  out.extrapolated = 0.5 * best;
  out.err_estimate = 0.5 * best_err;
  return out;
}

ProductQuery::ProductQuery(int order, double lo, double hi) : n(order), x(lo), y(hi) {
  if (n < 1) throw EvalError(ErrorKind::DomainError, "product: n must be >= 1");
  if (!(x > 0.0 && x < 1.0 && y > 0.0 && y < 1.0)) {
    throw EvalError(ErrorKind::DomainError, "product: x and y must lie in (0, 1)");
  }
  if (!(x <= y)) throw EvalError(ErrorKind::DomainError, "product: requires x <= y");
}

namespace {

EvalResult product_lhs(const ProductQuery& q, const Tolerance& tol) {
  const auto e = static_cast<unsigned>(q.n);
  const bool odd = (q.n % 2) != 0;
  const double xn = ipow(q.x, e), yn = ipow(q.y, e);
  const double x2n = xn * xn, y2n = yn * yn;
  // Paired logs: even n  2 log1p(c / (k^n + x^n)),        c = y^n - x^n,
  //              odd n   log1p(-c / (k^{2n} - x^{2n})),   c = y^{2n} - x^{2n}.
  const double c = odd ? y2n - x2n : yn - xn;
  const double c_rel = odd ? (y2n + x2n) / c : (yn + xn) / c;
  const int p = odd ? 2 * q.n : q.n;

  CompensatedSum<double> sum;
  sum += q.n * (std::log(q.y) - std::log(q.x));
  double abs_sum = std::abs(q.n * (std::log(q.y) - std::log(q.x)));
  double rounding = 4.0 * kEps * abs_sum;

  std::int64_t K = 16;
  std::int64_t done = 0;
  EvalResult out{};
  for (;;) {
    for (std::int64_t k = done + 1; k <= K; ++k) {
      const double kn = ipow(static_cast<double>(k), e);
      const double term = odd ? std::log1p(-c / (kn * kn - x2n)) : 2.0 * std::log1p(c / (kn + xn));
      sum += term;
      abs_sum += std::abs(term);
      rounding += std::abs(term) * kEps * (6.0 + c_rel);
    }
    done = K;

    // Bracket sum_{k>K} |L_k| between m_lo c S_lo and m_hi c S_hi, with
    // S = sum_{k>K} k^{-p} in [int_K^inf - K^{-p}/2, int_{K+1/2}^inf] (convexity).
    const double Kd = static_cast<double>(K);
    const double Kp = std::pow(Kd, p);
    const double s_lo = Kd / Kp / (p - 1) - 0.5 / Kp;
    const double s_hi = std::pow(Kd + 0.5, 1 - p) / (p - 1);
    double lo, hi;
    if (odd) {
      const double uK = c / (Kp - x2n);
      lo = c * s_lo;
      hi = c * s_hi / ((1.0 - x2n / Kp) * (1.0 - uK));
    } else {
      lo = 2.0 * c * s_lo * (1.0 - c / (2.0 * Kp)) / (1.0 + xn / Kp);
      hi = 2.0 * c * s_hi;
    }
    const double sign = odd ? -1.0 : 1.0;
    const double tail_mid = sign * 0.5 * (lo + hi);
    const double tail_half = 0.5 * (hi - lo);

    const double log_value = 2.0 * (sum.value() + tail_mid);
    const double value = std::exp(log_value);
    const double log_err = 2.0 * (tail_half + rounding + 2.0 * kEps * abs_sum);
    const double err = value * std::expm1(log_err) + 2.0 * kEps * value * (1.0 + std::abs(log_value));
    out = {Complex{value, 0.0}, err, MethodId::DirectSum, 2 * K + 1};
    if (err <= tol.target(value) || 4 * K + 1 > tol.max_terms) return out;
    K *= 2;
  }
}

EvalResult product_rhs(const ProductQuery& q) {
  const KernelTable table{SeriesOrder(q.n)};
  CompensatedSum<double> log_sum;
  double rel = 0.0;
  double abs_log = 0.0;
  for (const auto& root : table.roots()) {
    // cosh(2 pi s b) - cos(2 pi s a) = 2 |sinh(pi s (b + i a))|^2 for real s.
    const Complex wy = std::numbers::pi * q.y * Complex{root.b, root.a};
    const Complex wx = std::numbers::pi * q.x * Complex{root.b, root.a};
    const double ly = detail::log_abs_sinh(wy);
    const double lx = detail::log_abs_sinh(wx);
    log_sum += 2.0 * (ly - lx);
    abs_log += 2.0 * (std::abs(ly) + std::abs(lx));
    for (const Complex w : {wx, wy}) {
      rel += 8.0 * kEps * (2.0 + std::abs(w) / std::abs(detail::scaled_sinh(w)));
    }
  }
  const double log_value = log_sum.value();
  const double value = std::exp(log_value);
  const double err = value * (rel + 2.0 * kEps * (abs_log + std::abs(log_value) + 1.0));
  return {Complex{value, 0.0}, err, MethodId::ClosedForm, q.n};
}

}  // namespace

ProductEvaluation product_ratio_both(const ProductQuery& query, const Tolerance& tol) {
  tol.validate();
  if (query.x == query.y) {
    return {{Complex{1.0, 0.0}, 0.0, MethodId::DirectSum, 0}, {Complex{1.0, 0.0}, 0.0, MethodId::ClosedForm, 0}};
  }
  return {product_lhs(query, tol), product_rhs(query)};
}

EvalResult product_ratio(const ProductQuery& query, const Tolerance& tol) {
  const auto both = product_ratio_both(query, tol);
  EvalResult out = both.rhs;
  out.err_estimate = std::abs(both.lhs.value - both.rhs.value) + both.lhs.err_estimate + both.rhs.err_estimate;
  out.work = both.lhs.work + both.rhs.work;
  return out;
}

}  // namespace cotlat
