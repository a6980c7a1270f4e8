#pragma once

#include <array>
#include <cmath>
#include <cstdint>
#include <limits>
#include <queue>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include "cotlat/types.hpp"

namespace cotlat::detail {

struct QuadratureResult {
  Complex value;
  double err;
  std::int64_t nodes;
};

// 15-point Kronrod extension of the 7-point Gauss rule on [-1, 1]; even
// indices are the Gauss nodes.
inline constexpr std::array<double, 8> kKronrodNodes = {
    0.00000000000000000e+00, 2.07784955007898468e-01, 4.05845151377397167e-01,
    5.86087235467691130e-01, 7.41531185599394440e-01, 8.64864423359769073e-01,
    9.49107912342758525e-01, 9.91455371120812639e-01};
inline constexpr std::array<double, 8> kKronrodWeights = {
    2.09482141084727828e-01, 2.04432940075298892e-01, 1.90350578064785410e-01,
    1.69004726639267903e-01, 1.40653259715525919e-01, 1.04790010322250184e-01,
    6.30920926299785533e-02, 2.29353220105292250e-02};
// Gauss weights for nodes 0, 2, 4, 6 of the table above.
inline constexpr std::array<double, 4> kGaussWeights = {
    4.17959183673469388e-01, 3.81830050505118945e-01, 2.79705391489276668e-01,
    1.29484966168869693e-01};

struct Panel {
  double lo;
  double hi;
  Complex value;
  double err;

  bool operator<(const Panel& other) const { return err < other.err; }
};

template <typename F>
Panel gauss_kronrod_15(F& f, double lo, double hi) {
  const double centre = 0.5 * (lo + hi);
  const double half = 0.5 * (hi - lo);
  const Complex f0 = f(centre);
  Complex kronrod = kKronrodWeights[0] * f0;
  Complex gauss = kGaussWeights[0] * f0;
  double l1 = kKronrodWeights[0] * std::abs(f0);
  for (std::size_t i = 1; i < kKronrodNodes.size(); ++i) {
    const double dx = half * kKronrodNodes[i];
    const Complex fl = f(centre - dx);
    const Complex fr = f(centre + dx);
    kronrod += kKronrodWeights[i] * (fl + fr);
    l1 += kKronrodWeights[i] * (std::abs(fl) + std::abs(fr));
    if (i % 2 == 0) gauss += kGaussWeights[i / 2] * (fl + fr);
  }
  const double eps = std::numeric_limits<double>::epsilon();
  const double err = std::abs(kronrod - gauss) * half + 50.0 * eps * l1 * half;
  return {lo, hi, kronrod * half, err};
}

/// Globally adaptive Gauss-Kronrod 15 on [lo, hi]: the panel with the largest
/// error is bisected until the summed |K15 - G7| estimate meets
/// max(abs_target, rel_target * |I|). Deterministic for a given integrand.
///
/// Throws EvalError(QuadratureFailure) once max_nodes would be exceeded.
template <typename F>
QuadratureResult integrate_adaptive(F&& f, double lo, double hi, double abs_target, double rel_target,
                                    std::int64_t max_nodes, int initial_panels = 8) {
  constexpr std::int64_t kNodesPerPanel = 15;
  std::priority_queue<Panel> queue;
  std::int64_t nodes = 0;
  const double width = (hi - lo) / initial_panels;
  for (int i = 0; i < initial_panels; ++i) {
    const double a = lo + width * i;
    const double b = (i + 1 == initial_panels) ? hi : lo + width * (i + 1);
    queue.push(gauss_kronrod_15(f, a, b));
    nodes += kNodesPerPanel;
  }

  auto totals = [&queue]() {
    // Summation order follows the heap layout, which depends only on the
    // sequence of pushes, so results are reproducible.
    auto copy = queue;
    Complex value{0.0, 0.0};
    double err = 0.0;
    while (!copy.empty()) {
      value += copy.top().value;
      err += copy.top().err;
      copy.pop();
    }
    return std::pair{value, err};
  };

  auto [value, err] = totals();
  for (;;) {
    if (err <= std::max(abs_target, rel_target * std::abs(value))) {
      // Running totals drift; confirm against a fresh sum before stopping.
      std::tie(value, err) = totals();
      if (err <= std::max(abs_target, rel_target * std::abs(value))) break;
    }
    if (nodes + 2 * kNodesPerPanel > max_nodes) {
      throw EvalError(ErrorKind::QuadratureFailure,
                      "quadrature: node cap " + std::to_string(max_nodes) + " reached before tolerance");
    }
    const Panel worst = queue.top();
    queue.pop();
    const double mid = 0.5 * (worst.lo + worst.hi);
    const Panel left = gauss_kronrod_15(f, worst.lo, mid);
    const Panel right = gauss_kronrod_15(f, mid, worst.hi);
    queue.push(left);
    queue.push(right);
    nodes += 2 * kNodesPerPanel;
    value += (left.value + right.value) - worst.value;
    err += (left.err + right.err) - worst.err;
  }
  return {value, err, nodes};
}

}  // namespace cotlat::detail
