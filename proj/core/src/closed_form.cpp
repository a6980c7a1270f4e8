#include "cotlat/closed_form.hpp"

#include <cmath>
#include <complex>
#include <limits>
#include <numbers>
#include <string>

#include "cotlat/compensated.hpp"
#include "cotlat/detail/scaled.hpp"
#include "cotlat/detail/tail.hpp"

namespace cotlat {

namespace {

constexpr double kEps = std::numeric_limits<double>::epsilon();
constexpr double kPi = std::numbers::pi;
constexpr double kSingEps = 1e-12;

// Kernels are evaluated in extended precision and rounded once at the end.
using Ext = long double;
using ExtComplex = std::complex<Ext>;
constexpr Ext kPiExt = std::numbers::pi_v<Ext>;
constexpr double kEpsExt = static_cast<double>(std::numeric_limits<Ext>::epsilon());

template <class R>
struct CosSin {
  R c;
  R s;
};

// (cos, sin) of pi * num / den for 0 <= num <= 2 den, folding the angle into
// [0, pi/4] with exact integer arithmetic so that symmetric roots agree bitwise.
template <class R>
CosSin<R> unit_root(long long num, long long den) {
  if (num > den) {
    const auto r = unit_root<R>(2 * den - num, den);
    return {r.c, -r.s};
  }
  if (2 * num > den) {
    const auto r = unit_root<R>(den - num, den);
    return {-r.c, r.s};
  }
  if (4 * num > den) {
    const auto r = unit_root<R>(den - 2 * num, 2 * den);
    return {r.s, r.c};
  }
  const R t = std::numbers::pi_v<R> * static_cast<R>(num) / static_cast<R>(den);
  return {std::cos(t), std::sin(t)};
}

void check_kernel_poles(Complex z, double a, double b) {
  for (const Complex alpha : {z * Complex{a, b}, z * Complex{a, -b}}) {
    const double m = std::round(alpha.real());
    if (m != 0.0 && std::abs(alpha - m) < kSingEps * std::max(1.0, std::abs(alpha))) {
      throw EvalError(ErrorKind::KernelSingular, "u_closed: kernel denominator vanishes (pole of U_n)");
    }
  }
}

template <class R>
struct Term {
  std::complex<R> value;
  double err;
};

template <class R>
Term<R> kernel(std::complex<R> z, R a, R b) {
  using C = std::complex<R>;
  const double eps = std::numeric_limits<R>::epsilon();
  const R pi = std::numbers::pi_v<R>;
  const C X = R(2) * pi * z * b;
  const C Y = R(2) * pi * z * a;
  const C W1 = pi * z * C{b, a};
  const C W2 = pi * z * C{b, -a};
  const R M = std::abs(W1.real()) + std::abs(W2.real());

  const C iY = C{0, 1} * Y;
  const R gx = std::exp(std::abs(X.real()) - M);
  const R gy = std::exp(std::abs(iY.real()) - M);
  const C sinhX = detail::scaled_sinh(X) * gx;
  const C sinY = C{0, -1} * detail::scaled_sinh(iY) * gy;
  const C s1 = detail::scaled_sinh(W1);
  const C s2 = detail::scaled_sinh(W2);

  const C num = a * sinY + b * sinhX;
  const C den = R(2) * s1 * s2;
  if (den == C{0, 0}) {
    throw EvalError(ErrorKind::KernelSingular, "u_closed: kernel denominator vanishes");
  }
  const C value = num / den;

  const double as1 = static_cast<double>(std::abs(s1)), as2 = static_cast<double>(std::abs(s2));
  // |coth w| <= e^{|Re w|} / |sinh w| = 1 / |scaled sinh w|
  const double rel_den =
      4.0 * eps * (2.0 + static_cast<double>(std::abs(W1)) / as1 + static_cast<double>(std::abs(W2)) / as2);
  const double num_mag = static_cast<double>(std::abs(a) * std::abs(sinY) + std::abs(b) * std::abs(sinhX));
  const double arg_mag = static_cast<double>(1 + std::abs(X) + std::abs(Y));
  const double anum = static_cast<double>(std::abs(num));
  const double aden = static_cast<double>(std::abs(den));
  const double rel_num =
      anum > 0.0 ? 4.0 * eps * (2.0 + arg_mag * num_mag / anum) : std::numeric_limits<double>::infinity();
  const double err = anum > 0.0 ? static_cast<double>(std::abs(value)) * (rel_num + rel_den)
                                : 4.0 * eps * arg_mag * num_mag / aden;
  return {value, err};
}

// pi cot(pi z) or pi coth(pi z) style kernels: 1 / tan(w) or 1 / tanh(w) with
// its absolute error.
Term<Ext> recip_tan(ExtComplex w, bool hyperbolic) {
  const ExtComplex t = hyperbolic ? std::tanh(w) : std::tan(w);
  if (t == ExtComplex{0, 0} || !std::isfinite(std::abs(t))) {
    throw EvalError(ErrorKind::KernelSingular, "u_closed: cot/coth kernel at a pole");
  }
  const ExtComplex inv = Ext(1) / t;
  // d/dw log(cot w) = -(tan w + cot w)
  const double rel = 4.0 * kEpsExt * (2.0 + static_cast<double>(std::abs(w) * std::abs(t + inv)));
  return {inv, rel * static_cast<double>(std::abs(inv))};
}

EvalResult finish(SeriesOrder n, Complex z, ExtComplex kernel_sum, double kernel_err) {
  const int m = n.value();
  ExtComplex zpow = 1;
  for (int i = 1; i < m; ++i) zpow *= ExtComplex(z);
  const ExtComplex pref = kPiExt / (static_cast<Ext>(m) * zpow);
  Complex value(pref * kernel_sum);
  if (z.imag() == 0.0) value.imag(0.0);
  if (!is_finite(value)) {
    throw EvalError(ErrorKind::DomainError, "u_closed: value not representable in double precision");
  }
  // Extended-precision work, then one rounding to double.
  const double err = static_cast<double>(std::abs(pref)) * kernel_err +
                     (m + 4.0) * kEpsExt * std::abs(value) + kEps * std::abs(value);
  return {value, err, MethodId::ClosedForm, m};
}

}  // namespace

KernelTable::KernelTable(SeriesOrder n) : n_(n) {
  const int m = n.value();
  roots_.reserve(static_cast<std::size_t>(m));
  for (int k = 1; k <= m; ++k) {
    const auto cs = unit_root<double>(2LL * k - 1, m);
    roots_.push_back({k, cs.c, cs.s});
  }
}

KernelTerm root_kernel(Complex z, double a, double b) {
  check_kernel_poles(z, a, b);
  const auto t = kernel<double>(z, a, b);
  return {t.value, t.err};
}

EvalResult u_closed_general(SeriesOrder n, Complex z) {
  require_domain(n, z);
  const int m = n.value();
  const KernelTable table(n);
  ExtComplex sum = 0;
  double err = 0.0;
  for (const auto& root : table.roots()) {
    check_kernel_poles(z, root.a, root.b);
    const auto cs = unit_root<Ext>(2LL * root.index - 1, m);
    const auto term = kernel<Ext>(ExtComplex(z), cs.c, cs.s);
    sum += term.value;
    err += term.err + 2.0 * kEpsExt * static_cast<double>(std::abs(term.value));
  }
  return finish(n, z, sum, err);
}

EvalResult u_closed(SeriesOrder n, Complex z, const Tolerance& tol) {
  tol.validate();
  require_domain(n, z);
  const ExtComplex ze(z);
  switch (n.value()) {
    case 1: {
      const auto r = recip_tan(kPiExt * ze, false);
      return finish(n, z, r.value, r.err);
    }
    case 2: {
      const auto r = recip_tan(kPiExt * ze, true);
      // 2 coth(pi z): both conjugate roots contribute coth(pi z)
      return finish(n, z, Ext(2) * r.value, 2.0 * r.err);
    }
    case 3: {
      const auto r = recip_tan(kPiExt * ze, false);
      check_kernel_poles(z, 0.5, std::numbers::sqrt3 / 2.0);
      const auto k = kernel<Ext>(ze, Ext(0.5), std::numbers::sqrt3_v<Ext> / 2);
      return finish(n, z, r.value + Ext(2) * k.value, r.err + 2.0 * k.err);
    }
    case 4: {
      const Ext s = std::numbers::sqrt2_v<Ext> / 2;
      check_kernel_poles(z, static_cast<double>(s), static_cast<double>(s));
      const auto k = kernel<Ext>(ze, s, s);
      return finish(n, z, Ext(4) * k.value, 4.0 * k.err);
    }
    default:
      return u_closed_general(n, z);
  }
}

UnitCircleParts unit_circle_parts(SeriesOrder n, double theta, const Tolerance& tol) {
  tol.validate();
  if (!std::isfinite(theta)) {
    throw EvalError(ErrorKind::DomainError, "unit_circle_parts: theta must be finite");
  }
  const int m = n.value();
  const auto e = static_cast<unsigned>(m);
  const double c = std::cos(m * theta);
  const double s = std::sin(m * theta);

  // Only k = +-1 can make D_k = |k^n + e^{i n theta}|^2 vanish.
  const double d_plus = 2.0 + 2.0 * c;
  const double d_minus = n.is_odd() ? 2.0 - 2.0 * c : d_plus;
  if (std::abs(d_plus) < 1e-12 || std::abs(d_minus) < 1e-12) {
    throw EvalError(ErrorKind::DomainError, "unit_circle_parts: D_k vanishes for k = +-1");
  }

  const Complex w{c, s};  // e^{i n theta}
  const int p = n.is_odd() ? 2 * m : m;
  const Complex tail_c = n.is_odd() ? -2.0 * w : Complex{2.0, 0.0};
  const Complex tail_w = n.is_odd() ? -(w * w) : w;

  CompensatedSum<double> re;
  CompensatedSum<double> im;
  re += c;
  im += -s;
  double abs_sum = 1.0;
  std::int64_t K = 16;
  std::int64_t done = 0;
  for (;;) {
    if (2 * K + 1 > tol.max_terms) {
      throw EvalError(ErrorKind::NonConvergent, "unit_circle_parts: max_terms reached");
    }
    for (std::int64_t k = done + 1; k <= K; ++k) {
      const double kn = ipow(static_cast<double>(k), e);
      const double dp = kn * kn + 2.0 * kn * c + 1.0;
      double tr;
      double ti;
      if (n.is_odd()) {
        const double dm = kn * kn - 2.0 * kn * c + 1.0;
        const double prod = dp * dm;
        tr = 2.0 * c * (1.0 - kn * kn) / prod;
        ti = -2.0 * s * (kn * kn + 1.0) / prod;
      } else {
        tr = 2.0 * (kn + c) / dp;
        ti = -2.0 * s / dp;
      }
      re += tr;
      im += ti;
      abs_sum += std::abs(tr) + std::abs(ti);
    }
    done = K;
    const auto tail = detail::midpoint_tail(tail_c, p, tail_w, K);
    const double r = re.value() + tail.value.real();
    const double i = im.value() + tail.value.imag();
    // Terms near k = +-1 may be ill-conditioned when D_k is small.
    const double cond = 1.0 / std::min(std::abs(d_plus), std::abs(d_minus));
    const double err = tail.bound + 8.0 * kEps * abs_sum * (1.0 + cond);
    if (err <= tol.target(std::hypot(r, i))) {
      return {r, i, err, 2 * K + 1};
    }
    K *= 2;
  }
}

}  // namespace cotlat
