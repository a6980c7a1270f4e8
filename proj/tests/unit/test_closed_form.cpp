#include <cmath>
#include <numbers>

#include "cotlat/closed_form.hpp"
#include "cotlat/direct_sum.hpp"
#include "doctest.h"
#include "oracles.hpp"

using namespace cotlat;

namespace {

constexpr double pi = std::numbers::pi;

// Explicit n = 3 and n = 4 reductions, written out independently.
Complex u3_explicit(Complex z) {
  const double r3 = std::sqrt(3.0);
  return pi / (3.0 * z * z) *
         (1.0 / std::tan(pi * z) +
          (std::sin(pi * z) + r3 * std::sinh(r3 * pi * z)) / (std::cosh(r3 * pi * z) - std::cos(pi * z)));
}

Complex u4_explicit(Complex z) {
  const double r2 = std::sqrt(2.0);
  const Complex w = r2 * pi * z;
  return pi / (r2 * z * z * z) * (std::sin(w) + std::sinh(w)) / (std::cosh(w) - std::cos(w));
}

}  // namespace

TEST_CASE("kernel tables for n = 1, 2, 4") {
  const auto t1 = kernel_table(SeriesOrder(1));
  REQUIRE(t1.roots().size() == 1);
  CHECK(t1.roots()[0].a == -1.0);
  CHECK(t1.roots()[0].b == 0.0);

  const auto t2 = kernel_table(SeriesOrder(2));
  REQUIRE(t2.roots().size() == 2);
  CHECK(t2.roots()[0].a == doctest::Approx(0.0));
  CHECK(t2.roots()[0].b == doctest::Approx(1.0));
  CHECK(t2.roots()[1].a == doctest::Approx(0.0));
  CHECK(t2.roots()[1].b == doctest::Approx(-1.0));

  const auto t4 = kernel_table(SeriesOrder(4));
  REQUIRE(t4.roots().size() == 4);
  const double s = std::sqrt(0.5);
  CHECK(std::abs(t4.roots()[0].a) == doctest::Approx(s));
  CHECK(std::abs(t4.roots()[0].b) == doctest::Approx(s));
}

TEST_CASE("kernel tables lie on the unit circle and are closed under conjugation") {
  for (int n = 1; n <= 64; ++n) {
    const auto t = kernel_table(SeriesOrder(n));
    REQUIRE(t.roots().size() == static_cast<std::size_t>(n));
    for (const auto& r : t.roots()) {
      CHECK(std::abs(r.a * r.a + r.b * r.b - 1.0) <= 4 * std::numeric_limits<double>::epsilon());
      // (a + ib)^n = -1
      CHECK(std::abs(std::pow(Complex{r.a, r.b}, n) + 1.0) < 1e-12 * n);
      bool mirrored = false;
      for (const auto& q : t.roots()) mirrored = mirrored || (q.a == r.a && q.b == -r.b);
      CHECK(mirrored);
    }
  }
}

TEST_CASE("u_closed classical values") {
  CHECK(std::abs(u_closed(SeriesOrder(1), 0.3).value - pi / std::tan(0.3 * pi)) < 1e-14);
  CHECK(std::abs(u_closed(SeriesOrder(1), 0.3).value - 2.2825006685021987) < 1e-12);
  CHECK(std::abs(u_closed(SeriesOrder(2), 1.0).value - pi / std::tanh(pi)) < 1e-14);
  CHECK(std::abs(u_closed(SeriesOrder(3), 0.5).value - u3_explicit(0.5)) < 1e-12);
  const auto far = u_closed(SeriesOrder(2), 50.0);
  CHECK(is_finite(far.value));
  CHECK(far.value.real() == doctest::Approx(pi / 50.0).epsilon(1e-13));
}

TEST_CASE("u_closed_general reproduces cot and coth on a strip") {
  oracle::Sampler s(1);
  for (int i = 0; i < 200; ++i) {
    const Complex z = s.in_box(0.02, 0.98, -1.0, 1.0);
    CHECK(oracle::rel_err(u_closed_general(SeriesOrder(1), z).value, oracle::pi_cot_pi(z)) <= 1e-10);
    CHECK(oracle::rel_err(u_closed_general(SeriesOrder(2), z).value, oracle::pi_coth_over_z(z)) <= 1e-10);
    CHECK(oracle::rel_err(u_closed_general(SeriesOrder(4), z).value, u4_explicit(z)) <= 1e-9);
    CHECK(oracle::rel_err(u_closed_general(SeriesOrder(3), z).value, u3_explicit(z)) <= 1e-9);
  }
}

TEST_CASE("u_closed fast paths agree with the general loop") {
  oracle::Sampler s(2);
  for (int i = 0; i < 100; ++i) {
    const Complex z = s.in_box(0.05, 3.0, -2.0, 2.0);
    for (int n = 1; n <= 4; ++n) {
      const auto fast = u_closed(SeriesOrder(n), z);
      const auto slow = u_closed_general(SeriesOrder(n), z);
      CAPTURE(n);
      CAPTURE(z);
      CHECK(std::abs(fast.value - slow.value) <= 1e-11 * std::abs(slow.value) + fast.err_estimate + 1e-300);
    }
  }
}

TEST_CASE("u_closed is real on the positive real axis") {
  for (int n = 1; n <= 12; ++n) {
    for (const double x : {0.1, 0.45, 1.3, 2.7, 9.5}) {
      const auto r = u_closed(SeriesOrder(n), x);
      CHECK(r.value.imag() == 0.0);
      CHECK(std::abs(u_closed_general(SeriesOrder(n), x).value.imag()) <= 1e-12 * std::abs(r.value));
    }
  }
}

TEST_CASE("u_closed is conjugate-symmetric") {
  oracle::Sampler s(9);
  for (int i = 0; i < 50; ++i) {
    const Complex z = s.in_box(0.05, 4.0, -3.0, 3.0);
    for (int n = 1; n <= 9; ++n) {
      const auto a = u_closed(SeriesOrder(n), z).value;
      const auto b = u_closed(SeriesOrder(n), std::conj(z)).value;
      CHECK(std::abs(a - std::conj(b)) <= 1e-12 * std::abs(a));
    }
  }
}

TEST_CASE("u_closed agrees with brute-force sums on a complex grid") {
  const Complex zs[] = {0.3, 1.7, {0.4, 0.9}, {-1.3, 0.6}, {2.2, -1.1}, {0.05, 0.02}};
  for (int n = 1; n <= 8; ++n) {
    for (const Complex z : zs) {
      CAPTURE(n);
      CAPTURE(z);
      const auto r = u_closed(SeriesOrder(n), z);
      const Complex ref = oracle::lattice_sum(n, z, 100'000);
      CHECK(std::abs(r.value - ref) <= 1e-10 * std::abs(ref) + 1e-12);
      CHECK(r.work == n);
    }
  }
}

TEST_CASE("u_closed stays finite where cosh overflows") {
  for (int n = 1; n <= 10; ++n) {
    for (const double x : {60.5, 150.25, 300.75}) {
      const auto r = u_closed(SeriesOrder(n), x);
      CHECK(is_finite(r.value));
      CHECK(std::isfinite(r.err_estimate));
    }
  }
  // Leading behaviour of the closed form at large real z for n = 2: pi / z.
  CHECK(u_closed_general(SeriesOrder(2), 300.0).value.real() == doctest::Approx(pi / 300.0).epsilon(1e-13));
}

TEST_CASE("root kernel poles and domain errors") {
  try {
    root_kernel(1.0, -1.0, 0.0);
    FAIL("expected KernelSingular");
  } catch (const EvalError& e) {
    CHECK(e.kind() == ErrorKind::KernelSingular);
  }
  const auto k = root_kernel(0.3, -1.0, 0.0);
  // n = 1 kernel is cot(pi z) once multiplied by pi.
  CHECK(std::abs(pi * k.value - oracle::pi_cot_pi(0.3)) < 1e-13);
  CHECK_THROWS_AS(u_closed(SeriesOrder(2), 0.0), EvalError);
  CHECK_THROWS_AS(u_closed(SeriesOrder(1), -4.0), EvalError);
  CHECK_THROWS_AS(u_closed_general(SeriesOrder(3), -2.0), EvalError);
}

TEST_CASE("unit-circle parts at theta = pi/2 give -i pi coth pi for n = 1") {
  const auto p = unit_circle_parts(SeriesOrder(1), pi / 2);
  CHECK(std::abs(p.re) < 1e-10);
  CHECK(std::abs(p.im + pi / std::tanh(pi)) <= p.err_estimate);
}

TEST_CASE("unit-circle parts match u_closed at e^{i theta}") {
  for (int n = 1; n <= 6; ++n) {
    for (const double theta : {pi / 7, pi / 5, 0.4, 2.0}) {
      // e^{i theta} is a pole when cos(n theta) = -1 (or +1 for odd n).
      if (std::abs(std::cos(n * theta)) > 1.0 - 1e-9) continue;
      const auto p = unit_circle_parts(SeriesOrder(n), theta);
      const auto c = u_closed(SeriesOrder(n), std::polar(1.0, theta));
      CAPTURE(n);
      CAPTURE(theta);
      CHECK(std::abs(Complex{p.re, p.im} - c.value) <= p.err_estimate + c.err_estimate + 1e-12);
      CHECK(p.err_estimate <= 1e-9);
    }
  }
}

TEST_CASE("unit-circle parts reject a vanishing denominator") {
  // e^{i pi} = -1 is a pole of U_1.
  try {
    unit_circle_parts(SeriesOrder(1), pi);
    FAIL("expected DomainError");
  } catch (const EvalError& e) {
    CHECK(e.kind() == ErrorKind::DomainError);
  }
}
