#include <cmath>
#include <numbers>

#include "cotlat/zeta_product.hpp"
#include "doctest.h"
#include "oracles.hpp"

using namespace cotlat;

namespace {

constexpr double pi = std::numbers::pi;

double ratio(int n, double x, double y) { return product_ratio(ProductQuery(n, x, y)).value.real(); }

}  // namespace

TEST_CASE("zeta_even against brute force and the classical values") {
  const auto z1 = zeta_even(1);
  CHECK(std::abs(z1.value.real() - oracle::zeta(2, 1'000'000)) < 1e-10);
  CHECK(std::abs(z1.value.real() - pi * pi / 6.0) < 1e-10);
  CHECK(z1.value.imag() == 0.0);
  const auto z2 = zeta_even(2);
  CHECK(std::abs(z2.value.real() - oracle::zeta(4, 100'000)) < 1e-10);
  CHECK(std::abs(z2.value.real() - std::pow(pi, 4) / 90.0) < 1e-10);
  CHECK(std::abs(zeta_even(3).value.real() - std::pow(pi, 6) / 945.0) < 1e-10);
}

TEST_CASE("zeta_even at n = 8") {
  const double v = zeta_even(8).value.real();
  CHECK(std::abs(v - oracle::zeta(16, 1000)) < 1e-14);
  CHECK(v == doctest::Approx(1.0000152822594086).epsilon(1e-15));
  // 1 + 2^-16 alone misses 3^-16 ~ 2.3e-8.
  CHECK(v - (1.0 + std::ldexp(1.0, -16)) == doctest::Approx(std::pow(3.0, -16)).epsilon(1e-2));
}

TEST_CASE("zeta_even rejects n < 1 and honours max_terms") {
  for (const int n : {0, -2}) {
    try {
      zeta_even(n);
      FAIL("expected DomainError");
    } catch (const EvalError& e) {
      CHECK(e.kind() == ErrorKind::DomainError);
    }
  }
  Tolerance tol{1e-15, 1e-15};
  tol.max_terms = 100;
  try {
    zeta_even(1, tol);
    FAIL("expected NonConvergent");
  } catch (const EvalError& e) {
    CHECK(e.kind() == ErrorKind::NonConvergent);
  }
}

TEST_CASE("the z -> 0 limit route approaches zeta(2n)") {
  for (int n = 1; n <= 3; ++n) {
    const auto ex = zeta_limit_extrapolation(n);
    const double ref = zeta_even(n).value.real();
    CAPTURE(n);
    CHECK(!ex.samples.empty());
    CHECK(std::abs(ex.extrapolated - ref) < 1e-6);
    CHECK(std::abs(ex.extrapolated - ref) <= ex.err_estimate + 1e-9);
  }
  CHECK_THROWS_AS(zeta_limit_extrapolation(0), EvalError);
}

TEST_CASE("product ratio at n = 1 is sin^2(pi y) / sin^2(pi x)") {
  CHECK(ratio(1, 0.25, 0.5) == doctest::Approx(2.0).epsilon(1e-12));
  // sqrt of 1 / ratio gives sin(pi/6) = 1/2
  CHECK(std::sqrt(1.0 / ratio(1, 1.0 / 6.0, 0.5)) == doctest::Approx(0.5).epsilon(1e-12));
  CHECK(std::sqrt(ratio(1, 1.0 / 6.0, 1.0 / 3.0)) == doctest::Approx(std::sqrt(3.0)).epsilon(1e-12));
  // sin(0.3 pi) / sin(0.2 pi) = tan(0.3 pi)
  CHECK(std::sqrt(ratio(1, 0.2, 0.3)) == doctest::Approx(std::tan(0.3 * pi)).epsilon(1e-12));
}

TEST_CASE("product ratio at n = 2 against the sinh product") {
  // sinh(pi z) = pi z prod_{k>=1} (1 + z^2/k^2), so prod_{k in Z} ((y^2+k^2)/(x^2+k^2))^2
  // = (sinh(pi y) / sinh(pi x))^4.
  for (const auto& [x, y] : {std::pair{0.25, 0.5}, std::pair{0.1, 0.9}, std::pair{0.4, 0.45}}) {
    const double want = std::pow(std::sinh(pi * y) / std::sinh(pi * x), 4);
    const auto r = product_ratio(ProductQuery(2, x, y));
    CHECK(r.value.real() == doctest::Approx(want).epsilon(1e-12));
    CHECK(r.err_estimate <= 1e-8 * want);
  }
}

TEST_CASE("product ratio agrees with a brute-force product for n = 1..5") {
  for (int n = 1; n <= 5; ++n) {
    for (const auto& [x, y] : {std::pair{0.2, 0.7}, std::pair{0.05, 0.35}}) {
      CAPTURE(n);
      const auto both = product_ratio_both(ProductQuery(n, x, y));
      const double ref = oracle::product_lhs(n, x, y, 200'000);
      CHECK(std::abs(both.rhs.value.real() - ref) <= 1e-9 * ref);
      CHECK(std::abs(both.lhs.value.real() - ref) <= both.lhs.err_estimate + 1e-9 * ref);
      CHECK(both.rhs.work == n);
      CHECK(both.lhs.method == MethodId::DirectSum);
      CHECK(both.rhs.method == MethodId::ClosedForm);
    }
  }
}

TEST_CASE("product ratio is multiplicative along a chain and exactly 1 at x = y") {
  for (int n = 1; n <= 6; ++n) {
    const double ab = ratio(n, 0.2, 0.4), bc = ratio(n, 0.4, 0.6), ac = ratio(n, 0.2, 0.6);
    CHECK(std::abs(ab * bc - ac) <= 1e-10 * ac);
    const auto same = product_ratio(ProductQuery(n, 0.37, 0.37));
    CHECK(same.value == Complex{1.0, 0.0});
    CHECK(same.err_estimate == 0.0);
  }
}

TEST_CASE("product queries validate their range") {
  for (const auto& [x, y] : {std::pair{0.6, 0.5}, std::pair{0.0, 0.5}, std::pair{0.2, 1.0}, std::pair{-0.1, 0.5}}) {
    try {
      ProductQuery(1, x, y);
      FAIL("expected DomainError");
    } catch (const EvalError& e) {
      CHECK(e.kind() == ErrorKind::DomainError);
    }
  }
  CHECK_THROWS_AS(ProductQuery(0, 0.2, 0.3), EvalError);
}
