#pragma once

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>

namespace cotlat {

using Complex = std::complex<double>;

inline bool is_finite(const Complex& z) noexcept {
  return std::isfinite(z.real()) && std::isfinite(z.imag());
}

/// Exponent n of the lattice sum  sum_k 1/(k^n + z^n).
class SeriesOrder {
 public:
  explicit SeriesOrder(int n) : n_(n) {
    if (n < 1) {
      throw std::invalid_argument("series order must be >= 1, got " + std::to_string(n));
    }
    odd_ = (n % 2) != 0;
  }

  int value() const noexcept { return n_; }
  bool is_odd() const noexcept { return odd_; }
  bool is_even() const noexcept { return !odd_; }

  friend bool operator==(const SeriesOrder&, const SeriesOrder&) = default;

 private:
  int n_;
  bool odd_;
};

/// Accuracy targets and work caps shared by every evaluator.
///
/// An evaluator stops once its error bound drops below
/// max(abs_tol, rel_tol * |value|); the caps bound the work it may spend
/// trying.
struct Tolerance {
  double abs_tol = 1e-10;
  double rel_tol = 1e-10;
  std::int64_t max_terms = 10'000'000;
  std::int64_t max_nodes = 100'000;

  double target(double magnitude) const noexcept {
    return std::max(abs_tol, rel_tol * magnitude);
  }

  /// Throws std::invalid_argument when no target is active or a cap is not positive.
  void validate() const;
};

enum class MethodId { DirectSum, ClosedForm, DyadicRecursion, ThetaIntegral };

std::string_view to_string(MethodId m) noexcept;
/// Accepts the canonical names plus the CLI short forms (direct, closed, dyadic, theta).
MethodId method_from_string(std::string_view s);

inline constexpr MethodId kAllMethods[] = {MethodId::DirectSum, MethodId::ClosedForm,
                                           MethodId::DyadicRecursion, MethodId::ThetaIntegral};

struct EvalResult {
  Complex value{};
  double err_estimate = 0.0;
  MethodId method = MethodId::DirectSum;
  /// Terms summed, kernel terms evaluated, or quadrature nodes used.
  std::int64_t work = 0;
};

enum class ErrorKind {
  DomainError,
  NonConvergent,
  InvalidCutoff,
  KernelSingular,
  RecursionPole,
  QuadratureFailure,
};

std::string_view to_string(ErrorKind k) noexcept;

/// The single exception type thrown by evaluators. `kind()` distinguishes
/// bad input (DomainError, InvalidCutoff) from numerical failure.
class EvalError : public std::runtime_error {
 public:
  EvalError(ErrorKind kind, const std::string& what) : std::runtime_error(what), kind_(kind) {}
  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

enum class DomainStatus { Ok, Pole, Excluded };

std::string_view to_string(DomainStatus s) noexcept;

/// Classifies (n, z): `Excluded` for even n at z = 0, `Pole` when
/// k^n + z^n vanishes (relative to max(1, |z|^n)) for an integer k with
/// |k| <= |z| + 2, `Ok` otherwise. Non-finite z is reported as a pole.
DomainStatus validate_domain(SeriesOrder n, Complex z) noexcept;

/// Throws EvalError(DomainError) unless validate_domain(n, z) is Ok.
void require_domain(SeriesOrder n, Complex z);

/// z^e by binary exponentiation, e >= 0.
Complex ipow(Complex z, unsigned e) noexcept;
double ipow(double x, unsigned e) noexcept;

}  // namespace cotlat
