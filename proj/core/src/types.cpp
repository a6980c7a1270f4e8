#include "cotlat/types.hpp"

#include <cmath>
#include <string>

namespace cotlat {

void Tolerance::validate() const {
  if (!(abs_tol >= 0.0) || !(rel_tol >= 0.0) || !(abs_tol + rel_tol > 0.0)) {
    throw std::invalid_argument("tolerance: need abs_tol, rel_tol >= 0 with at least one positive");
  }
  if (max_terms < 1 || max_nodes < 1) {
    throw std::invalid_argument("tolerance: max_terms and max_nodes must be positive");
  }
}

std::string_view to_string(MethodId m) noexcept {
  switch (m) {
    case MethodId::DirectSum: return "DirectSum";
    case MethodId::ClosedForm: return "ClosedForm";
    case MethodId::DyadicRecursion: return "DyadicRecursion";
    case MethodId::ThetaIntegral: return "ThetaIntegral";
  }
  return "?";
}

MethodId method_from_string(std::string_view s) {
  if (s == "DirectSum" || s == "direct") return MethodId::DirectSum;
  if (s == "ClosedForm" || s == "closed") return MethodId::ClosedForm;
  if (s == "DyadicRecursion" || s == "dyadic") return MethodId::DyadicRecursion;
  if (s == "ThetaIntegral" || s == "theta") return MethodId::ThetaIntegral;
  throw std::invalid_argument("unknown method '" + std::string(s) + "'");
}

std::string_view to_string(ErrorKind k) noexcept {
  switch (k) {
    case ErrorKind::DomainError: return "DomainError";
    case ErrorKind::NonConvergent: return "NonConvergent";
    case ErrorKind::InvalidCutoff: return "InvalidCutoff";
    case ErrorKind::KernelSingular: return "KernelSingular";
    case ErrorKind::RecursionPole: return "RecursionPole";
    case ErrorKind::QuadratureFailure: return "QuadratureFailure";
  }
  return "?";
}

std::string_view to_string(DomainStatus s) noexcept {
  switch (s) {
    case DomainStatus::Ok: return "ok";
    case DomainStatus::Pole: return "pole";
    case DomainStatus::Excluded: return "excluded";
  }
  return "?";
}

Complex ipow(Complex z, unsigned e) noexcept {
  Complex result{1.0, 0.0};
  while (e != 0) {
    if (e & 1u) result *= z;
    e >>= 1;
    if (e != 0) z *= z;
  }
  return result;
}

double ipow(double x, unsigned e) noexcept {
  double result = 1.0;
  while (e != 0) {
    if (e & 1u) result *= x;
    e >>= 1;
    if (e != 0) x *= x;
  }
  return result;
}

namespace {
constexpr double kPoleEps = 1e-12;
}

DomainStatus validate_domain(SeriesOrder n, Complex z) noexcept {
  if (!is_finite(z)) return DomainStatus::Pole;
  const auto e = static_cast<unsigned>(n.value());
  if (z == Complex{0.0, 0.0}) {
    return n.is_even() ? DomainStatus::Excluded : DomainStatus::Pole;
  }
  const Complex zn = ipow(z, e);
  if (!is_finite(zn)) return DomainStatus::Ok;  // |z|^n beyond range; no integer k reaches it
  const double scale = std::max(1.0, std::abs(zn));
  // |k^n + z^n| can only be small when |k| is close to |z|, so the
  // window |k| <= |z| + 2 reduces to the integers adjacent to |z|. The k = 0
  // term 1/z^n loses no accuracy for small z and is only singular at z = 0.
  const double centre = std::round(std::abs(z));
  for (double m = std::max(1.0, centre - 1.0); m <= centre + 1.0; m += 1.0) {
    for (const double k : {m, -m}) {
      const double kn = ipow(k, e);
      if (std::abs(kn + zn) < kPoleEps * scale) return DomainStatus::Pole;
    }
  }
  return DomainStatus::Ok;
}

void require_domain(SeriesOrder n, Complex z) {
  switch (validate_domain(n, z)) {
    case DomainStatus::Ok:
      return;
    case DomainStatus::Excluded:
      throw EvalError(ErrorKind::DomainError, "domain: z=0 excluded for even n");
    case DomainStatus::Pole:
      throw EvalError(ErrorKind::DomainError,
                      "domain: k^n + z^n vanishes for some integer k (n=" +
                          std::to_string(n.value()) + ")");
  }
}

}  // namespace cotlat
