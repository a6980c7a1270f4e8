#pragma once

#include <cmath>
#include <complex>

#include "cotlat/types.hpp"

namespace cotlat::detail {

/// sinh(w) * exp(-|Re w|); finite for every finite w.
template <class R>
std::complex<R> scaled_sinh(std::complex<R> w) {
  const R r = std::abs(w.real());
  if (r <= R(30)) {
    return std::sinh(w) * std::exp(-r);
  }
  return R(0.5) * (std::exp(w - r) - std::exp(-w - r));
}

/// log|sinh(w)| without overflow.
inline double log_abs_sinh(Complex w) {
  return std::log(std::abs(scaled_sinh(w))) + std::abs(w.real());
}

}  // namespace cotlat::detail
