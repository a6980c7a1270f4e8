#pragma once

#include <cmath>
#include <complex>
#include <type_traits>

namespace cotlat {

/// Neumaier's variant of Kahan summation; stays accurate when an addend is
/// larger than the running sum. Complex values are compensated per component.
template <typename T>
class CompensatedSum {
 public:
  void add(T value) noexcept {
    if constexpr (std::is_floating_point_v<T>) {
      add_real(sum_, comp_, value);
    } else {
      auto re = sum_.real(), im = sum_.imag();
      auto cre = comp_.real(), cim = comp_.imag();
      add_real(re, cre, value.real());
      add_real(im, cim, value.imag());
      sum_ = T{re, im};
      comp_ = T{cre, cim};
    }
  }

  CompensatedSum& operator+=(T value) noexcept {
    add(value);
    return *this;
  }

  T value() const noexcept { return sum_ + comp_; }

 private:
  template <typename R>
  static void add_real(R& sum, R& comp, R x) noexcept {
    const R t = sum + x;
    if (std::abs(sum) >= std::abs(x)) {
      comp += (sum - t) + x;
    } else {
      comp += (x - t) + sum;
    }
    sum = t;
  }

  T sum_{};
  T comp_{};
};

}  // namespace cotlat
