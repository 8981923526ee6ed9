#pragma once

#include <cmath>
#include <complex>

namespace commutant::detail {

// Neumaier variant of Kahan summation.
struct CompensatedSum {
  double sum = 0.0;
  double comp = 0.0;

  void add(double x) {
    double t = sum + x;
    if (std::abs(sum) >= std::abs(x)) {
      comp += (sum - t) + x;
    } else {
      comp += (x - t) + sum;
    }
    sum = t;
  }

  double value() const { return sum + comp; }
};

struct CompensatedComplexSum {
  CompensatedSum re;
  CompensatedSum im;

  void add(std::complex<double> z) {
    re.add(z.real());
    im.add(z.imag());
  }

  std::complex<double> value() const { return {re.value(), im.value()}; }
};

}  // namespace commutant::detail
