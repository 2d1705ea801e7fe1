#pragma once

// Neumaier-compensated accumulation.  Used wherever a sum must carry more
// effective precision than its accumulator type natively provides.

#include <cmath>

namespace amqft::detail {

template <class Real>
struct CompensatedSum {
  Real sum = 0;
  Real carry = 0;

  void add(Real x) {
    const Real t = sum + x;
    if (std::abs(sum) >= std::abs(x)) {
      carry += (sum - t) + x;
    } else {
      carry += (x - t) + sum;
    }
    sum = t;
  }

  Real value() const { return sum + carry; }
};

}  // namespace amqft::detail
