#pragma once

// Metered floating-point arithmetic.  Every helper performs the operation
// and tallies it, so recorded counts are exactly the operations executed.

#include "amqft/opmeter.hpp"

namespace amqft::detail {

class Tally {
 public:
  explicit Tally(OpMeter* meter) : meter_(meter) {}

  double add(double a, double b) {
    if (meter_) ++meter_->adds;
    return a + b;
  }
  double sub(double a, double b) {
    if (meter_) ++meter_->adds;
    return a - b;
  }
  double mul(double a, double b) {
    if (meter_) ++meter_->muls;
    return a * b;
  }
  // Multiplication by 0.5: a pure exponent decrement, metered separately.
  double halve(double a) {
    if (meter_) ++meter_->binary_translations;
    return 0.5 * a;
  }

 private:
  OpMeter* meter_;
};

}  // namespace amqft::detail
