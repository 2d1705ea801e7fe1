#pragma once

// Arithmetic-operation accounting.
//
// Additions/subtractions count as adds, multiplications as muls, and
// multiplications by 0.5 (exponent decrements) are tracked separately as
// binary translations.  Negations, copies and index arithmetic are free.

#include <cstdint>

namespace amqft {

struct OpMeter {
  std::uint64_t adds = 0;
  std::uint64_t muls = 0;
  std::uint64_t binary_translations = 0;

  std::uint64_t flops_case_a() const { return adds + muls; }
  std::uint64_t flops_case_b() const { return adds + muls + binary_translations; }

  OpMeter& operator+=(const OpMeter& o) {
    adds += o.adds;
    muls += o.muls;
    binary_translations += o.binary_translations;
    return *this;
  }
  friend OpMeter operator+(OpMeter a, const OpMeter& b) { return a += b; }
  bool operator==(const OpMeter&) const = default;
};

}  // namespace amqft
