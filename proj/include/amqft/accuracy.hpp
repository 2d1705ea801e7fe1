#pragma once

// Numerical-accuracy harness.
//
// Each variant is run on seeded random inputs and compared against the
// extended-precision exhaustive reference; errors are relative L2 distances
// accumulated in long double.  Inputs are seeded per (kind, size, trial) so
// every variant sees identical data.  ordering_check additionally evaluates
// the expected error split between the cosine-modulated variants (1..4) and
// the sine-modulated ones (5..8), and verifies that the reference itself is
// accurate enough to support the comparison.

#include <array>
#include <cstdint>

#include "amqft/signal.hpp"
#include "amqft/variants.hpp"

namespace amqft {

struct AccuracyCell {
  int variant = 0;
  TransformKind kind = TransformKind::Cdft;
  std::size_t n = 0;
  int trials = 0;
  double mean_rel_err = 0.0;
  double max_rel_err = 0.0;
};

// Error statistics for one variant at one size.
AccuracyCell measure_accuracy(VariantId v, TransformKind kind, std::size_t n,
                              int trials, std::uint64_t seed);

struct OrderingReport {
  TransformKind kind = TransformKind::Cdft;
  std::size_t n = 0;
  int trials = 0;
  std::array<double, 8> mean_err{};  // index = variant number - 1
  std::array<double, 8> max_err{};

  // Mean distance between two extended-precision evaluations of the same
  // sums taken in opposite accumulation orders; bounds the noise the
  // reference itself carries at this size.
  double reference_self_err = 0.0;
  // True when that reference noise sits at least a decade below the most
  // accurate variant, i.e. the comparison below can be trusted.
  bool reference_trustworthy = false;

  bool families_ordered = false;  // worst of 1..4 below best of 5..8
  bool families_margin = false;   // with a full factor-10 gap
  bool v2_best_of_cosine = false; // variant 2 at or below variants 1 and 3
};

OrderingReport ordering_check(TransformKind kind, std::size_t n, int trials,
                              std::uint64_t seed);

}  // namespace amqft
