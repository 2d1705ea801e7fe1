#pragma once

// Cost prediction and measurement.
//
// predicted_cost/predicted_flops evaluate the closed-form operation counts
// of this transform family (exact integer arithmetic; valid for power-of-two
// sizes >= 4).  measure() runs a variant with a meter attached and returns
// what was actually executed.  reference_literature_counts exposes the
// published complex-transform costs of the classic competing algorithms for
// comparison tables.

#include <cstdint>
#include <optional>

#include "amqft/opmeter.hpp"
#include "amqft/variants.hpp"

namespace amqft {

struct CostModel {
  std::int64_t adds = 0;
  std::int64_t muls = 0;
  std::int64_t binary_translations = 0;

  std::int64_t flops_case_a() const { return adds + muls; }
  std::int64_t flops_case_b() const {
    return adds + muls + binary_translations;
  }
  bool operator==(const CostModel&) const = default;
};

enum class FlopCase { A, B };  // A ignores binary translations, B counts them

// Closed-form counts for one transform of size n (power of two, n >= 4; the
// binary-translation form is meaningful for the halving variants 1,3,5,7 —
// the even variants execute zero halvings).
CostModel predicted_cost(TransformKind kind, std::size_t n);

// Closed-form flop totals, evaluated independently of predicted_cost.
std::int64_t predicted_flops(TransformKind kind, std::size_t n, FlopCase c);

// Published competing complex-transform algorithms.
enum class ReferenceAlgorithm {
  SplitRadix42,  // split radix, 4mul/2add complex product
  SplitRadix33,  // split radix, 3mul/3add complex product
  JohnsonFrigo,  // modified split radix
  ClassicalQft,  // the unmodulated recursive predecessor of this family
};

const char* reference_algorithm_name(ReferenceAlgorithm a);

// Published counts (complex transform of size n, n in [4, 2048]).  Fields
// absent from the published record are nullopt.  Values are reproduced
// literally from the published tables.
struct LiteratureCounts {
  std::optional<std::int64_t> adds;
  std::optional<std::int64_t> muls;
  std::optional<std::int64_t> flops;
};

LiteratureCounts reference_literature_counts(ReferenceAlgorithm a,
                                             std::size_t n);

// The published complex-transform columns of this algorithm family itself
// (same range), for cross-checking the predictors against the record.
struct PublishedCdftCounts {
  std::int64_t adds = 0;
  std::int64_t muls = 0;
  std::int64_t flops_case_a = 0;
  std::int64_t flops_case_b = 0;
};

PublishedCdftCounts published_cdft_counts(std::size_t n);

// Executes variant v on a seeded random input of size n and returns the
// exact operation counts.  Counts are input-independent; the seed only
// varies the data flowing through.
OpMeter measure(VariantId v, TransformKind kind, std::size_t n,
                std::uint64_t seed = 1);

}  // namespace amqft
