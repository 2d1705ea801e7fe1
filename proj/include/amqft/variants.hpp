#pragma once

// The eight fast-transform variants.
//
// Every variant computes CDFT/RDFT/DCT/DST in O(N log N) by recursively
// applying the elaborations of elaborations.hpp.  The variants share the
// whole structural skeleton and differ in two choices only:
//   * which AM conversion rewrites the odd-odd kernel (AmConvert1..8), and
//   * consequently whether the odd-odd stage reduces across harmonics
//     (variants 1,4,5,8) or across time indices (variants 2,3,6,7).
// Variants 5-8 modulate with sines, which swaps the cosine and sine lenses
// below the conversion; variants 1,3,5,7 contain halvings (binary
// translations), variants 2,4,6,8 are halving-free.

#include <cstddef>
#include <cstdint>
#include <vector>

#include "amqft/elaborations.hpp"
#include "amqft/opmeter.hpp"
#include "amqft/signal.hpp"

namespace amqft {

enum class VariantId : int { V1 = 1, V2, V3, V4, V5, V6, V7, V8 };

inline constexpr VariantId kAllVariants[] = {
    VariantId::V1, VariantId::V2, VariantId::V3, VariantId::V4,
    VariantId::V5, VariantId::V6, VariantId::V7, VariantId::V8,
};

int variant_number(VariantId v);
VariantId variant_from_number(int n);  // throws outside 1..8

// True for variants whose top-level reduction splits time parity (the
// odd-odd stage then reduces harmonics); false for the harmonic-first four.
bool time_major(VariantId v);

// The AM conversion this variant uses in its odd-odd stage.
ElaborationId am_conversion(VariantId v);

// The family of modulation constants the variant consumes.
TrigKind modulation_kind(VariantId v);

// True for variants 5-8 (sine modulation flips the lens under the AM stage).
bool sine_modulated(VariantId v);

// True for variants whose recurrences contain halvings (1, 3, 5, 7).
bool uses_binary_translations(VariantId v);

// ---------------------------------------------------------------------------
// Plans.

// The recursive functions a variant wires together.
enum class FunctionId {
  Cdft,
  Rdft,
  Dct,
  Dst,
  DctOddTime,   // cosine lens, odd sample indices
  DstOddTime,
  DctOddHarm,   // cosine lens, odd harmonics
  DstOddHarm,
  DctOddOdd,    // cosine lens, odd samples and odd harmonics
  DstOddOdd,
};

const char* function_name(FunctionId f);
const char* kind_name(TransformKind kind);
SignalType full_type_of(TransformKind kind);
FunctionId function_for(TransformKind kind);
SignalType operand_type(FunctionId f);

struct RecursionCall {
  FunctionId target;
  std::size_t size_divisor;  // child periodization = n / size_divisor
  bool operator==(const RecursionCall&) const = default;
};

// One function's decomposition recipe: the elaborations applied on the way
// down (in order) and the recursive calls made on the children.  calls[0] is
// always the even/reduced child, calls[1] the odd child.
struct FunctionPlan {
  FunctionId id;
  SignalType operand;
  std::size_t base_size;
  std::vector<ElaborationId> forward;
  std::vector<RecursionCall> calls;
  bool operator==(const FunctionPlan&) const = default;
};

struct VariantPlan {
  VariantId variant;
  std::vector<FunctionPlan> functions;

  bool has_function(FunctionId f) const;
  const FunctionPlan& function(FunctionId f) const;  // throws if not wired
};

VariantPlan build_plan(VariantId v);

// ---------------------------------------------------------------------------
// Constant tables.

enum class TrigMode { Precomputed, OnTheFly };

// A variant's modulation constants for all periodizations up to
// max_periodization: slots f(2*pi*p/max) for p in [1, max/4), plus the one
// base-stage constant cos(2*pi/8) shared by all variants.  A request at a
// smaller periodization scales the slot index, so levels share entries.
class TrigTable final : public TrigSource {
 public:
  TrigTable(VariantId v, std::size_t max_periodization,
            TrigMode mode = TrigMode::Precomputed);

  double value(TrigKind kind, std::size_t index,
               std::size_t periodization) const override;
  double base_constant() const override;

  VariantId variant() const { return variant_; }
  TrigKind kind() const { return kind_; }
  TrigMode mode() const { return mode_; }
  std::size_t max_periodization() const { return max_n_; }

  // Number of table slots, counting the shared constant: max_periodization/4.
  std::size_t constant_count() const;
  // All slot values: generic slots in ascending index order, shared last.
  std::vector<double> constants() const;

  // Test hook: perturbs every constant so downstream verification must fail.
  void corrupt_for_testing();

 private:
  VariantId variant_;
  TrigKind kind_;
  TrigMode mode_;
  std::size_t max_n_;
  std::vector<double> slots_;  // p = 1 .. max_n/4 - 1 (empty when on-the-fly)
  double base_;
  double corruption_ = 0.0;
};

// ---------------------------------------------------------------------------
// Execution.

// Runs one of the variant's functions on a temporal signal, returning its
// spectrum.  The meter, when given, receives the exact operation counts.
SignalBuffer execute(VariantId v, FunctionId f, const SignalBuffer& input,
                     const TrigSource& trig, OpMeter* meter = nullptr);

// Convenience: deduce the function from the input's signal type.
SignalBuffer execute(VariantId v, const SignalBuffer& input,
                     const TrigSource& trig, OpMeter* meter = nullptr);

}  // namespace amqft
