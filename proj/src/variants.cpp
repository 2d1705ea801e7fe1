#include "amqft/variants.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

#include "arith.hpp"

namespace amqft {

namespace {

using detail::Tally;
using EID = ElaborationId;
using FID = FunctionId;
using ST = SignalType;

[[noreturn]] void fail(const std::string& what) {
  throw std::invalid_argument(what);
}

}  // namespace

int variant_number(VariantId v) { return static_cast<int>(v); }

VariantId variant_from_number(int n) {
  if (n < 1 || n > 8) fail("variant number must be in 1..8");
  return static_cast<VariantId>(n);
}

bool time_major(VariantId v) {
  const int n = variant_number(v);
  return n == 1 || n == 4 || n == 5 || n == 8;
}

ElaborationId am_conversion(VariantId v) {
  return static_cast<ElaborationId>(static_cast<int>(EID::AmConvert1) +
                                    variant_number(v) - 1);
}

TrigKind modulation_kind(VariantId v) {
  switch (variant_number(v)) {
    case 1:
    case 3:
      return TrigKind::TwoCos;
    case 5:
    case 7:
      return TrigKind::TwoSin;
    case 2:
    case 4:
      return TrigKind::InvTwoCos;
    default:
      return TrigKind::InvTwoSin;
  }
}

bool sine_modulated(VariantId v) { return variant_number(v) >= 5; }

bool uses_binary_translations(VariantId v) {
  return variant_number(v) % 2 == 1;
}

const char* function_name(FunctionId f) {
  switch (f) {
    case FID::Cdft:
      return "cdft";
    case FID::Rdft:
      return "rdft";
    case FID::Dct:
      return "dct";
    case FID::Dst:
      return "dst";
    case FID::DctOddTime:
      return "dct[odd-n]";
    case FID::DstOddTime:
      return "dst[odd-n]";
    case FID::DctOddHarm:
      return "dct[odd-k]";
    case FID::DstOddHarm:
      return "dst[odd-k]";
    case FID::DctOddOdd:
      return "dct[odd-n,odd-k]";
    case FID::DstOddOdd:
      return "dst[odd-n,odd-k]";
  }
  return "?";
}

const char* kind_name(TransformKind kind) {
  switch (kind) {
    case TransformKind::Cdft:
      return "cdft";
    case TransformKind::Rdft:
      return "rdft";
    case TransformKind::Dct:
      return "dct";
    case TransformKind::Dst:
      return "dst";
  }
  return "?";
}

SignalType full_type_of(TransformKind kind) {
  switch (kind) {
    case TransformKind::Cdft:
      return ST::CdftFull;
    case TransformKind::Rdft:
      return ST::RdftFull;
    case TransformKind::Dct:
      return ST::DctFull;
    case TransformKind::Dst:
      return ST::DstFull;
  }
  fail("unknown transform kind");
}

FunctionId function_for(TransformKind kind) {
  switch (kind) {
    case TransformKind::Cdft:
      return FID::Cdft;
    case TransformKind::Rdft:
      return FID::Rdft;
    case TransformKind::Dct:
      return FID::Dct;
    case TransformKind::Dst:
      return FID::Dst;
  }
  fail("unknown transform kind");
}

SignalType operand_type(FunctionId f) {
  switch (f) {
    case FID::Cdft:
      return ST::CdftFull;
    case FID::Rdft:
      return ST::RdftFull;
    case FID::Dct:
      return ST::DctFull;
    case FID::Dst:
      return ST::DstFull;
    case FID::DctOddTime:
      return ST::DctOddTime;
    case FID::DstOddTime:
      return ST::DstOddTime;
    case FID::DctOddHarm:
      return ST::DctOddHarm;
    case FID::DstOddHarm:
      return ST::DstOddHarm;
    case FID::DctOddOdd:
      return ST::DctOddTimeOddHarm;
    case FID::DstOddOdd:
      return ST::DstOddTimeOddHarm;
  }
  fail("unknown function");
}

bool VariantPlan::has_function(FunctionId f) const {
  for (const FunctionPlan& fp : functions) {
    if (fp.id == f) return true;
  }
  return false;
}

const FunctionPlan& VariantPlan::function(FunctionId f) const {
  for (const FunctionPlan& fp : functions) {
    if (fp.id == f) return fp;
  }
  fail(std::string("variant ") + std::to_string(variant_number(variant)) +
       " does not wire " + function_name(f));
}

VariantPlan build_plan(VariantId v) {
  const bool tm = time_major(v);
  const EID am = am_conversion(v);
  const bool sine = sine_modulated(v);

  const EID split = tm ? EID::SplitTimeParity : EID::SplitHarmonicParity;
  const EID halve = tm ? EID::HalveEvenTime : EID::HalveEvenHarmonics;
  // Below the AM stage the reduction axis is the opposite one: time-major
  // variants produced an even-harmonic child, harmonic-major an even-time one.
  const EID oo_split = tm ? EID::SplitHarmonicParity : EID::SplitTimeParity;
  const EID oo_halve = tm ? EID::HalveEvenHarmonics : EID::HalveEvenTime;
  const FID dct_odd = tm ? FID::DctOddTime : FID::DctOddHarm;
  const FID dst_odd = tm ? FID::DstOddTime : FID::DstOddHarm;

  VariantPlan plan;
  plan.variant = v;
  plan.functions = {
      {FID::Cdft,
       ST::CdftFull,
       2,
       {EID::SplitComplex},
       {{FID::Rdft, 1}, {FID::Rdft, 1}}},
      {FID::Rdft,
       ST::RdftFull,
       2,
       {EID::SplitReal},
       {{FID::Dct, 1}, {FID::Dst, 1}}},
      {FID::Dct,
       ST::DctFull,
       2,
       {split, halve},
       {{FID::Dct, 2}, {dct_odd, 1}}},
      {FID::Dst,
       ST::DstFull,
       4,
       {split, halve},
       {{FID::Dst, 2}, {dst_odd, 1}}},
      {dct_odd,
       operand_type(dct_odd),
       4,
       {oo_split, oo_halve},
       {{dct_odd, 2}, {FID::DctOddOdd, 1}}},
      {dst_odd,
       operand_type(dst_odd),
       4,
       {oo_split, oo_halve},
       {{dst_odd, 2}, {FID::DstOddOdd, 1}}},
      {FID::DctOddOdd,
       ST::DctOddTimeOddHarm,
       8,
       {am, oo_halve, oo_split, oo_halve},
       {{sine ? dst_odd : dct_odd, 4},
        {sine ? FID::DstOddOdd : FID::DctOddOdd, 2}}},
      {FID::DstOddOdd,
       ST::DstOddTimeOddHarm,
       8,
       {am, oo_halve, oo_split, oo_halve},
       {{sine ? dct_odd : dst_odd, 4},
        {sine ? FID::DctOddOdd : FID::DstOddOdd, 2}}},
  };
  return plan;
}

// ---------------------------------------------------------------------------
// Constant table.

namespace {

double base_stage_constant() {
  return static_cast<double>(
      std::cos(2.0L * std::numbers::pi_v<long double> / 8.0L));
}

}  // namespace

TrigTable::TrigTable(VariantId v, std::size_t max_periodization, TrigMode mode)
    : variant_(v),
      kind_(modulation_kind(v)),
      mode_(mode),
      max_n_(max_periodization),
      base_(base_stage_constant()) {
  if (!is_power_of_two(max_n_) || max_n_ < 8) {
    fail("constant table needs a power-of-two max periodization >= 8");
  }
  if (mode_ == TrigMode::Precomputed) {
    slots_.resize(max_n_ / 4 - 1);
    for (std::size_t p = 1; p < max_n_ / 4; ++p) {
      slots_[p - 1] = modulation_value(kind_, p, max_n_);
    }
  }
}

double TrigTable::value(TrigKind kind, std::size_t index,
                        std::size_t periodization) const {
  if (kind != kind_) {
    fail(std::string("this table holds ") + trig_kind_name(kind_) +
         " constants, not " + trig_kind_name(kind));
  }
  if (!is_power_of_two(periodization) || periodization > max_n_) {
    fail("periodization outside the table's range");
  }
  if (index < 1 || index >= periodization / 4) {
    fail("constant index " + std::to_string(index) +
         " outside [1, periodization/4)");
  }
  if (mode_ == TrigMode::OnTheFly) {
    return modulation_value(kind_, index, periodization) + corruption_;
  }
  const std::size_t p = index * (max_n_ / periodization);
  return slots_[p - 1] + corruption_;
}

double TrigTable::base_constant() const { return base_ + corruption_; }

std::size_t TrigTable::constant_count() const { return max_n_ / 4; }

std::vector<double> TrigTable::constants() const {
  std::vector<double> out;
  out.reserve(max_n_ / 4);
  for (std::size_t p = 1; p < max_n_ / 4; ++p) {
    out.push_back(mode_ == TrigMode::Precomputed
                      ? slots_[p - 1] + corruption_
                      : modulation_value(kind_, p, max_n_) + corruption_);
  }
  out.push_back(base_constant());
  return out;
}

void TrigTable::corrupt_for_testing() { corruption_ = 1e-3; }

// ---------------------------------------------------------------------------
// Executor: a direct interpreter of the variant's plan.

namespace {

class Executor {
 public:
  Executor(const VariantPlan& plan, const TrigSource& trig, OpMeter* meter)
      : plan_(plan), trig_(trig), meter_(meter), tally_(meter) {}

  SignalBuffer run(FunctionId f, const SignalBuffer& x) {
    const FunctionPlan& fp = plan_.function(f);
    if (x.periodization == fp.base_size) return base_case(f, x);

    if (fp.forward.size() == 1) {
      // Full split into two same-size children (complex or real split).
      auto children = decompose_forward(fp.forward[0], x, meter_);
      auto spec0 = run(fp.calls[0].target, children[0]);
      auto spec1 = run(fp.calls[1].target, children[1]);
      return recompose_backward(fp.forward[0], spec0, spec1, meter_);
    }

    if (fp.forward.size() == 2) {
      // Parity split; the even child collapses to half periodization.
      auto children = decompose_forward(fp.forward[0], x, meter_);
      auto reduced = transform_forward(fp.forward[1], children[0], trig_, meter_);
      auto reduced_spec = run(fp.calls[0].target, reduced);
      auto even_spec =
          transform_backward(fp.forward[1], reduced_spec, trig_, meter_);
      auto odd_spec = run(fp.calls[1].target, children[1]);
      return recompose_backward(fp.forward[0], even_spec, odd_spec, meter_);
    }

    // AM stage: modulate, collapse, split the result, collapse its even
    // child; then undo everything in the frequency domain.
    auto modulated = transform_forward(fp.forward[0], x, trig_, meter_);
    auto folded = transform_forward(fp.forward[1], modulated, trig_, meter_);
    auto children = decompose_forward(fp.forward[2], folded, meter_);
    auto reduced = transform_forward(fp.forward[3], children[0], trig_, meter_);
    auto reduced_spec = run(fp.calls[0].target, reduced);
    auto even_spec =
        transform_backward(fp.forward[3], reduced_spec, trig_, meter_);
    auto odd_spec = run(fp.calls[1].target, children[1]);
    auto folded_spec =
        recompose_backward(fp.forward[2], even_spec, odd_spec, meter_);
    auto modulated_spec =
        transform_backward(fp.forward[1], folded_spec, trig_, meter_);
    return transform_backward(fp.forward[0], modulated_spec, trig_, meter_);
  }

 private:
  SignalBuffer base_case(FunctionId f, const SignalBuffer& x) {
    const std::size_t n = x.periodization;
    SignalBuffer out =
        SignalBuffer::zeros(x.type, n, Domain::Frequency);
    switch (f) {
      case FID::Cdft:  // n == 2
        out.re(0) = tally_.add(x.re(0), x.re(1));
        out.im(0) = tally_.add(x.im(0), x.im(1));
        out.re(1) = tally_.sub(x.re(0), x.re(1));
        out.im(1) = tally_.sub(x.im(0), x.im(1));
        break;
      case FID::Rdft:  // n == 2; both packed cells are real parts
        out.cells[0] = tally_.add(x.cells[0], x.cells[1]);
        out.cells[1] = tally_.sub(x.cells[0], x.cells[1]);
        break;
      case FID::Dct:  // n == 2
        out.at(0) = tally_.add(x.at(0), x.at(1));
        out.at(1) = tally_.sub(x.at(0), x.at(1));
        break;
      case FID::Dst:  // n == 4: S(1) = s(1) * sin(pi/2)
        out.at(1) = x.at(1);
        break;
      case FID::DctOddTime:  // n == 4: S(0) = s(1)
        out.at(0) = x.at(1);
        break;
      case FID::DstOddTime:  // n == 4: S(1) = s(1) * sin(pi/2)
        out.at(1) = x.at(1);
        break;
      case FID::DctOddHarm:  // n == 4: S(1) = s(0)
        out.at(1) = x.at(0);
        break;
      case FID::DstOddHarm:  // n == 4: S(1) = s(1) * sin(pi/2)
        out.at(1) = x.at(1);
        break;
      case FID::DctOddOdd:  // n == 8: S(1) = s(1) * cos(2*pi/8)
      case FID::DstOddOdd:  // n == 8: S(1) = s(1) * sin(2*pi/8), same value
        out.at(1) = tally_.mul(x.at(1), trig_.base_constant());
        break;
    }
    return out;
  }

  const VariantPlan& plan_;
  const TrigSource& trig_;
  OpMeter* meter_;
  Tally tally_;
};

}  // namespace

SignalBuffer execute(VariantId v, FunctionId f, const SignalBuffer& input,
                     const TrigSource& trig, OpMeter* meter) {
  const VariantPlan plan = build_plan(v);
  const FunctionPlan& fp = plan.function(f);  // throws if not wired
  if (input.domain != Domain::Temporal) {
    fail("execute consumes a temporal signal");
  }
  if (input.type != fp.operand) {
    fail(std::string(function_name(f)) + " expects a " +
         type_name(fp.operand) + " operand, got " + type_name(input.type));
  }
  if (!is_power_of_two(input.periodization) ||
      input.periodization < fp.base_size) {
    fail("periodization must be a power of two >= " +
         std::to_string(fp.base_size) + " for " + function_name(f));
  }
  Executor exec(plan, trig, meter);
  return exec.run(f, input);
}

SignalBuffer execute(VariantId v, const SignalBuffer& input,
                     const TrigSource& trig, OpMeter* meter) {
  FunctionId f = FID::Cdft;
  bool found = false;
  for (FunctionId candidate :
       {FID::Cdft, FID::Rdft, FID::Dct, FID::Dst, FID::DctOddTime,
        FID::DstOddTime, FID::DctOddHarm, FID::DstOddHarm, FID::DctOddOdd,
        FID::DstOddOdd}) {
    if (operand_type(candidate) == input.type) {
      f = candidate;
      found = true;
      break;
    }
  }
  if (!found) {
    fail(std::string("no function consumes ") + type_name(input.type));
  }
  return execute(v, f, input, trig, meter);
}

}  // namespace amqft
