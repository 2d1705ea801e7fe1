#pragma once

// The elementary signal elaborations the fast transforms are built from.
//
// Each elaboration maps one "mother" signal into one or two simpler child
// signals such that the mother's spectrum is recoverable from the child
// spectra.  Applying an elaboration therefore has two phases:
//   forward  — temporal domain: mother samples  -> child samples;
//   backward — frequency domain: child spectra  -> mother spectrum.
//
// There are six structural elaborations (complex split, real split, the two
// even-index halvings, the two parity splits) and eight amplitude-modulation
// conversions that turn an odd-index/odd-harmonic signal into an even-index
// or even-harmonic one by modulating with 2cos, 2sin, or their reciprocals.

#include <array>
#include <cstddef>
#include <vector>

#include "amqft/opmeter.hpp"
#include "amqft/signal.hpp"

namespace amqft {

enum class ElaborationId {
  SplitComplex,         // complex signal -> (real part, imaginary part)
  SplitReal,            // real signal -> (cosine half-spectrum, sine half-spectrum)
  HalveEvenHarmonics,   // even-harmonic signal -> same samples at half periodization
  HalveEvenTime,        // even-time signal -> its even samples at half periodization
  SplitHarmonicParity,  // signal -> (even-harmonic part, odd-harmonic part)
  SplitTimeParity,      // signal -> (even-time part, odd-time part)
  AmConvert1,           // odd-odd signal * 2cos  -> even-harmonic signal
  AmConvert2,           // odd-odd signal, even-time child with spectrum * 2cos
  AmConvert3,           // odd-odd signal, even-time child with spectrum / 2cos
  AmConvert4,           // odd-odd signal / 2cos  -> even-harmonic signal
  AmConvert5,           // odd-odd signal * 2sin  -> even-harmonic signal (lens flips)
  AmConvert6,           // odd-odd signal, even-time child with spectrum * 2sin
  AmConvert7,           // odd-odd signal, even-time child with spectrum / 2sin
  AmConvert8,           // odd-odd signal / 2sin  -> even-harmonic signal (lens flips)
};

inline constexpr ElaborationId kAllElaborations[] = {
    ElaborationId::SplitComplex,        ElaborationId::SplitReal,
    ElaborationId::HalveEvenHarmonics,  ElaborationId::HalveEvenTime,
    ElaborationId::SplitHarmonicParity, ElaborationId::SplitTimeParity,
    ElaborationId::AmConvert1,          ElaborationId::AmConvert2,
    ElaborationId::AmConvert3,          ElaborationId::AmConvert4,
    ElaborationId::AmConvert5,          ElaborationId::AmConvert6,
    ElaborationId::AmConvert7,          ElaborationId::AmConvert8,
};

const char* elaboration_name(ElaborationId id);

// Decompositions produce two children; transformations produce one.
bool is_decomposition(ElaborationId id);
bool is_am_conversion(ElaborationId id);

// A (mother type -> child types) rule of one elaboration.
struct ElaborationBinding {
  ElaborationId id;
  SignalType mother;
  std::array<SignalType, 2> children;  // transformations use children[0] only
  std::size_t child_count = 1;
  std::size_t child_periodization_divisor = 1;  // 2 for the halvings

  bool operator==(const ElaborationBinding&) const = default;
};

// All mother types an elaboration applies to.
std::vector<ElaborationBinding> elaboration_bindings(ElaborationId id);

// The rule for one mother type; throws if the elaboration does not bind it.
ElaborationBinding binding_for(ElaborationId id, SignalType mother);

// ---------------------------------------------------------------------------
// Modulation constants.

enum class TrigKind { TwoCos, TwoSin, InvTwoCos, InvTwoSin };

const char* trig_kind_name(TrigKind kind);

// f(2*pi*index/periodization) with f selected by `kind`; evaluated in long
// double and rounded once, so precomputed tables and on-the-fly evaluation
// produce bit-identical constants.
double modulation_value(TrigKind kind, std::size_t index,
                        std::size_t periodization);

// Supplier of modulation constants for the AM conversions plus the one
// constant shared by every variant's deepest stage, cos(2*pi/8).
class TrigSource {
 public:
  virtual ~TrigSource() = default;
  virtual double value(TrigKind kind, std::size_t index,
                       std::size_t periodization) const = 0;
  virtual double base_constant() const = 0;
};

// Unrestricted on-demand supplier (any kind, any size); used by tests and as
// the constant source when no precomputed table is wanted.
class OnTheFlyTrig final : public TrigSource {
 public:
  double value(TrigKind kind, std::size_t index,
               std::size_t periodization) const override {
    return modulation_value(kind, index, periodization);
  }
  double base_constant() const override;
};

// ---------------------------------------------------------------------------
// Applying elaborations.

// Transformations (single child).  transform_backward deduces the mother
// from (id, child type); for every id that pairing is unambiguous.
SignalBuffer transform_forward(ElaborationId id, const SignalBuffer& mother,
                               const TrigSource& trig, OpMeter* meter = nullptr);
SignalBuffer transform_backward(ElaborationId id,
                                const SignalBuffer& child_frequency,
                                const TrigSource& trig,
                                OpMeter* meter = nullptr);

// Decompositions (two children, in binding order).
std::array<SignalBuffer, 2> decompose_forward(ElaborationId id,
                                              const SignalBuffer& mother,
                                              OpMeter* meter = nullptr);
SignalBuffer recompose_backward(ElaborationId id,
                                const SignalBuffer& child0_frequency,
                                const SignalBuffer& child1_frequency,
                                OpMeter* meter = nullptr);

}  // namespace amqft
