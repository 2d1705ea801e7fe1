#pragma once

// Signal model for the fast-transform family implemented by this library.
//
// Every operand is a real periodic signal observed through one of four lenses
// (complex DFT, real DFT, cosine half-spectrum, sine half-spectrum), possibly
// restricted to even or odd sample indices and/or even or odd harmonic
// indices.  A (lens, time-parity, harmonic-parity) triple is a SignalType;
// only the non-redundant cells of such a signal are stored, in index order,
// in a flat SignalBuffer.

#include <cstddef>
#include <cstdint>
#include <vector>

namespace amqft {

enum class TransformKind { Cdft, Rdft, Dct, Dst };

enum class Domain { Temporal, Frequency };

enum class Parity { Full, Even, Odd };

// The 18 storable signal classes.  Naming: <lens><time parity><harmonic
// parity>, where a missing qualifier means "unrestricted".  CdftFull and
// RdftFull admit no parity restriction (their restricted forms are what the
// cosine/sine classes already describe).
enum class SignalType {
  CdftFull,             // complex samples, full index range (interleaved re/im)
  RdftFull,             // real samples, full index range
  DctFull,              // cosine lens, all n in [0, N/2], all k in [0, N/2]
  DctEvenTime,          // even n only
  DctOddTime,           // odd n only
  DctEvenHarm,          // even k only
  DctOddHarm,           // odd k only
  DctOddTimeEvenHarm,   // odd n, even k
  DctEvenTimeOddHarm,   // even n, odd k
  DctOddTimeOddHarm,    // odd n, odd k
  DstFull,              // sine lens, all n in [1, N/2-1], all k in [1, N/2-1]
  DstEvenTime,
  DstOddTime,
  DstEvenHarm,
  DstOddHarm,
  DstOddTimeEvenHarm,
  DstEvenTimeOddHarm,
  DstOddTimeOddHarm,
};

inline constexpr SignalType kAllSignalTypes[] = {
    SignalType::CdftFull,
    SignalType::RdftFull,
    SignalType::DctFull,
    SignalType::DctEvenTime,
    SignalType::DctOddTime,
    SignalType::DctEvenHarm,
    SignalType::DctOddHarm,
    SignalType::DctOddTimeEvenHarm,
    SignalType::DctEvenTimeOddHarm,
    SignalType::DctOddTimeOddHarm,
    SignalType::DstFull,
    SignalType::DstEvenTime,
    SignalType::DstOddTime,
    SignalType::DstEvenHarm,
    SignalType::DstOddHarm,
    SignalType::DstOddTimeEvenHarm,
    SignalType::DstEvenTimeOddHarm,
    SignalType::DstOddTimeOddHarm,
};

TransformKind kind_of(SignalType type);
Parity time_parity(SignalType type);
Parity harmonic_parity(SignalType type);

// Short diagnostic name, e.g. "dct[odd-n,odd-k]".
const char* type_name(SignalType type);

bool is_power_of_two(std::size_t n);

// Smallest periodization for which the type stores at least one cell in each
// domain (always a power of two).
std::size_t min_periodization(SignalType type);

// Throws std::invalid_argument unless n is a power of two >= the type minimum.
void validate_periodization(SignalType type, std::size_t n);

// An arithmetic progression of signal indices: first, first+step, ...
struct IndexRange {
  std::size_t first = 0;
  std::size_t step = 1;
  std::size_t count = 0;

  bool contains(std::size_t index) const {
    return index >= first && (index - first) % step == 0 &&
           (index - first) / step < count;
  }
  std::size_t position_of(std::size_t index) const;  // throws if !contains
  std::size_t index_at(std::size_t position) const;  // throws if out of range
  std::size_t last() const { return first + step * (count - 1); }

  bool operator==(const IndexRange&) const = default;
};

// The stored index set of a signal type at periodization n in one domain.
IndexRange stored_range(SignalType type, std::size_t n, Domain domain);

// Materialized index list (ascending), mainly for tests and diagnostics.
std::vector<std::size_t> stored_indices(SignalType type, std::size_t n,
                                        Domain domain);

// Cell offset of a signal index inside the flat buffer.  For CdftFull the
// position is the sample/harmonic slot; its real and imaginary parts live in
// cells 2*position and 2*position+1.
std::size_t storage_position(SignalType type, std::size_t n, Domain domain,
                             std::size_t index);

// Number of buffer cells (counts two per slot for the complex type).
std::size_t cell_count(SignalType type, std::size_t n);

// A concrete signal: type + periodization + domain + stored cells.
//
// Domain conventions: temporal cells hold samples s(index); frequency cells
// hold spectrum values S(index).  For RdftFull the frequency buffer packs the
// Hermitian-redundant complex spectrum into n real cells: cell j holds
// Re S(j) for j <= n/2 and Im S(j) for j > n/2.
struct SignalBuffer {
  SignalType type = SignalType::RdftFull;
  std::size_t periodization = 0;
  Domain domain = Domain::Temporal;
  std::vector<double> cells;

  static SignalBuffer zeros(SignalType type, std::size_t n, Domain domain);

  IndexRange range() const {
    return stored_range(type, periodization, domain);
  }

  // Value access by signal index (real-valued types only).
  double at(std::size_t index) const;
  double& at(std::size_t index);

  // Complex access by slot (CdftFull only).
  double re(std::size_t index) const;
  double& re(std::size_t index);
  double im(std::size_t index) const;
  double& im(std::size_t index);
};

}  // namespace amqft
