#include "amqft/elaborations.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

#include "arith.hpp"

namespace amqft {

namespace {

using detail::Tally;
using ST = SignalType;
using EID = ElaborationId;

[[noreturn]] void fail(const std::string& what) {
  throw std::invalid_argument(what);
}

struct BindingRow {
  ST mother;
  ST child0;
  ST child1;  // == child0 for transformations (ignored)
};

// Binding tables.  For decompositions children are (even/cosine-like child,
// odd/sine-like child) in that order.
const BindingRow* binding_rows(EID id, std::size_t& count, std::size_t& n_children,
                               std::size_t& divisor) {
  static const BindingRow kSplitComplex[] = {
      {ST::CdftFull, ST::RdftFull, ST::RdftFull},
  };
  static const BindingRow kSplitReal[] = {
      {ST::RdftFull, ST::DctFull, ST::DstFull},
  };
  static const BindingRow kHalveHarm[] = {
      {ST::DctEvenHarm, ST::DctFull, ST::DctFull},
      {ST::DctOddTimeEvenHarm, ST::DctOddTime, ST::DctOddTime},
      {ST::DstEvenHarm, ST::DstFull, ST::DstFull},
      {ST::DstOddTimeEvenHarm, ST::DstOddTime, ST::DstOddTime},
  };
  static const BindingRow kHalveTime[] = {
      {ST::DctEvenTime, ST::DctFull, ST::DctFull},
      {ST::DctEvenTimeOddHarm, ST::DctOddHarm, ST::DctOddHarm},
      {ST::DstEvenTime, ST::DstFull, ST::DstFull},
      {ST::DstEvenTimeOddHarm, ST::DstOddHarm, ST::DstOddHarm},
  };
  static const BindingRow kSplitHarm[] = {
      {ST::DctFull, ST::DctEvenHarm, ST::DctOddHarm},
      {ST::DctOddTime, ST::DctOddTimeEvenHarm, ST::DctOddTimeOddHarm},
      {ST::DstFull, ST::DstEvenHarm, ST::DstOddHarm},
      {ST::DstOddTime, ST::DstOddTimeEvenHarm, ST::DstOddTimeOddHarm},
  };
  static const BindingRow kSplitTime[] = {
      {ST::DctFull, ST::DctEvenTime, ST::DctOddTime},
      {ST::DctOddHarm, ST::DctEvenTimeOddHarm, ST::DctOddTimeOddHarm},
      {ST::DstFull, ST::DstEvenTime, ST::DstOddTime},
      {ST::DstOddHarm, ST::DstEvenTimeOddHarm, ST::DstOddTimeOddHarm},
  };
  // AM conversions, indexed 1..8; children keep the lens for 1-4 and flip it
  // for 5-8 (sine modulation swaps cosine and sine lenses).
  static const BindingRow kAm1[] = {
      {ST::DctOddTimeOddHarm, ST::DctOddTimeEvenHarm, ST::DctOddTimeEvenHarm},
      {ST::DstOddTimeOddHarm, ST::DstOddTimeEvenHarm, ST::DstOddTimeEvenHarm},
  };
  static const BindingRow kAm2[] = {
      {ST::DctOddTimeOddHarm, ST::DctEvenTimeOddHarm, ST::DctEvenTimeOddHarm},
      {ST::DstOddTimeOddHarm, ST::DstEvenTimeOddHarm, ST::DstEvenTimeOddHarm},
  };
  static const BindingRow kAm5[] = {
      {ST::DctOddTimeOddHarm, ST::DstOddTimeEvenHarm, ST::DstOddTimeEvenHarm},
      {ST::DstOddTimeOddHarm, ST::DctOddTimeEvenHarm, ST::DctOddTimeEvenHarm},
  };
  static const BindingRow kAm6[] = {
      {ST::DctOddTimeOddHarm, ST::DstEvenTimeOddHarm, ST::DstEvenTimeOddHarm},
      {ST::DstOddTimeOddHarm, ST::DctEvenTimeOddHarm, ST::DctEvenTimeOddHarm},
  };

  count = 0;
  n_children = 1;
  divisor = 1;
  switch (id) {
    case EID::SplitComplex:
      count = 1;
      n_children = 2;
      return kSplitComplex;
    case EID::SplitReal:
      count = 1;
      n_children = 2;
      return kSplitReal;
    case EID::HalveEvenHarmonics:
      count = 4;
      divisor = 2;
      return kHalveHarm;
    case EID::HalveEvenTime:
      count = 4;
      divisor = 2;
      return kHalveTime;
    case EID::SplitHarmonicParity:
      count = 4;
      n_children = 2;
      return kSplitHarm;
    case EID::SplitTimeParity:
      count = 4;
      n_children = 2;
      return kSplitTime;
    case EID::AmConvert1:
    case EID::AmConvert4:
      count = 2;
      return kAm1;
    case EID::AmConvert2:
    case EID::AmConvert3:
      count = 2;
      return kAm2;
    case EID::AmConvert5:
    case EID::AmConvert8:
      count = 2;
      return kAm5;
    case EID::AmConvert6:
    case EID::AmConvert7:
      count = 2;
      return kAm6;
  }
  fail("unknown elaboration");
}

ElaborationBinding make_binding(EID id, const BindingRow& row,
                                std::size_t n_children, std::size_t divisor) {
  ElaborationBinding b;
  b.id = id;
  b.mother = row.mother;
  b.children = {row.child0, row.child1};
  b.child_count = n_children;
  b.child_periodization_divisor = divisor;
  return b;
}

SignalBuffer make(ST type, std::size_t n, Domain domain) {
  return SignalBuffer::zeros(type, n, domain);
}

// ---------------------------------------------------------------------------
// Structural elaborations.

std::array<SignalBuffer, 2> split_complex_forward(const SignalBuffer& a,
                                                  Tally&) {
  const std::size_t n = a.periodization;
  auto real_part = make(ST::RdftFull, n, Domain::Temporal);
  auto imag_part = make(ST::RdftFull, n, Domain::Temporal);
  for (std::size_t m = 0; m < n; ++m) {
    real_part.cells[m] = a.cells[2 * m];
    imag_part.cells[m] = a.cells[2 * m + 1];
  }
  return {std::move(real_part), std::move(imag_part)};
}

// Rebuild the complex spectrum from the two packed real spectra using the
// Hermitian symmetry of each part: the packed cell j > n/2 of a real
// spectrum holds Im S(j) = -Im S(n-j).
SignalBuffer split_complex_backward(const SignalBuffer& s1,
                                    const SignalBuffer& s2, Tally& t) {
  const std::size_t n = s1.periodization;
  auto out = make(ST::CdftFull, n, Domain::Frequency);
  out.re(0) = s1.cells[0];
  out.im(0) = s2.cells[0];
  if (n >= 2) {
    out.re(n / 2) = s1.cells[n / 2];
    out.im(n / 2) = s2.cells[n / 2];
  }
  for (std::size_t k = 1; k < n / 2; ++k) {
    const double re1 = s1.cells[k];
    const double mi1 = s1.cells[n - k];  // -Im of part 1 at harmonic k
    const double re2 = s2.cells[k];
    const double mi2 = s2.cells[n - k];
    out.re(k) = t.add(re1, mi2);
    out.re(n - k) = t.sub(re1, mi2);
    out.im(k) = t.sub(re2, mi1);
    out.im(n - k) = t.add(re2, mi1);
  }
  return out;
}

std::array<SignalBuffer, 2> split_real_forward(const SignalBuffer& a,
                                               Tally& t) {
  const std::size_t n = a.periodization;
  auto cos_part = make(ST::DctFull, n, Domain::Temporal);
  auto sin_part = make(ST::DstFull, n, Domain::Temporal);
  cos_part.at(0) = a.cells[0];
  cos_part.at(n / 2) = a.cells[n / 2];
  for (std::size_t m = 1; m < n / 2; ++m) {
    cos_part.at(m) = t.add(a.cells[m], a.cells[n - m]);
    sin_part.at(m) = t.sub(a.cells[m], a.cells[n - m]);
  }
  return {std::move(cos_part), std::move(sin_part)};
}

SignalBuffer split_real_backward(const SignalBuffer& cos_spec,
                                 const SignalBuffer& sin_spec, Tally&) {
  const std::size_t n = cos_spec.periodization;
  auto out = make(ST::RdftFull, n, Domain::Frequency);
  for (std::size_t k = 0; k <= n / 2; ++k) out.cells[k] = cos_spec.at(k);
  // Im S(n-k) equals the sine spectrum at k, so the packed upper half is a
  // straight copy.
  for (std::size_t k = 1; k < n / 2; ++k) out.cells[n - k] = sin_spec.at(k);
  return out;
}

// Both halvings are pure reinterpretations: the stored cells of the mother
// and the half-periodization child coincide in both domains.
SignalBuffer halve_forward(const ElaborationBinding& b, const SignalBuffer& a) {
  auto child = make(b.children[0], a.periodization / 2, Domain::Temporal);
  child.cells = a.cells;
  return child;
}

SignalBuffer halve_backward(const ElaborationBinding& b,
                            const SignalBuffer& child) {
  auto mother = make(b.mother, child.periodization * 2, Domain::Frequency);
  mother.cells = child.cells;
  return mother;
}

// Harmonic-parity split, temporal phase: fold each sample pair (m, n/2-m).
// Cosine lens: even-harmonic child takes sums, odd-harmonic child takes
// differences; sine lens swaps the roles.  A self-paired sample (m = n/4)
// passes through unchanged.
std::array<SignalBuffer, 2> split_harm_forward(const ElaborationBinding& b,
                                               const SignalBuffer& a,
                                               Tally& t) {
  const std::size_t n = a.periodization;
  const bool sine_lens = kind_of(b.mother) == TransformKind::Dst;
  auto even_child = make(b.children[0], n, Domain::Temporal);
  auto odd_child = make(b.children[1], n, Domain::Temporal);
  const IndexRange er = even_child.range();
  const IndexRange orng = odd_child.range();
  for (std::size_t p = 0; p < er.count; ++p) {
    const std::size_t m = er.index_at(p);
    if (2 * m == n / 2) {
      even_child.at(m) = a.at(m);
    } else {
      even_child.at(m) = sine_lens ? t.sub(a.at(m), a.at(n / 2 - m))
                                   : t.add(a.at(m), a.at(n / 2 - m));
    }
  }
  for (std::size_t p = 0; p < orng.count; ++p) {
    const std::size_t m = orng.index_at(p);
    if (2 * m == n / 2) {
      odd_child.at(m) = a.at(m);
    } else {
      odd_child.at(m) = sine_lens ? t.add(a.at(m), a.at(n / 2 - m))
                                  : t.sub(a.at(m), a.at(n / 2 - m));
    }
  }
  return {std::move(even_child), std::move(odd_child)};
}

// Harmonic-parity split, frequency phase: the children's harmonics partition
// the mother's, so recombination is a pure merge.
SignalBuffer split_harm_backward(const ElaborationBinding& b,
                                 const SignalBuffer& even_spec,
                                 const SignalBuffer& odd_spec, Tally&) {
  const std::size_t n = even_spec.periodization;
  auto mother = make(b.mother, n, Domain::Frequency);
  const IndexRange er = even_spec.range();
  const IndexRange orng = odd_spec.range();
  for (std::size_t p = 0; p < er.count; ++p) {
    const std::size_t k = er.index_at(p);
    mother.at(k) = even_spec.at(k);
  }
  for (std::size_t p = 0; p < orng.count; ++p) {
    const std::size_t k = orng.index_at(p);
    mother.at(k) = odd_spec.at(k);
  }
  return mother;
}

// Time-parity split, temporal phase: the children's samples partition the
// mother's, so separation is a pure split.
std::array<SignalBuffer, 2> split_time_forward(const ElaborationBinding& b,
                                               const SignalBuffer& a, Tally&) {
  const std::size_t n = a.periodization;
  auto even_child = make(b.children[0], n, Domain::Temporal);
  auto odd_child = make(b.children[1], n, Domain::Temporal);
  const IndexRange er = even_child.range();
  const IndexRange orng = odd_child.range();
  for (std::size_t p = 0; p < er.count; ++p) {
    const std::size_t m = er.index_at(p);
    even_child.at(m) = a.at(m);
  }
  for (std::size_t p = 0; p < orng.count; ++p) {
    const std::size_t m = orng.index_at(p);
    odd_child.at(m) = a.at(m);
  }
  return {std::move(even_child), std::move(odd_child)};
}

// Time-parity split, frequency phase: butterfly each harmonic pair
// (k, n/2-k).  The even-time child's spectrum is symmetric about n/4 and the
// odd-time child's is antisymmetric (cosine lens) or vice versa (sine lens),
// which yields mother(k) = E(k) + O(k) and mother(n/2-k) = E(k) - O(k) on the
// cosine side, with the roles of E and O swapped on the sine side.
SignalBuffer split_time_backward(const ElaborationBinding& b,
                                 const SignalBuffer& even_spec,
                                 const SignalBuffer& odd_spec, Tally& t) {
  const std::size_t n = even_spec.periodization;
  const bool sine_lens = kind_of(b.mother) == TransformKind::Dst;
  auto mother = make(b.mother, n, Domain::Frequency);
  if (!sine_lens) {
    const IndexRange orng = odd_spec.range();
    for (std::size_t p = 0; p < orng.count; ++p) {
      const std::size_t k = orng.index_at(p);
      mother.at(k) = t.add(even_spec.at(k), odd_spec.at(k));
      mother.at(n / 2 - k) = t.sub(even_spec.at(k), odd_spec.at(k));
    }
    if (even_spec.range().contains(n / 4)) {
      mother.at(n / 4) = even_spec.at(n / 4);  // odd-time spectrum is 0 there
    }
  } else {
    const IndexRange er = even_spec.range();
    for (std::size_t p = 0; p < er.count; ++p) {
      const std::size_t k = er.index_at(p);
      mother.at(k) = t.add(odd_spec.at(k), even_spec.at(k));
      mother.at(n / 2 - k) = t.sub(odd_spec.at(k), even_spec.at(k));
    }
    if (odd_spec.range().contains(n / 4)) {
      mother.at(n / 4) = odd_spec.at(n / 4);  // even-time spectrum is 0 there
    }
  }
  return mother;
}

// ---------------------------------------------------------------------------
// AM conversions.
//
// The mother is an odd-time/odd-harmonic signal stored on {1,3,...,n/4-1};
// q = n/8 cells.  Temporal phases below either modulate sample-wise (M1, M4,
// M5, M8) or synthesize an even-indexed child whose spectrum is the mother's
// modulated by 2cos/2sin (M2, M6) or their reciprocals (M3, M7); the
// backward phases are the frequency-domain counterparts.  Three-term
// product-to-sum recurrences run in their stated direction; a leading 1/2 at
// a boundary comes from a collapsed self-paired term and is metered as a
// binary translation.

int am_index(EID id) {
  return static_cast<int>(id) - static_cast<int>(EID::AmConvert1) + 1;
}

SignalBuffer am_forward(EID id, const SignalBuffer& a, const TrigSource& trig,
                        Tally& t) {
  const ElaborationBinding b = binding_for(id, a.type);
  const std::size_t n = a.periodization;
  const bool dct_mother = kind_of(a.type) == TransformKind::Dct;
  auto e = make(b.children[0], n, Domain::Temporal);
  const int m = am_index(id);

  // Sample-wise modulation for M1/M4/M5/M8.
  if (m == 1 || m == 4 || m == 5 || m == 8) {
    const TrigKind kind = (m == 1)   ? TrigKind::TwoCos
                          : (m == 4) ? TrigKind::InvTwoCos
                          : (m == 5) ? TrigKind::TwoSin
                                     : TrigKind::InvTwoSin;
    for (std::size_t idx = 1; idx < n / 4; idx += 2) {
      e.at(idx) = t.mul(a.at(idx), trig.value(kind, idx, n));
    }
    return e;
  }

  // M2/M6: direct three-term synthesis of the even-time child.
  if (m == 2) {
    if (dct_mother) {
      e.at(0) = a.at(1);
      for (std::size_t idx = 2; idx + 2 <= n / 4; idx += 2) {
        e.at(idx) = t.add(a.at(idx + 1), a.at(idx - 1));
      }
    } else {
      e.at(n / 4) = a.at(n / 4 - 1);
      for (std::size_t idx = 2; idx + 2 <= n / 4; idx += 2) {
        e.at(idx) = t.add(a.at(idx + 1), a.at(idx - 1));
      }
    }
    return e;
  }
  if (m == 6) {
    if (dct_mother) {
      e.at(n / 4) = a.at(n / 4 - 1);
      for (std::size_t idx = 2; idx + 2 <= n / 4; idx += 2) {
        e.at(idx) = t.sub(a.at(idx - 1), a.at(idx + 1));
      }
    } else {
      e.at(0) = a.at(1);
      for (std::size_t idx = 2; idx + 2 <= n / 4; idx += 2) {
        e.at(idx) = t.sub(a.at(idx + 1), a.at(idx - 1));
      }
    }
    return e;
  }

  // M3/M7: sequential deconvolution of the three-term relation.  At n = 8 the
  // child has one cell and only the halved boundary relation survives.
  if (m == 3) {
    if (dct_mother) {
      if (n == 8) {
        e.at(0) = t.halve(a.at(1));
        return e;
      }
      e.at(n / 4 - 2) = a.at(n / 4 - 1);
      for (std::size_t idx = n / 4 - 4; idx >= 2; idx -= 2) {
        e.at(idx) = t.sub(a.at(idx + 1), e.at(idx + 2));
      }
      e.at(0) = t.halve(t.sub(a.at(1), e.at(2)));
    } else {
      if (n == 8) {
        e.at(2) = t.halve(a.at(1));
        return e;
      }
      e.at(2) = a.at(1);
      for (std::size_t idx = 4; idx + 2 <= n / 4; idx += 2) {
        e.at(idx) = t.sub(a.at(idx - 1), e.at(idx - 2));
      }
      e.at(n / 4) = t.halve(t.sub(a.at(n / 4 - 1), e.at(n / 4 - 2)));
    }
    return e;
  }
  // m == 7
  if (dct_mother) {
    if (n == 8) {
      e.at(2) = t.halve(a.at(1));
      return e;
    }
    e.at(2) = a.at(1);
    for (std::size_t idx = 4; idx + 2 <= n / 4; idx += 2) {
      e.at(idx) = t.add(a.at(idx - 1), e.at(idx - 2));
    }
    e.at(n / 4) = t.halve(t.add(a.at(n / 4 - 1), e.at(n / 4 - 2)));
  } else {
    if (n == 8) {
      e.at(0) = t.halve(a.at(1));
      return e;
    }
    e.at(n / 4 - 2) = a.at(n / 4 - 1);
    for (std::size_t idx = n / 4 - 4; idx >= 2; idx -= 2) {
      e.at(idx) = t.add(a.at(idx + 1), e.at(idx + 2));
    }
    e.at(0) = t.halve(t.add(a.at(1), e.at(2)));
  }
  return e;
}

SignalBuffer am_backward(EID id, const ElaborationBinding& b,
                         const SignalBuffer& child_spec,
                         const TrigSource& trig, Tally& t) {
  const std::size_t n = child_spec.periodization;
  const bool dct_mother = kind_of(b.mother) == TransformKind::Dct;
  auto out = make(b.mother, n, Domain::Frequency);
  const int m = am_index(id);

  // Harmonic-wise demodulation for M2/M3/M6/M7.
  if (m == 2 || m == 3 || m == 6 || m == 7) {
    const TrigKind kind = (m == 2)   ? TrigKind::InvTwoCos
                          : (m == 3) ? TrigKind::TwoCos
                          : (m == 6) ? TrigKind::InvTwoSin
                                     : TrigKind::TwoSin;
    for (std::size_t k = 1; k < n / 4; k += 2) {
      out.at(k) = t.mul(child_spec.at(k), trig.value(kind, k, n));
    }
    return out;
  }

  // M1/M4/M5/M8: three-term recovery of the mother spectrum.
  if (m == 1) {
    if (dct_mother) {
      out.at(1) = t.halve(child_spec.at(0));
      for (std::size_t k = 2; k + 2 <= n / 4; k += 2) {
        out.at(k + 1) = t.sub(child_spec.at(k), out.at(k - 1));
      }
    } else {
      out.at(n / 4 - 1) = t.halve(child_spec.at(n / 4));
      for (std::size_t k = n / 4 - 2; k >= 2; k -= 2) {
        out.at(k - 1) = t.sub(child_spec.at(k), out.at(k + 1));
      }
    }
    return out;
  }
  if (m == 4) {
    if (dct_mother) {
      for (std::size_t k = 1; k + 2 < n / 4; k += 2) {
        out.at(k) = t.add(child_spec.at(k - 1), child_spec.at(k + 1));
      }
      out.at(n / 4 - 1) = child_spec.at(n / 4 - 2);  // child spectrum is 0 at n/4
    } else {
      out.at(1) = child_spec.at(2);  // child spectrum is 0 at harmonic 0
      for (std::size_t k = 3; k < n / 4; k += 2) {
        out.at(k) = t.add(child_spec.at(k - 1), child_spec.at(k + 1));
      }
    }
    return out;
  }
  if (m == 5) {
    if (dct_mother) {
      out.at(n / 4 - 1) = t.halve(child_spec.at(n / 4));
      for (std::size_t k = n / 4 - 2; k >= 2; k -= 2) {
        out.at(k - 1) = t.add(child_spec.at(k), out.at(k + 1));
      }
    } else {
      out.at(1) = t.halve(child_spec.at(0));
      for (std::size_t k = 2; k + 2 <= n / 4; k += 2) {
        out.at(k + 1) = t.add(child_spec.at(k), out.at(k - 1));
      }
    }
    return out;
  }
  // m == 8
  if (dct_mother) {
    out.at(1) = child_spec.at(2);  // child spectrum is 0 at harmonic 0
    for (std::size_t k = 3; k < n / 4; k += 2) {
      out.at(k) = t.sub(child_spec.at(k + 1), child_spec.at(k - 1));
    }
  } else {
    for (std::size_t k = 1; k + 2 < n / 4; k += 2) {
      out.at(k) = t.sub(child_spec.at(k - 1), child_spec.at(k + 1));
    }
    out.at(n / 4 - 1) = child_spec.at(n / 4 - 2);  // child spectrum is 0 at n/4
  }
  return out;
}

void require(bool ok, const char* what) {
  if (!ok) fail(what);
}

}  // namespace

const char* elaboration_name(ElaborationId id) {
  switch (id) {
    case EID::SplitComplex:
      return "split-complex";
    case EID::SplitReal:
      return "split-real";
    case EID::HalveEvenHarmonics:
      return "halve-even-harmonics";
    case EID::HalveEvenTime:
      return "halve-even-time";
    case EID::SplitHarmonicParity:
      return "split-harmonic-parity";
    case EID::SplitTimeParity:
      return "split-time-parity";
    case EID::AmConvert1:
      return "am-convert-1";
    case EID::AmConvert2:
      return "am-convert-2";
    case EID::AmConvert3:
      return "am-convert-3";
    case EID::AmConvert4:
      return "am-convert-4";
    case EID::AmConvert5:
      return "am-convert-5";
    case EID::AmConvert6:
      return "am-convert-6";
    case EID::AmConvert7:
      return "am-convert-7";
    case EID::AmConvert8:
      return "am-convert-8";
  }
  return "?";
}

bool is_decomposition(ElaborationId id) {
  switch (id) {
    case EID::SplitComplex:
    case EID::SplitReal:
    case EID::SplitHarmonicParity:
    case EID::SplitTimeParity:
      return true;
    default:
      return false;
  }
}

bool is_am_conversion(ElaborationId id) {
  return static_cast<int>(id) >= static_cast<int>(EID::AmConvert1);
}

std::vector<ElaborationBinding> elaboration_bindings(ElaborationId id) {
  std::size_t count = 0, n_children = 1, divisor = 1;
  const BindingRow* rows = binding_rows(id, count, n_children, divisor);
  std::vector<ElaborationBinding> out;
  out.reserve(count);
  for (std::size_t i = 0; i < count; ++i) {
    out.push_back(make_binding(id, rows[i], n_children, divisor));
  }
  return out;
}

ElaborationBinding binding_for(ElaborationId id, SignalType mother) {
  for (const ElaborationBinding& b : elaboration_bindings(id)) {
    if (b.mother == mother) return b;
  }
  fail(std::string(elaboration_name(id)) + " does not apply to " +
       type_name(mother));
}

const char* trig_kind_name(TrigKind kind) {
  switch (kind) {
    case TrigKind::TwoCos:
      return "2cos";
    case TrigKind::TwoSin:
      return "2sin";
    case TrigKind::InvTwoCos:
      return "1/(2cos)";
    case TrigKind::InvTwoSin:
      return "1/(2sin)";
  }
  return "?";
}

double modulation_value(TrigKind kind, std::size_t index,
                        std::size_t periodization) {
  const long double angle = 2.0L * std::numbers::pi_v<long double> *
                            static_cast<long double>(index) /
                            static_cast<long double>(periodization);
  switch (kind) {
    case TrigKind::TwoCos:
      return static_cast<double>(2.0L * std::cos(angle));
    case TrigKind::TwoSin:
      return static_cast<double>(2.0L * std::sin(angle));
    case TrigKind::InvTwoCos:
      return static_cast<double>(1.0L / (2.0L * std::cos(angle)));
    case TrigKind::InvTwoSin:
      return static_cast<double>(1.0L / (2.0L * std::sin(angle)));
  }
  fail("unknown trig kind");
}

double OnTheFlyTrig::base_constant() const {
  return static_cast<double>(
      std::cos(2.0L * std::numbers::pi_v<long double> / 8.0L));
}

SignalBuffer transform_forward(ElaborationId id, const SignalBuffer& mother,
                               const TrigSource& trig, OpMeter* meter) {
  require(!is_decomposition(id), "transform_forward needs a transformation");
  require(mother.domain == Domain::Temporal,
          "forward phase consumes a temporal signal");
  const ElaborationBinding b = binding_for(id, mother.type);
  Tally t(meter);
  if (id == EID::HalveEvenHarmonics || id == EID::HalveEvenTime) {
    return halve_forward(b, mother);
  }
  return am_forward(id, mother, trig, t);
}

SignalBuffer transform_backward(ElaborationId id,
                                const SignalBuffer& child_frequency,
                                const TrigSource& trig, OpMeter* meter) {
  require(!is_decomposition(id), "transform_backward needs a transformation");
  require(child_frequency.domain == Domain::Frequency,
          "backward phase consumes a frequency signal");
  Tally t(meter);
  for (const ElaborationBinding& b : elaboration_bindings(id)) {
    if (b.children[0] != child_frequency.type) continue;
    if (id == EID::HalveEvenHarmonics || id == EID::HalveEvenTime) {
      return halve_backward(b, child_frequency);
    }
    return am_backward(id, b, child_frequency, trig, t);
  }
  fail(std::string(elaboration_name(id)) + " has no child of type " +
       type_name(child_frequency.type));
}

std::array<SignalBuffer, 2> decompose_forward(ElaborationId id,
                                              const SignalBuffer& mother,
                                              OpMeter* meter) {
  require(is_decomposition(id), "decompose_forward needs a decomposition");
  require(mother.domain == Domain::Temporal,
          "forward phase consumes a temporal signal");
  const ElaborationBinding b = binding_for(id, mother.type);
  Tally t(meter);
  switch (id) {
    case EID::SplitComplex:
      return split_complex_forward(mother, t);
    case EID::SplitReal:
      return split_real_forward(mother, t);
    case EID::SplitHarmonicParity:
      return split_harm_forward(b, mother, t);
    default:
      return split_time_forward(b, mother, t);
  }
}

SignalBuffer recompose_backward(ElaborationId id,
                                const SignalBuffer& child0_frequency,
                                const SignalBuffer& child1_frequency,
                                OpMeter* meter) {
  require(is_decomposition(id), "recompose_backward needs a decomposition");
  require(child0_frequency.domain == Domain::Frequency &&
              child1_frequency.domain == Domain::Frequency,
          "backward phase consumes frequency signals");
  require(child0_frequency.periodization == child1_frequency.periodization,
          "children disagree on periodization");
  Tally t(meter);
  // Identify the binding from the child pair.
  for (const ElaborationBinding& b : elaboration_bindings(id)) {
    if (b.children[0] != child0_frequency.type ||
        b.children[1] != child1_frequency.type) {
      continue;
    }
    switch (id) {
      case EID::SplitComplex:
        return split_complex_backward(child0_frequency, child1_frequency, t);
      case EID::SplitReal:
        return split_real_backward(child0_frequency, child1_frequency, t);
      case EID::SplitHarmonicParity:
        return split_harm_backward(b, child0_frequency, child1_frequency, t);
      default:
        return split_time_backward(b, child0_frequency, child1_frequency, t);
    }
  }
  fail(std::string(elaboration_name(id)) + " has no child pair (" +
       type_name(child0_frequency.type) + ", " +
       type_name(child1_frequency.type) + ")");
}

}  // namespace amqft
