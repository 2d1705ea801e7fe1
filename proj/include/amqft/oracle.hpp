#pragma once

// Direct O(N^2) reference transforms.
//
// These evaluate the defining sums term by term, with trig values computed
// per call from the (modularly reduced) angle.  They share no code or
// constant tables with the fast recursive path, so agreement between the two
// is meaningful evidence of correctness.

#include <span>
#include <vector>

#include "amqft/signal.hpp"

namespace amqft {

// Working: plain double accumulation.  Extended: long double accumulation
// with compensated summation — effective precision far beyond double, used
// as the error-measurement reference.
enum class PrecisionMode { Working, Extended };

// Direct spectrum of any storable signal, summing only over stored samples
// and evaluating only stored harmonics.
SignalBuffer pruned_transform(const SignalBuffer& temporal,
                              PrecisionMode mode = PrecisionMode::Working);

// Extended-precision spectrum cells, unrounded.
std::vector<long double> reference_spectrum(const SignalBuffer& temporal);

// The same sums accumulated in the opposite index order.  Two independent
// rounding paths through the same arithmetic: their distance bounds the
// reference's own noise, which is how the accuracy harness certifies the
// precision headroom of the reference before ranking algorithms against it.
std::vector<long double> reference_spectrum_reversed(
    const SignalBuffer& temporal);

// Full-signal conveniences over raw cell vectors.
// naive_cdft: 2N interleaved re/im cells -> 2N interleaved spectrum cells.
// naive_rdft: N samples -> N packed cells (Re S(j) for j <= N/2, Im S(j) after).
// naive_dct:  N/2+1 samples s(0..N/2) -> N/2+1 spectrum values.
// naive_dst:  N/2-1 samples s(1..N/2-1) -> N/2-1 spectrum values.
std::vector<double> naive_cdft(std::span<const double> interleaved,
                               PrecisionMode mode = PrecisionMode::Working);
std::vector<double> naive_rdft(std::span<const double> samples,
                               PrecisionMode mode = PrecisionMode::Working);
std::vector<double> naive_dct(std::span<const double> samples,
                              PrecisionMode mode = PrecisionMode::Working);
std::vector<double> naive_dst(std::span<const double> samples,
                              PrecisionMode mode = PrecisionMode::Working);

// Single-harmonic direct evaluation of a cosine/sine-lens signal at an
// arbitrary integer harmonic — including harmonics outside the stored set
// and negative ones.  Used to check symmetry/extension identities.
double dct_harmonic(const SignalBuffer& temporal, long long harmonic,
                    PrecisionMode mode = PrecisionMode::Working);
double dst_harmonic(const SignalBuffer& temporal, long long harmonic,
                    PrecisionMode mode = PrecisionMode::Working);

}  // namespace amqft
