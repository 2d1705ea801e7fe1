#include "amqft/oracle.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "amqft/compensated.hpp"

namespace amqft {

namespace {

// cos/sin of 2*pi*m/n for m in [0, n).  Computing from the reduced residue
// keeps every argument in [0, 2*pi), so the trig error stays at the few-ulp
// level no matter how large n*k grows.
template <class Real>
struct AngleTable {
  std::vector<Real> cosv, sinv;

  explicit AngleTable(std::size_t n) : cosv(n), sinv(n) {
    const Real step = 2 * std::numbers::pi_v<Real> / static_cast<Real>(n);
    for (std::size_t m = 0; m < n; ++m) {
      const Real angle = step * static_cast<Real>(m);
      cosv[m] = std::cos(angle);
      sinv[m] = std::sin(angle);
    }
  }
};

std::size_t reduced_index(std::size_t index, long long harmonic,
                          std::size_t n) {
  const long long m =
      (static_cast<long long>(index) * harmonic) % static_cast<long long>(n);
  return static_cast<std::size_t>(m < 0 ? m + static_cast<long long>(n) : m);
}

template <class Real>
struct PlainSum {
  Real acc = 0;
  void add(Real x) { acc += x; }
  Real value() const { return acc; }
};

template <class Real, class Sum>
Real lens_point(const SignalBuffer& in, const AngleTable<Real>& trig,
                long long harmonic, bool sine_lens, bool reverse = false) {
  const IndexRange r = in.range();
  const auto& basis = sine_lens ? trig.sinv : trig.cosv;
  Sum sum;
  for (std::size_t i = 0; i < r.count; ++i) {
    const std::size_t p = reverse ? r.count - 1 - i : i;
    const std::size_t index = r.index_at(p);
    sum.add(static_cast<Real>(in.cells[p]) *
            basis[reduced_index(index, harmonic, in.periodization)]);
  }
  return sum.value();
}

template <class Real, class Sum>
std::vector<Real> eval_cells(const SignalBuffer& in, bool reverse = false) {
  if (in.domain != Domain::Temporal) {
    throw std::invalid_argument("oracle input must be a temporal signal");
  }
  const std::size_t n = in.periodization;
  const AngleTable<Real> trig(n);
  std::vector<Real> out;

  switch (kind_of(in.type)) {
    case TransformKind::Cdft: {
      out.resize(2 * n);
      for (std::size_t k = 0; k < n; ++k) {
        Sum re, im;
        for (std::size_t i = 0; i < n; ++i) {
          const std::size_t m = reverse ? n - 1 - i : i;
          const std::size_t t = reduced_index(m, static_cast<long long>(k), n);
          const Real c = trig.cosv[t];
          const Real s = trig.sinv[t];
          const Real xr = static_cast<Real>(in.cells[2 * m]);
          const Real xi = static_cast<Real>(in.cells[2 * m + 1]);
          re.add(xr * c + xi * s);
          im.add(xi * c - xr * s);
        }
        out[2 * k] = re.value();
        out[2 * k + 1] = im.value();
      }
      break;
    }
    case TransformKind::Rdft: {
      out.resize(n);
      for (std::size_t k = 0; k < n; ++k) {
        const bool real_part = k <= n / 2;
        Sum sum;
        for (std::size_t i = 0; i < n; ++i) {
          const std::size_t m = reverse ? n - 1 - i : i;
          const std::size_t t = reduced_index(m, static_cast<long long>(k), n);
          sum.add(static_cast<Real>(in.cells[m]) *
                  (real_part ? trig.cosv[t] : trig.sinv[t]));
        }
        out[k] = real_part ? sum.value() : -sum.value();
      }
      break;
    }
    case TransformKind::Dct:
    case TransformKind::Dst: {
      const bool sine_lens = kind_of(in.type) == TransformKind::Dst;
      const IndexRange kr = stored_range(in.type, n, Domain::Frequency);
      out.resize(kr.count);
      for (std::size_t p = 0; p < kr.count; ++p) {
        out[p] = lens_point<Real, Sum>(
            in, trig, static_cast<long long>(kr.index_at(p)), sine_lens,
            reverse);
      }
      break;
    }
  }
  return out;
}

template <class Real>
std::vector<Real> eval_dispatch(const SignalBuffer& in, PrecisionMode mode) {
  return mode == PrecisionMode::Working
             ? eval_cells<Real, PlainSum<Real>>(in)
             : eval_cells<Real, detail::CompensatedSum<Real>>(in);
}

SignalBuffer full_buffer(SignalType type, std::span<const double> cells,
                         std::size_t n) {
  SignalBuffer buf = SignalBuffer::zeros(type, n, Domain::Temporal);
  if (cells.size() != buf.cells.size()) {
    throw std::invalid_argument("cell count does not match the signal type");
  }
  buf.cells.assign(cells.begin(), cells.end());
  return buf;
}

}  // namespace

SignalBuffer pruned_transform(const SignalBuffer& temporal,
                              PrecisionMode mode) {
  SignalBuffer out = SignalBuffer::zeros(temporal.type,
                                         temporal.periodization,
                                         Domain::Frequency);
  if (mode == PrecisionMode::Working) {
    const auto cells = eval_dispatch<double>(temporal, mode);
    out.cells.assign(cells.begin(), cells.end());
  } else {
    const auto cells = eval_dispatch<long double>(temporal, mode);
    for (std::size_t i = 0; i < cells.size(); ++i) {
      out.cells[i] = static_cast<double>(cells[i]);
    }
  }
  return out;
}

std::vector<long double> reference_spectrum(const SignalBuffer& temporal) {
  return eval_cells<long double, detail::CompensatedSum<long double>>(
      temporal);
}

std::vector<long double> reference_spectrum_reversed(
    const SignalBuffer& temporal) {
  return eval_cells<long double, detail::CompensatedSum<long double>>(
      temporal, /*reverse=*/true);
}

std::vector<double> naive_cdft(std::span<const double> interleaved,
                               PrecisionMode mode) {
  if (interleaved.size() % 2 != 0) {
    throw std::invalid_argument("interleaved complex input needs 2N cells");
  }
  return pruned_transform(
             full_buffer(SignalType::CdftFull, interleaved,
                         interleaved.size() / 2),
             mode)
      .cells;
}

std::vector<double> naive_rdft(std::span<const double> samples,
                               PrecisionMode mode) {
  return pruned_transform(
             full_buffer(SignalType::RdftFull, samples, samples.size()), mode)
      .cells;
}

std::vector<double> naive_dct(std::span<const double> samples,
                              PrecisionMode mode) {
  if (samples.size() < 2) {
    throw std::invalid_argument("cosine lens needs at least 2 samples");
  }
  return pruned_transform(full_buffer(SignalType::DctFull, samples,
                                      2 * (samples.size() - 1)),
                          mode)
      .cells;
}

std::vector<double> naive_dst(std::span<const double> samples,
                              PrecisionMode mode) {
  return pruned_transform(full_buffer(SignalType::DstFull, samples,
                                      2 * (samples.size() + 1)),
                          mode)
      .cells;
}

double dct_harmonic(const SignalBuffer& temporal, long long harmonic,
                    PrecisionMode mode) {
  if (kind_of(temporal.type) != TransformKind::Dct ||
      temporal.domain != Domain::Temporal) {
    throw std::invalid_argument("dct_harmonic needs a temporal cosine signal");
  }
  if (mode == PrecisionMode::Working) {
    const AngleTable<double> trig(temporal.periodization);
    return lens_point<double, PlainSum<double>>(temporal, trig, harmonic,
                                                false);
  }
  const AngleTable<long double> trig(temporal.periodization);
  return static_cast<double>(
      lens_point<long double, detail::CompensatedSum<long double>>(
          temporal, trig, harmonic, false));
}

double dst_harmonic(const SignalBuffer& temporal, long long harmonic,
                    PrecisionMode mode) {
  if (kind_of(temporal.type) != TransformKind::Dst ||
      temporal.domain != Domain::Temporal) {
    throw std::invalid_argument("dst_harmonic needs a temporal sine signal");
  }
  if (mode == PrecisionMode::Working) {
    const AngleTable<double> trig(temporal.periodization);
    return lens_point<double, PlainSum<double>>(temporal, trig, harmonic,
                                                true);
  }
  const AngleTable<long double> trig(temporal.periodization);
  return static_cast<double>(
      lens_point<long double, detail::CompensatedSum<long double>>(
          temporal, trig, harmonic, true));
}

}  // namespace amqft
