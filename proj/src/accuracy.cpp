#include "amqft/accuracy.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>
#include <vector>

#include "amqft/compensated.hpp"
#include "amqft/oracle.hpp"
#include "amqft/random.hpp"

namespace amqft {
namespace {

[[noreturn]] void fail(const std::string& what) {
  throw std::invalid_argument("accuracy: " + what);
}

SignalBuffer random_input(TransformKind kind, std::size_t n,
                          std::uint64_t seed, int trial) {
  SignalBuffer input =
      SignalBuffer::zeros(full_type_of(kind), n, Domain::Temporal);
  // Seeded by (kind, n, trial) only: every variant sees the same data.
  UniformSource source(mix_seed(seed, static_cast<std::uint64_t>(kind), n,
                                static_cast<std::uint64_t>(trial)));
  source.fill(input);
  return input;
}

// Relative L2 distance between computed cells and the long-double reference,
// accumulated in long double.
template <class Value>
long double relative_error(const std::vector<Value>& got,
                           const std::vector<long double>& want) {
  detail::CompensatedSum<long double> diff2;
  detail::CompensatedSum<long double> ref2;
  for (std::size_t i = 0; i < want.size(); ++i) {
    const long double d = static_cast<long double>(got[i]) - want[i];
    diff2.add(d * d);
    ref2.add(want[i] * want[i]);
  }
  if (ref2.value() <= 0.0L) {
    return diff2.value() > 0.0L ? 1.0L : 0.0L;
  }
  return std::sqrt(diff2.value() / ref2.value());
}

void validate(std::size_t n, int trials) {
  if (trials < 1) fail("trials must be positive");
  if (!is_power_of_two(n)) fail("size must be a power of two");
}

}  // namespace

AccuracyCell measure_accuracy(VariantId v, TransformKind kind, std::size_t n,
                              int trials, std::uint64_t seed) {
  validate(n, trials);
  TrigTable table(v, n < 8 ? 8 : n, TrigMode::Precomputed);
  AccuracyCell cell;
  cell.variant = variant_number(v);
  cell.kind = kind;
  cell.n = n;
  cell.trials = trials;
  detail::CompensatedSum<long double> sum;
  long double worst = 0.0L;
  for (int trial = 0; trial < trials; ++trial) {
    const SignalBuffer input = random_input(kind, n, seed, trial);
    const std::vector<long double> reference = reference_spectrum(input);
    const SignalBuffer spectrum = execute(v, input, table);
    const long double err = relative_error(spectrum.cells, reference);
    sum.add(err);
    worst = std::max(worst, err);
  }
  cell.mean_rel_err = static_cast<double>(sum.value() / trials);
  cell.max_rel_err = static_cast<double>(worst);
  return cell;
}

OrderingReport ordering_check(TransformKind kind, std::size_t n, int trials,
                              std::uint64_t seed) {
  validate(n, trials);
  OrderingReport report;
  report.kind = kind;
  report.n = n;
  report.trials = trials;

  std::vector<TrigTable> tables;
  tables.reserve(std::size(kAllVariants));
  for (VariantId v : kAllVariants) {
    tables.emplace_back(v, n < 8 ? 8 : n, TrigMode::Precomputed);
  }

  std::array<detail::CompensatedSum<long double>, 8> sums;
  detail::CompensatedSum<long double> self_sum;
  for (int trial = 0; trial < trials; ++trial) {
    const SignalBuffer input = random_input(kind, n, seed, trial);
    const std::vector<long double> reference = reference_spectrum(input);
    // Gauge the reference itself: the same sums accumulated in the opposite
    // index order walk a different rounding path, so their distance bounds
    // the reference's own noise.
    self_sum.add(
        relative_error(reference_spectrum_reversed(input), reference));
    for (std::size_t vi = 0; vi < std::size(kAllVariants); ++vi) {
      const SignalBuffer spectrum =
          execute(kAllVariants[vi], input, tables[vi]);
      const long double err = relative_error(spectrum.cells, reference);
      sums[vi].add(err);
      report.max_err[vi] =
          std::max(report.max_err[vi], static_cast<double>(err));
    }
  }
  for (std::size_t vi = 0; vi < 8; ++vi) {
    report.mean_err[vi] = static_cast<double>(sums[vi].value() / trials);
  }
  report.reference_self_err =
      static_cast<double>(self_sum.value() / trials);

  const double worst_cosine =
      *std::max_element(report.mean_err.begin(), report.mean_err.begin() + 4);
  const double best_sine =
      *std::min_element(report.mean_err.begin() + 4, report.mean_err.end());
  const double best_overall =
      *std::min_element(report.mean_err.begin(), report.mean_err.end());

  report.families_ordered = worst_cosine < best_sine;
  report.families_margin = 10.0 * worst_cosine <= best_sine;
  report.v2_best_of_cosine = report.mean_err[1] <= report.mean_err[0] &&
                             report.mean_err[1] <= report.mean_err[2];
  report.reference_trustworthy =
      10.0 * report.reference_self_err <= best_overall;
  return report;
}

}  // namespace amqft
