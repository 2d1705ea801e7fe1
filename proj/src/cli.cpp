#include "amqft/cli.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <map>
#include <ostream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "json.hpp"

#include "amqft/accuracy.hpp"
#include "amqft/compensated.hpp"
#include "amqft/metering.hpp"
#include "amqft/opmeter.hpp"
#include "amqft/oracle.hpp"
#include "amqft/random.hpp"
#include "amqft/variants.hpp"

namespace amqft {
namespace {

using Json = nlohmann::ordered_json;

// Configuration problems surface as exit code 2, not as crashes.
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

void require(bool ok, const std::string& what) {
  if (!ok) throw UsageError(what);
}

constexpr TransformKind kKindOrder[] = {TransformKind::Cdft,
                                        TransformKind::Rdft,
                                        TransformKind::Dct,
                                        TransformKind::Dst};

std::string fmt_real(double x) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

std::string csv_cell(const Json& v) {
  if (v.is_string()) return v.get<std::string>();
  if (v.is_boolean()) return v.get<bool>() ? "true" : "false";
  if (v.is_number_float()) return fmt_real(v.get<double>());
  if (v.is_number_unsigned()) return std::to_string(v.get<std::uint64_t>());
  if (v.is_number_integer()) return std::to_string(v.get<std::int64_t>());
  return v.dump();
}

void emit_rows(const RunConfig& config, const std::vector<std::string>& columns,
               const std::vector<Json>& rows, std::ostream& out) {
  if (config.format == OutputFormat::Json) {
    Json arr = Json::array();
    for (const Json& r : rows) arr.push_back(r);
    out << arr.dump(2) << '\n';
    return;
  }
  for (std::size_t i = 0; i < columns.size(); ++i) {
    out << (i ? "," : "") << columns[i];
  }
  out << '\n';
  for (const Json& r : rows) {
    for (std::size_t i = 0; i < columns.size(); ++i) {
      out << (i ? "," : "") << csv_cell(r.at(columns[i]));
    }
    out << '\n';
  }
}

void validate_common(const RunConfig& c) {
  require(c.min_log2 >= 1 && c.max_log2 <= 16 && c.min_log2 <= c.max_log2,
          "size bounds must satisfy 1 <= min-log2 <= max-log2 <= 16");
  require(!c.variants.empty(), "variant set must not be empty");
  for (int v : c.variants) {
    require(v >= 1 && v <= 8, "variants must lie in 1..8");
  }
  require(!c.kinds.empty(), "kind set must not be empty");
  require(c.tolerance > 0.0, "tolerance must be positive");
  require(c.trials >= 1, "trials must be positive");
}

std::vector<int> sorted_variants(const RunConfig& c) {
  std::vector<int> vs = c.variants;
  std::sort(vs.begin(), vs.end());
  vs.erase(std::unique(vs.begin(), vs.end()), vs.end());
  return vs;
}

std::vector<TransformKind> sorted_kinds(const RunConfig& c) {
  std::vector<TransformKind> ks;
  for (TransformKind k : kKindOrder) {
    if (std::find(c.kinds.begin(), c.kinds.end(), k) != c.kinds.end()) {
      ks.push_back(k);
    }
  }
  return ks;
}

std::vector<std::size_t> size_grid(const RunConfig& c) {
  std::vector<std::size_t> ns;
  for (int lg = c.min_log2; lg <= c.max_log2; ++lg) {
    ns.push_back(std::size_t{1} << lg);
  }
  return ns;
}

bool admissible(TransformKind kind, std::size_t n) {
  return n >= min_periodization(full_type_of(kind));
}

long double rel_error(const std::vector<double>& got,
                      const std::vector<long double>& want) {
  detail::CompensatedSum<long double> diff2;
  detail::CompensatedSum<long double> ref2;
  for (std::size_t i = 0; i < want.size(); ++i) {
    const long double d = static_cast<long double>(got[i]) - want[i];
    diff2.add(d * d);
    ref2.add(want[i] * want[i]);
  }
  if (ref2.value() <= 0.0L) return diff2.value() > 0.0L ? 1.0L : 0.0L;
  return std::sqrt(diff2.value() / ref2.value());
}

// --------------------------------------------------------------------------
// verify: every selected variant against the extended-precision reference.

int cmd_verify(const RunConfig& c, std::vector<std::string>& columns,
               std::vector<Json>& rows) {
  columns = {"variant", "kind", "N", "trials", "max_rel_err", "pass"};
  const std::vector<int> variants = sorted_variants(c);
  const std::vector<TransformKind> kinds = sorted_kinds(c);
  const std::vector<std::size_t> grid = size_grid(c);

  std::size_t table_n = std::size_t{1} << c.max_log2;
  if (table_n < 8) table_n = 8;
  std::map<int, TrigTable> tables;
  for (int v : variants) {
    tables.try_emplace(v, variant_from_number(v), table_n,
                       TrigMode::Precomputed);
    if (c.corrupt_constants) tables.at(v).corrupt_for_testing();
  }

  // max_err[{kind slot, variant, n}], filled only for admissible cells.
  std::map<std::array<std::size_t, 3>, long double> max_err;
  for (std::size_t ki = 0; ki < kinds.size(); ++ki) {
    for (std::size_t n : grid) {
      if (!admissible(kinds[ki], n)) continue;
      for (int trial = 0; trial < c.trials; ++trial) {
        SignalBuffer input = SignalBuffer::zeros(full_type_of(kinds[ki]), n,
                                                 Domain::Temporal);
        UniformSource source(
            mix_seed(c.seed, static_cast<std::uint64_t>(kinds[ki]), n,
                     static_cast<std::uint64_t>(trial)));
        source.fill(input);
        const std::vector<long double> reference = reference_spectrum(input);
        for (int v : variants) {
          const SignalBuffer spectrum =
              execute(variant_from_number(v), input, tables.at(v));
          const long double err = rel_error(spectrum.cells, reference);
          auto& slot =
              max_err[{ki, static_cast<std::size_t>(v), n}];
          slot = std::max(slot, err);
        }
      }
    }
  }
  require(!max_err.empty(),
          "no admissible (kind, size) cells in the requested range");

  bool all_pass = true;
  for (std::size_t ki = 0; ki < kinds.size(); ++ki) {
    for (int v : variants) {
      for (std::size_t n : grid) {
        const auto it = max_err.find({ki, static_cast<std::size_t>(v), n});
        if (it == max_err.end()) continue;
        const double worst = static_cast<double>(it->second);
        const bool pass = worst <= c.tolerance;
        all_pass = all_pass && pass;
        Json row;
        row["variant"] = v;
        row["kind"] = kind_name(kinds[ki]);
        row["N"] = n;
        row["trials"] = c.trials;
        row["max_rel_err"] = worst;
        row["pass"] = pass;
        rows.push_back(std::move(row));
      }
    }
  }
  return all_pass ? kExitPass : kExitFail;
}

// --------------------------------------------------------------------------
// count: metered operations against the closed-form predictions.

int cmd_count(const RunConfig& c, std::vector<std::string>& columns,
              std::vector<Json>& rows) {
  columns = {"transform",       "variant",        "N",
             "adds",            "muls",           "binary_translations",
             "flops_caseA",     "flops_caseB",    "predicted_adds",
             "predicted_muls",  "predicted_bt",   "match"};
  require(c.min_log2 >= 2,
          "count needs sizes >= 4; the closed forms start there");
  bool all_match = true;
  for (TransformKind kind : sorted_kinds(c)) {
    for (int v : sorted_variants(c)) {
      const VariantId variant = variant_from_number(v);
      for (std::size_t n : size_grid(c)) {
        const OpMeter m = measure(variant, kind, n, c.seed);
        const CostModel p = predicted_cost(kind, n);
        // The halving-free variants execute zero halvings, so their expected
        // binary-translation count is zero rather than the closed form.
        const std::int64_t expected_bt =
            uses_binary_translations(variant) ? p.binary_translations : 0;
        const bool match =
            m.adds == static_cast<std::uint64_t>(p.adds) &&
            m.muls == static_cast<std::uint64_t>(p.muls) &&
            m.binary_translations == static_cast<std::uint64_t>(expected_bt);
        all_match = all_match && match;
        Json row;
        row["transform"] = kind_name(kind);
        row["variant"] = v;
        row["N"] = n;
        row["adds"] = m.adds;
        row["muls"] = m.muls;
        row["binary_translations"] = m.binary_translations;
        row["flops_caseA"] = m.flops_case_a();
        row["flops_caseB"] = m.flops_case_b();
        row["predicted_adds"] = p.adds;
        row["predicted_muls"] = p.muls;
        row["predicted_bt"] = expected_bt;
        row["match"] = match;
        rows.push_back(std::move(row));
      }
    }
  }
  return all_match ? kExitPass : kExitFail;
}

// --------------------------------------------------------------------------
// tables: the published comparison tables, metered columns recomputed live.

int cmd_tables(const RunConfig& c, std::vector<std::string>& columns,
               std::vector<Json>& rows) {
  std::vector<std::size_t> grid;
  for (int lg = 2; lg <= 11; ++lg) grid.push_back(std::size_t{1} << lg);
  // Variant 1 contains halvings, so one metered run yields every column
  // (counts besides halvings are variant-independent).
  const VariantId metered = VariantId::V1;

  if (c.table_name == "costo") {
    columns = {"transform", "N", "muls", "adds", "binary_translations"};
    for (TransformKind kind : sorted_kinds(c)) {
      for (std::size_t n : grid) {
        const OpMeter m = measure(metered, kind, n, c.seed);
        Json row;
        row["transform"] = kind_name(kind);
        row["N"] = n;
        row["muls"] = m.muls;
        row["adds"] = m.adds;
        row["binary_translations"] = m.binary_translations;
        rows.push_back(std::move(row));
      }
    }
    return kExitPass;
  }
  if (c.table_name == "flops") {
    columns = {"transform", "N", "flops_caseA", "flops_caseB"};
    for (TransformKind kind : sorted_kinds(c)) {
      for (std::size_t n : grid) {
        const OpMeter m = measure(metered, kind, n, c.seed);
        Json row;
        row["transform"] = kind_name(kind);
        row["N"] = n;
        row["flops_caseA"] = m.flops_case_a();
        row["flops_caseB"] = m.flops_case_b();
        rows.push_back(std::move(row));
      }
    }
    return kExitPass;
  }
  if (c.table_name == "compare-add" || c.table_name == "compare-mul") {
    const bool add = c.table_name == "compare-add";
    columns = {"N", "var_QFT", "SR_4/2", "SR_3/3", "JF", "clas_QFT"};
    for (std::size_t n : grid) {
      const OpMeter m = measure(metered, TransformKind::Cdft, n, c.seed);
      Json row;
      row["N"] = n;
      row["var_QFT"] = add ? m.adds : m.muls;
      for (ReferenceAlgorithm a :
           {ReferenceAlgorithm::SplitRadix42, ReferenceAlgorithm::SplitRadix33,
            ReferenceAlgorithm::JohnsonFrigo,
            ReferenceAlgorithm::ClassicalQft}) {
        const LiteratureCounts lit = reference_literature_counts(a, n);
        row[reference_algorithm_name(a)] = add ? *lit.adds : *lit.muls;
      }
      rows.push_back(std::move(row));
    }
    return kExitPass;
  }
  if (c.table_name == "compare-flop") {
    columns = {"N", "var_QFT_caseA", "var_QFT_caseB", "SR", "JF", "clas_QFT"};
    for (std::size_t n : grid) {
      const OpMeter m = measure(metered, TransformKind::Cdft, n, c.seed);
      Json row;
      row["N"] = n;
      row["var_QFT_caseA"] = m.flops_case_a();
      row["var_QFT_caseB"] = m.flops_case_b();
      row["SR"] = *reference_literature_counts(
                       ReferenceAlgorithm::SplitRadix42, n)
                       .flops;
      row["JF"] = *reference_literature_counts(
                       ReferenceAlgorithm::JohnsonFrigo, n)
                       .flops;
      row["clas_QFT"] = *reference_literature_counts(
                             ReferenceAlgorithm::ClassicalQft, n)
                             .flops;
      rows.push_back(std::move(row));
    }
    return kExitPass;
  }
  throw UsageError("unknown table name '" + c.table_name +
                   "' (expected costo, flops, compare-add, compare-mul or "
                   "compare-flop)");
}

// --------------------------------------------------------------------------
// accuracy: error statistics, ordering assertions, plot series.

int cmd_accuracy(const RunConfig& c, std::vector<std::string>& columns,
                 std::vector<Json>& rows, std::ostream& err) {
  columns = {"variant", "kind", "N", "trials", "mean_rel_err", "max_rel_err"};
  const std::vector<int> variants = sorted_variants(c);
  const std::vector<TransformKind> kinds = sorted_kinds(c);
  const std::vector<std::size_t> grid = size_grid(c);
  const bool full_set = variants == std::vector<int>{1, 2, 3, 4, 5, 6, 7, 8};
  // The ordering claims need enough roundings to separate the families;
  // below this size they are reported but not judged.
  constexpr std::size_t kOrderingFloor = 256;

  // series[(kind slot, variant)] -> (N, mean_rel_err) pairs.
  std::map<std::pair<std::size_t, int>,
           std::vector<std::pair<std::size_t, double>>>
      series;
  int code = kExitPass;
  bool any = false;

  for (std::size_t ki = 0; ki < kinds.size(); ++ki) {
    const TransformKind kind = kinds[ki];
    std::vector<std::vector<AccuracyCell>> per_variant(variants.size());
    for (std::size_t n : grid) {
      if (!admissible(kind, n)) continue;
      any = true;
      if (full_set) {
        const OrderingReport report = ordering_check(kind, n, c.trials, c.seed);
        for (int v = 1; v <= 8; ++v) {
          AccuracyCell cell;
          cell.variant = v;
          cell.kind = kind;
          cell.n = n;
          cell.trials = c.trials;
          cell.mean_rel_err = report.mean_err[v - 1];
          cell.max_rel_err = report.max_err[v - 1];
          per_variant[static_cast<std::size_t>(v - 1)].push_back(cell);
        }
        if (n >= kOrderingFloor) {
          if (!report.reference_trustworthy) {
            err << "warning: " << kind_name(kind) << " N=" << n
                << ": reference self-error " << fmt_real(report.reference_self_err)
                << " is within 10x of the best variant; refusing to rank\n";
          } else {
            if (!report.families_ordered) {
              err << "ordering failure: " << kind_name(kind) << " N=" << n
                  << ": a sine-modulated variant beat a cosine-modulated one\n";
              code = kExitFail;
            }
            if (!report.v2_best_of_cosine) {
              err << "ordering failure: " << kind_name(kind) << " N=" << n
                  << ": variant 2 is not the most accurate of 1..3\n";
              code = kExitFail;
            }
            if (report.families_ordered && !report.families_margin) {
              err << "warning: " << kind_name(kind) << " N=" << n
                  << ": families ordered but separated by less than 10x\n";
            }
          }
        }
      } else {
        for (std::size_t vi = 0; vi < variants.size(); ++vi) {
          per_variant[vi].push_back(
              measure_accuracy(variant_from_number(variants[vi]), kind, n,
                               c.trials, c.seed));
        }
      }
    }
    for (std::size_t vi = 0; vi < variants.size(); ++vi) {
      for (const AccuracyCell& cell : per_variant[vi]) {
        Json row;
        row["variant"] = cell.variant;
        row["kind"] = kind_name(cell.kind);
        row["N"] = cell.n;
        row["trials"] = cell.trials;
        row["mean_rel_err"] = cell.mean_rel_err;
        row["max_rel_err"] = cell.max_rel_err;
        rows.push_back(std::move(row));
        series[{ki, cell.variant}].emplace_back(cell.n, cell.mean_rel_err);
      }
    }
  }
  require(any, "no admissible (kind, size) cells in the requested range");

  if (!c.output_path.empty()) {
    for (std::size_t ki = 0; ki < kinds.size(); ++ki) {
      for (int v : variants) {
        const auto it = series.find({ki, v});
        if (it == series.end()) continue;
        std::string path = c.output_path;
        if (kinds.size() > 1) {
          path += std::string(".") + kind_name(kinds[ki]);
        }
        path += ".v" + std::to_string(v) + ".dat";
        std::ofstream f(path);
        require(static_cast<bool>(f), "cannot open series file: " + path);
        for (const auto& [n, mean] : it->second) {
          f << n << ' ' << fmt_real(mean) << '\n';
        }
      }
    }
  }
  return code;
}

}  // namespace

int run_command(const RunConfig& config, std::ostream& out,
                std::ostream& err) {
  try {
    validate_common(config);
    std::vector<std::string> columns;
    std::vector<Json> rows;
    int code = kExitPass;
    switch (config.command) {
      case Command::Verify:
        code = cmd_verify(config, columns, rows);
        break;
      case Command::Count:
        code = cmd_count(config, columns, rows);
        break;
      case Command::Tables:
        code = cmd_tables(config, columns, rows);
        break;
      case Command::Accuracy:
        code = cmd_accuracy(config, columns, rows, err);
        break;
    }
    if (!config.output_path.empty()) {
      std::ofstream file(config.output_path);
      require(static_cast<bool>(file),
              "cannot open output file: " + config.output_path);
      emit_rows(config, columns, rows, file);
      err << "wrote " << rows.size() << " rows to " << config.output_path
          << '\n';
    } else {
      emit_rows(config, columns, rows, out);
    }
    return code;
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }
}

// ---------------------------------------------------------------------------
// Flag parsing helpers.

namespace {

int parse_int(const std::string& text) {
  std::size_t pos = 0;
  int value = 0;
  try {
    value = std::stoi(text, &pos);
  } catch (const std::exception&) {
    throw std::invalid_argument("not an integer: '" + text + "'");
  }
  if (pos != text.size()) {
    throw std::invalid_argument("not an integer: '" + text + "'");
  }
  return value;
}

std::vector<std::string> split_commas(const std::string& text) {
  std::vector<std::string> tokens;
  std::string current;
  for (char ch : text) {
    if (ch == ',') {
      tokens.push_back(current);
      current.clear();
    } else {
      current.push_back(ch);
    }
  }
  tokens.push_back(current);
  return tokens;
}

// Splits "A..B" or "A-B" into its endpoints; false when `text` is no range.
bool split_range(const std::string& text, std::string& lo, std::string& hi) {
  const std::size_t dots = text.find("..");
  if (dots != std::string::npos) {
    lo = text.substr(0, dots);
    hi = text.substr(dots + 2);
    return true;
  }
  const std::size_t dash = text.find('-', 1);  // position 0 would be a sign
  if (dash != std::string::npos) {
    lo = text.substr(0, dash);
    hi = text.substr(dash + 1);
    return true;
  }
  return false;
}

int checked_log2_size(const std::string& text) {
  const int value = parse_int(text);
  if (value < 2 || !is_power_of_two(static_cast<std::size_t>(value))) {
    throw std::invalid_argument("size '" + text +
                                "' is not a power of two >= 2");
  }
  int lg = 0;
  for (int v = value; v > 1; v >>= 1) ++lg;
  return lg;
}

}  // namespace

std::vector<int> parse_variant_set(const std::string& text) {
  std::vector<int> out;
  for (const std::string& token : split_commas(text)) {
    if (token.empty()) {
      throw std::invalid_argument("empty variant token in '" + text + "'");
    }
    std::string lo, hi;
    if (split_range(token, lo, hi)) {
      const int a = parse_int(lo);
      const int b = parse_int(hi);
      if (a > b) {
        throw std::invalid_argument("descending variant range '" + token + "'");
      }
      for (int v = a; v <= b; ++v) out.push_back(v);
    } else {
      out.push_back(parse_int(token));
    }
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  for (int v : out) {
    if (v < 1 || v > 8) {
      throw std::invalid_argument("variant " + std::to_string(v) +
                                  " outside 1..8");
    }
  }
  return out;
}

std::vector<TransformKind> parse_kind_set(const std::string& text) {
  std::vector<bool> seen(std::size(kKindOrder), false);
  for (const std::string& token : split_commas(text)) {
    bool known = false;
    for (std::size_t i = 0; i < std::size(kKindOrder); ++i) {
      if (token == kind_name(kKindOrder[i])) {
        seen[i] = true;
        known = true;
        break;
      }
    }
    if (!known) {
      throw std::invalid_argument(
          "unknown transform '" + token +
          "' (expected cdft, rdft, dct or dst)");
    }
  }
  // Canonical order, duplicates collapsed.
  std::vector<TransformKind> out;
  for (std::size_t i = 0; i < std::size(kKindOrder); ++i) {
    if (seen[i]) out.push_back(kKindOrder[i]);
  }
  return out;
}

void parse_size_range(const std::string& text, int& min_log2, int& max_log2) {
  std::string lo, hi;
  if (split_range(text, lo, hi)) {
    min_log2 = checked_log2_size(lo);
    max_log2 = checked_log2_size(hi);
    if (min_log2 > max_log2) {
      throw std::invalid_argument("descending size range '" + text + "'");
    }
  } else {
    min_log2 = max_log2 = checked_log2_size(text);
  }
}

}  // namespace amqft
