#include <exception>
#include <iostream>
#include <string>

#include "CLI11.hpp"

#include "amqft/cli.hpp"

int main(int argc, char** argv) {
  CLI::App app{
      "amqft: a family of eight fast trigonometric transforms "
      "(complex/real DFT, DCT, DST) with exact operation metering, "
      "exhaustive-reference verification and accuracy analysis"};
  app.require_subcommand(1);

  amqft::RunConfig cfg;
  std::string variants_text;
  std::string kinds_text;
  std::string sizes_text;
  std::string format_text = "csv";

  const auto add_common = [&](CLI::App* sub, bool with_trials,
                              bool with_tolerance) {
    sub->add_option("--variants", variants_text,
                    "variant subset, e.g. '1..8', '2-5' or '1,4,8'");
    sub->add_option("--kinds", kinds_text,
                    "transform subset from cdft,rdft,dct,dst");
    sub->add_option("--min-log2", cfg.min_log2, "log2 of the smallest size");
    sub->add_option("--max-log2", cfg.max_log2, "log2 of the largest size");
    sub->add_option("--sizes", sizes_text,
                    "size range as explicit powers of two, e.g. '4..2048'");
    sub->add_option("--seed", cfg.seed, "base random seed");
    if (with_trials) {
      sub->add_option("--trials", cfg.trials, "random trials per cell");
    }
    if (with_tolerance) {
      sub->add_option("--tolerance", cfg.tolerance,
                      "largest acceptable relative L2 error");
    }
    sub->add_option("--output", cfg.output_path,
                    "write rows to this file instead of stdout");
    sub->add_option("--format", format_text, "csv or json")
        ->check(CLI::IsMember({"csv", "json"}));
  };

  CLI::App* verify = app.add_subcommand(
      "verify", "compare every selected variant against the exhaustive "
                "extended-precision reference");
  add_common(verify, true, true);
  verify
      ->add_flag("--corrupt-constants", cfg.corrupt_constants,
                 "test hook: perturb the constant tables so the sweep fails")
      ->group("");

  CLI::App* count = app.add_subcommand(
      "count", "meter executed operations and check the closed-form costs");
  add_common(count, false, false);

  CLI::App* tables = app.add_subcommand(
      "tables", "reproduce one of the published comparison tables");
  tables
      ->add_option("name", cfg.table_name,
                   "costo | flops | compare-add | compare-mul | compare-flop")
      ->required();
  add_common(tables, false, false);

  CLI::App* accuracy = app.add_subcommand(
      "accuracy",
      "per-variant error statistics, ordering checks and plot series");
  add_common(accuracy, true, false);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : amqft::kExitUsage;
  }

  try {
    if (!variants_text.empty()) {
      cfg.variants = amqft::parse_variant_set(variants_text);
    }
    if (!kinds_text.empty()) {
      cfg.kinds = amqft::parse_kind_set(kinds_text);
    }
    if (!sizes_text.empty()) {
      amqft::parse_size_range(sizes_text, cfg.min_log2, cfg.max_log2);
    }
    if (format_text == "json") {
      cfg.format = amqft::OutputFormat::Json;
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return amqft::kExitUsage;
  }

  if (verify->parsed()) {
    cfg.command = amqft::Command::Verify;
  } else if (count->parsed()) {
    cfg.command = amqft::Command::Count;
  } else if (tables->parsed()) {
    cfg.command = amqft::Command::Tables;
  } else {
    cfg.command = amqft::Command::Accuracy;
  }

  return amqft::run_command(cfg, std::cout, std::cerr);
}
