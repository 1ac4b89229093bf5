#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "semlab/language.hpp"
#include "semlab/report.hpp"

namespace semlab::cli {

enum class Format { kJson, kCsv, kText };

// Exit-code contract shared by every command.
enum ExitCode : int {
  kPredicted = 0,   // completed, theorem-predicted outcome observed
  kUnexpected = 1,  // completed, outcome contradicts the prediction
  kResource = 2,    // budget exhausted or bad usage
};

struct LanguageSpec {
  std::string name = "arith";  // arith | leq | leq-in
  std::string m = "inf";       // leq: decimal or "inf"
  std::string set;             // leq-in: comma-separated naturals
};

// Everything that determines a run. Identical configs give identical bytes.
struct ExperimentConfig {
  std::string command;     // emulate | adversary | modal | complexity | transparency
  std::string subcommand;  // modal: verify-box | diamond-example | sweep-diamond
  LanguageSpec language;

  // emulate
  std::string expression;
  std::string relation;  // empty: equality emulator
  std::optional<std::uint64_t> max_candidates;
  std::optional<std::uint64_t> budget;

  // transparency
  std::size_t expr_len = 2;
  std::size_t ctx_len = 2;

  // adversary
  std::string emulator = "naive";
  std::uint64_t bound = 100;
  std::uint64_t seed = 0;

  // modal
  std::size_t worlds = 3;
  std::size_t exprs = 2;
  std::size_t ctxs = 2;

  // complexity
  std::vector<std::uint64_t> bounds;
  std::size_t samples = 8;
  std::vector<std::uint64_t> extra_ms;

  Format format = Format::kJson;
  std::string output;  // empty: stdout
  bool timing = false;
};

struct Report {
  std::string command;
  Json config;
  Json result;
  std::vector<std::string> warnings;
  std::string message;
  int exit_code = kPredicted;
  std::optional<double> wall_ms;  // only with --timing
  std::string csv;                // complexity only
  std::vector<std::string> summary;  // text format lines
};

LanguagePtr make_language(const LanguageSpec& spec);

Report cmd_emulate(const ExperimentConfig& config);
Report cmd_adversary(const ExperimentConfig& config);
Report cmd_modal(const ExperimentConfig& config);
Report cmd_complexity(const ExperimentConfig& config);
Report cmd_transparency(const ExperimentConfig& config);

// Dispatches on config.command. Resource and usage errors become a report
// with exit code kResource.
Report run(const ExperimentConfig& config);

Json report_json(const Report& report);
std::string render(const Report& report, Format format);

// Parses argv into a config. Throws CLI11 parse errors.
ExperimentConfig parse_args(int argc, const char* const* argv);

// Full front end: parse, run, write output. Returns the process exit code.
int run_cli(int argc, const char* const* argv, std::ostream& out,
            std::ostream& err);

}  // namespace semlab::cli
