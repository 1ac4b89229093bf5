#include "semlab/cli.hpp"

#include <chrono>
#include <fstream>
#include <ostream>
#include <set>
#include <sstream>

#include <CLI11.hpp>

#include "semlab/adversary.hpp"
#include "semlab/emulation.hpp"
#include "semlab/errors.hpp"
#include "semlab/languages.hpp"
#include "semlab/modal.hpp"
#include "semlab/relation.hpp"
#include "semlab/transparency.hpp"

namespace semlab::cli {
namespace {

std::set<Natural> parse_set(const std::string& text) {
  std::set<Natural> out;
  std::stringstream in(text);
  std::string item;
  while (std::getline(in, item, ',')) {
    if (item.empty()) continue;
    try {
      out.insert(parse_natural(item));
    } catch (const std::invalid_argument&) {
      throw UsageError("--set expects comma-separated naturals, got '" + item +
                       "'");
    }
  }
  return out;
}

Json language_json(const LanguageSpec& spec) {
  Json j = {{"name", spec.name}};
  if (spec.name == "leq") j["m"] = spec.m;
  if (spec.name == "leq-in") j["set"] = spec.set;
  return j;
}

std::optional<std::uint64_t> effective_budget(const ExperimentConfig& c) {
  return c.budget ? c.budget : default_query_budget();
}

Json optional_json(const std::optional<std::uint64_t>& v) {
  return v ? Json(*v) : Json(nullptr);
}

Report make_report(const ExperimentConfig& c) {
  Report r;
  r.command = c.command;
  if (!c.subcommand.empty()) r.command += " " + c.subcommand;
  return r;
}

void fail_resource(Report& r, const std::string& what) {
  r.exit_code = kResource;
  r.message = what;
  r.summary.push_back("resource limit: " + what);
}

}  // namespace

LanguagePtr make_language(const LanguageSpec& spec) {
  if (spec.name == "arith") return make_arith();
  if (spec.name == "leq") return make_leq(parse_threshold(spec.m));
  if (spec.name == "leq-in") return make_leq_in(parse_set(spec.set));
  throw UsageError("unknown language '" + spec.name +
                   "' (expected arith, leq or leq-in)");
}

Report cmd_emulate(const ExperimentConfig& c) {
  Report r = make_report(c);
  const auto budget = effective_budget(c);
  r.config = {{"language", language_json(c.language)},
              {"expr", c.expression},
              {"rel", c.relation.empty() ? "eq" : c.relation},
              {"max_candidates", optional_json(c.max_candidates)},
              {"budget", optional_json(budget)}};

  LanguagePtr lang = make_language(c.language);

  // Strong transparency is what makes the emulation meaningful; a failing
  // language still runs but gets flagged.
  try {
    const auto precheck = check_strong_transparency(*lang, {2, 2});
    r.result["precheck"] = {{"passed", precheck.passed()},
                            {"witness_count", precheck.witness_count}};
    if (!precheck.passed()) {
      const auto& w = precheck.witnesses.front();
      r.warnings.push_back("language " + lang->name() +
                           " failed the strong-transparency precheck "
                           "(witness '" + w.expression + "')");
    }
  } catch (const ResourceLimitError& e) {
    r.result["precheck"] = {{"skipped", e.what()}};
    r.warnings.push_back("transparency precheck skipped: " +
                         std::string(e.what()));
  }

  const bool relational = !c.relation.empty();
  const Relation rel = relational ? relation_by_name(c.relation) : equality();
  AssertionOracle oracle(lang, rel, budget);
  try {
    if (relational) {
      RelationTable table = emulate_rel(c.expression, oracle);
      r.result["table"] = to_json(table);
      r.result["queries"] = oracle.count();
      r.summary.push_back("relation table for '" + c.expression + "' under " +
                          rel.name + ": " + std::to_string(table.size()) +
                          " entries, " + std::to_string(oracle.count()) +
                          " queries");
    } else {
      std::optional<Natural> cap;
      if (c.max_candidates) cap = Natural(*c.max_candidates);
      CanonicalRepresentation rep = emulate_eq(c.expression, oracle, cap);
      r.result["representation"] = to_json(rep);
      r.result["queries"] = oracle.count();
      r.summary.push_back("'" + c.expression + "' -> index " +
                          rep.index.str() + ", canonical '" + rep.canonical +
                          "', " + std::to_string(rep.queries_used) +
                          " queries");
    }
  } catch (const ResourceLimitError& e) {
    fail_resource(r, e.what());
    r.result["partial_transcript"] = to_json(oracle.transcript());
    r.result["queries"] = oracle.count();
  }
  return r;
}

Report cmd_adversary(const ExperimentConfig& c) {
  Report r = make_report(c);
  const auto budget = effective_budget(c);
  r.config = {{"emulator", c.emulator}, {"budget", optional_json(budget)}};

  EmulatorUnderTest emu;
  if (c.emulator == "naive") {
    emu = naive_emulator();
  } else if (c.emulator == "binary-search") {
    emu = binary_search_adapter(c.bound);
    r.config["N"] = c.bound;
  } else if (c.emulator == "constant") {
    emu = constant_emulator();
  } else if (c.emulator == "random") {
    emu = random_emulator(c.seed);
    r.config["seed"] = c.seed;
  } else {
    throw UsageError("unknown emulator '" + c.emulator +
                     "' (expected naive, binary-search, constant or random)");
  }

  try {
    AdversaryReport a = run_adversary(emu, kLeqCall, kTrueLiteral, budget);
    r.result = to_json(a);
    const std::string refuted = a.refuted == RefutedLanguage::kInfinite
                                    ? "L_inf"
                                    : "L_" + a.m_prime.str();
    if (a.replay_identical && a.refutes_exactly_one()) {
      r.message = "refuted " + refuted;
    } else {
      r.exit_code = kUnexpected;
      r.message = "emulator survived the adversary";
    }
    r.summary.push_back(c.emulator + ": " +
                        std::to_string(a.transcript_inf.count()) +
                        " queries, m' = " + a.m_prime.str() +
                        ", replay identical: " +
                        (a.replay_identical ? "yes" : "no") + ", " +
                        r.message);
  } catch (const ReplayMismatchError& e) {
    r.exit_code = kUnexpected;
    r.message = e.what();
    r.summary.push_back("replay mismatch: " + r.message);
  } catch (const ResourceLimitError& e) {
    fail_resource(r, e.what());
  }
  return r;
}

Report cmd_modal(const ExperimentConfig& c) {
  Report r = make_report(c);
  if (c.subcommand == "diamond-example") {
    r.config = Json::object();
    DiamondCounterexample d = diamond_counterexample();
    r.result = to_json(d);
    const bool ok = d.check.underspecified();
    if (!ok) r.exit_code = kUnexpected;
    r.message = ok ? "diamond assertion underspecifies equality"
                   : "diamond tables do not separate";
    r.summary.push_back("left:  assertion " +
                        std::to_string(d.check.left.assertion) +
                        ", equal " +
                        std::to_string(d.check.left.denotations_equal));
    r.summary.push_back("right: assertion " +
                        std::to_string(d.check.right.assertion) +
                        ", equal " +
                        std::to_string(d.check.right.denotations_equal));
    r.summary.push_back(r.message);
    return r;
  }

  ModalQuantifier q;
  if (c.subcommand == "verify-box") {
    q = ModalQuantifier::kBox;
  } else if (c.subcommand == "sweep-diamond") {
    q = ModalQuantifier::kDiamond;
  } else {
    throw UsageError("unknown modal subcommand '" + c.subcommand + "'");
  }
  r.config = {{"worlds", c.worlds}, {"exprs", c.exprs}, {"ctxs", c.ctxs}};
  try {
    SweepBounds bounds;
    bounds.max_worlds = c.worlds;
    bounds.expr_count = c.exprs;
    bounds.ctx_count = c.ctxs;
    VerificationReport v = verify_modal_theorem(q, bounds);
    r.result = to_json(v);
    const std::uint64_t n = v.counterexamples();
    // The box theorem predicts none; the diamond fold is expected to break.
    const bool predicted = q == ModalQuantifier::kBox ? n == 0 : n > 0;
    if (!predicted) r.exit_code = kUnexpected;
    r.message = std::to_string(n) + " counterexamples";
    r.summary.push_back(to_string(q) + " sweep, worlds <= " +
                        std::to_string(c.worlds) + ": " +
                        std::to_string(v.plain.tables + v.guarded.tables) +
                        " tables, " + r.message);
  } catch (const ResourceLimitError& e) {
    fail_resource(r, e.what());
  }
  return r;
}

Report cmd_complexity(const ExperimentConfig& c) {
  Report r = make_report(c);
  if (c.bounds.empty()) throw UsageError("complexity needs at least one --N");
  r.config = {{"N", c.bounds},
              {"samples", c.samples},
              {"seed", c.seed},
              {"m_values", c.extra_ms}};
  ComplexityTable table =
      query_complexity_experiment(c.bounds, c.samples, c.seed, c.extra_ms);
  r.result = to_json(table);
  r.csv = table.to_csv();

  bool ok = true;
  for (const auto& row : table.rows) {
    ok = ok && row.binary_exact && row.linear_exact &&
         row.binary <= binary_search_query_bound(row.bound);
  }
  for (auto n : c.bounds) {
    std::uint64_t worst = 0;
    for (const auto& row : table.rows) {
      if (row.bound == n && row.binary > worst) worst = row.binary;
    }
    r.summary.push_back("N = " + std::to_string(n) + ": max binary queries " +
                        std::to_string(worst) + " (bound " +
                        std::to_string(binary_search_query_bound(n)) + ")");
  }
  if (!ok) r.exit_code = kUnexpected;
  r.message = ok ? "binary search within bound, all thresholds recovered"
                 : "binary search bound or recovery violated";
  return r;
}

Report cmd_transparency(const ExperimentConfig& c) {
  Report r = make_report(c);
  r.config = {{"language", language_json(c.language)},
              {"expr_len", c.expr_len},
              {"ctx_len", c.ctx_len}};
  LanguagePtr lang = make_language(c.language);
  try {
    TransparencyBounds bounds;
    bounds.expr_max_len = c.expr_len;
    bounds.ctx_max_len = c.ctx_len;
    TransparencyReport t = check_strong_transparency(*lang, bounds);
    r.result = to_json(t);
    // arith is transparent; both LEQ families leak context through leq().
    const bool predicted = c.language.name == "arith"
                               ? t.passed()
                               : t.has_witness_for(kLeqCall);
    if (!predicted) r.exit_code = kUnexpected;
    r.message = t.passed() ? "strongly transparent within bounds"
                           : std::to_string(t.witness_count) + " witnesses";
    r.summary.push_back(lang->name() + ": " +
                        std::to_string(t.evaluations) + " evaluations, " +
                        r.message);
    if (!t.passed()) {
      const auto& w = t.witnesses.front();
      r.summary.push_back("first witness: '" + w.expression + "'");
    }
  } catch (const ResourceLimitError& e) {
    fail_resource(r, e.what());
  }
  return r;
}

Report run(const ExperimentConfig& c) {
  const auto start = std::chrono::steady_clock::now();
  Report r;
  try {
    if (c.command == "emulate") {
      r = cmd_emulate(c);
    } else if (c.command == "adversary") {
      r = cmd_adversary(c);
    } else if (c.command == "modal") {
      r = cmd_modal(c);
    } else if (c.command == "complexity") {
      r = cmd_complexity(c);
    } else if (c.command == "transparency") {
      r = cmd_transparency(c);
    } else {
      throw UsageError("unknown command '" + c.command + "'");
    }
  } catch (const UsageError& e) {
    r = make_report(c);
    fail_resource(r, e.what());
  } catch (const ResourceLimitError& e) {
    r = make_report(c);
    fail_resource(r, e.what());
  }
  if (c.timing) {
    r.wall_ms = std::chrono::duration<double, std::milli>(
                    std::chrono::steady_clock::now() - start)
                    .count();
  }
  return r;
}

Json report_json(const Report& r) {
  Json j = {{"schema_version", kReportSchemaVersion},
            {"command", r.command},
            {"config", r.config.is_null() ? Json::object() : r.config},
            {"result", r.result.is_null() ? Json::object() : r.result},
            {"warnings", r.warnings},
            {"outcome", {{"exit_code", r.exit_code}, {"message", r.message}}}};
  if (r.wall_ms) j["timing"] = {{"wall_ms", *r.wall_ms}};
  return j;
}

std::string render(const Report& r, Format format) {
  switch (format) {
    case Format::kJson:
      return canonical_dump(report_json(r));
    case Format::kCsv:
      return r.csv;
    case Format::kText: {
      std::string out;
      for (const auto& w : r.warnings) out += "warning: " + w + "\n";
      for (const auto& line : r.summary) out += line + "\n";
      out += "exit " + std::to_string(r.exit_code) + "\n";
      return out;
    }
  }
  return {};
}

namespace {

// The option tree binds directly into c and format.
void build_app(CLI::App& app, ExperimentConfig& c, std::string& format) {
  app.require_subcommand(1);
  app.add_option("--format", format, "json, csv (complexity only) or text")
      ->check(CLI::IsMember({"json", "csv", "text"}));
  app.add_option("--out", c.output, "Write the report here instead of stdout");
  app.add_flag("--timing", c.timing,
               "Add wall-clock timing outside the compared payload");

  auto add_language = [&c](CLI::App* sub) {
    sub->add_option("--language", c.language.name, "arith, leq or leq-in")
        ->check(CLI::IsMember({"arith", "leq", "leq-in"}));
    sub->add_option("--m", c.language.m, "LEQ threshold, decimal or inf");
    sub->add_option("--set", c.language.set,
                    "leq-in membership set, comma-separated");
  };

  auto* emulate = app.add_subcommand("emulate", "Emulate one expression");
  add_language(emulate);
  emulate->add_option("--expr", c.expression, "Expression to emulate")
      ->required();
  emulate->add_option("--rel", c.relation,
                      "Relation name or symbol; emits a relation table");
  emulate->add_option("--max-candidates", c.max_candidates,
                      "Cap on enumerated candidates");
  emulate->add_option("--budget", c.budget, "Oracle query budget");

  auto* adversary =
      app.add_subcommand("adversary", "Run the LEQ adversary on an emulator");
  adversary->add_option("--emulator", c.emulator)
      ->check(CLI::IsMember({"naive", "binary-search", "constant", "random"}));
  adversary->add_option("--N", c.bound, "Search bound for binary-search");
  adversary->add_option("--seed", c.seed, "Seed for the random emulator");
  adversary->add_option("--budget", c.budget, "Oracle query budget");

  auto* modal = app.add_subcommand("modal", "Modal world-table experiments");
  modal->require_subcommand(1);
  for (const char* name : {"verify-box", "sweep-diamond"}) {
    auto* sub = modal->add_subcommand(name);
    sub->add_option("--worlds", c.worlds, "Maximum number of worlds");
    sub->add_option("--exprs", c.exprs, "Expressions per table");
    sub->add_option("--ctxs", c.ctxs, "Contexts per table");
  }
  modal->add_subcommand("diamond-example", "The two-universe diamond tables");

  auto* complexity = app.add_subcommand(
      "complexity", "Binary search versus linear scan query counts");
  complexity->add_option("--N", c.bounds, "Search bounds")
      ->delimiter(',')
      ->required();
  complexity->add_option("--samples", c.samples, "Thresholds per bound");
  complexity->add_option("--seed", c.seed, "Sampling seed");
  complexity->add_option("--m-values", c.extra_ms,
                         "Extra thresholds tested for every bound")
      ->delimiter(',');

  auto* transparency =
      app.add_subcommand("transparency", "Bounded strong-transparency check");
  add_language(transparency);
  transparency->add_option("--expr-len", c.expr_len, "Expression length bound");
  transparency->add_option("--ctx-len", c.ctx_len,
                           "Bound on |left| + |right| of contexts");

  // Global options are accepted after the subcommand too.
  for (auto* sub : app.get_subcommands({})) sub->fallthrough();
  for (auto* sub : modal->get_subcommands({})) sub->fallthrough();

}

ExperimentConfig finish(CLI::App& app, ExperimentConfig c,
                        const std::string& format) {
  for (auto* sub : app.get_subcommands()) {
    c.command = sub->get_name();
    for (auto* inner : sub->get_subcommands()) {
      c.subcommand = inner->get_name();
    }
  }
  if (format == "csv") c.format = Format::kCsv;
  if (format == "text") c.format = Format::kText;
  if (c.format == Format::kCsv && c.command != "complexity") {
    throw UsageError("--format csv is only available for complexity");
  }
  return c;
}

}  // namespace

ExperimentConfig parse_args(int argc, const char* const* argv) {
  CLI::App app{"Experiments on contextual denotation and assertion oracles",
               "semlab"};
  ExperimentConfig c;
  std::string format = "json";
  build_app(app, c, format);
  app.parse(argc, argv);
  return finish(app, c, format);
}

int run_cli(int argc, const char* const* argv, std::ostream& out,
            std::ostream& err) {
  CLI::App app{"Experiments on contextual denotation and assertion oracles",
               "semlab"};
  ExperimentConfig config;
  std::string format = "json";
  build_app(app, config, format);
  try {
    app.parse(argc, argv);
    config = finish(app, config, format);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return kResource;
  } catch (const UsageError& e) {
    err << "semlab: " << e.what() << "\n";
    return kResource;
  }

  Report report = run(config);
  const std::string text = render(report, config.format);
  if (config.output.empty()) {
    out << text;
  } else {
    std::ofstream file(config.output, std::ios::binary);
    if (!file) {
      err << "semlab: cannot write " << config.output << "\n";
      return kResource;
    }
    file << text;
  }
  // Text output already carries the warnings.
  if (config.format != Format::kText || !config.output.empty()) {
    for (const auto& w : report.warnings) err << "warning: " << w << "\n";
  }
  if (report.exit_code != kPredicted && !report.message.empty()) {
    err << "semlab: " << report.message << "\n";
  }
  return report.exit_code;
}

}  // namespace semlab::cli
