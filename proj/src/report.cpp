#include "semlab/report.hpp"

namespace semlab {

namespace {

std::string tag_name(ReferentTag t) {
  switch (t) {
    case ReferentTag::kNull:
      return "NULL";
    case ReferentTag::kNat:
      return "NAT";
    case ReferentTag::kBool:
      return "BOOL";
    case ReferentTag::kInf:
      return "INF";
  }
  return "NULL";
}

Json cells_json(const std::vector<Cell>& cells) {
  Json out = Json::array();
  for (auto c : cells) out.push_back(to_string(c));
  return out;
}

Json pass_json(const SweepPass& p) {
  Json samples = Json::array();
  for (const auto& ce : p.samples) {
    samples.push_back({{"worlds", ce.world_count},
                       {"lhs", "e" + std::to_string(ce.lhs + 1)},
                       {"rhs", "e" + std::to_string(ce.rhs + 1)},
                       {"context", "k" + std::to_string(ce.context + 1)},
                       {"lhs_cells", cells_json(ce.lhs_cells)},
                       {"rhs_cells", cells_json(ce.rhs_cells)},
                       {"lhs_denotation", to_string(ce.lhs_denotation)},
                       {"rhs_denotation", to_string(ce.rhs_denotation)},
                       {"assertion", ce.assertion ? 1 : 0}});
  }
  return {{"with_null", p.with_null},
          {"tables", p.tables},
          {"checks", p.checks},
          {"skipped", p.skipped},
          {"counterexamples", p.counterexamples},
          {"samples", std::move(samples)}};
}

Json universe_json(const DiamondUniverseCheck& u) {
  Json bits = Json::array();
  for (bool b : u.world_assertions) bits.push_back(b ? 1 : 0);
  return {{"e1_denotation", to_string(u.lhs_denotation)},
          {"e2_denotation", to_string(u.rhs_denotation)},
          {"world_assertions", std::move(bits)},
          {"assertion", u.assertion ? 1 : 0},
          {"denotations_equal", u.denotations_equal}};
}

}  // namespace

Json to_json(const Referent& r) {
  Json out = {{"tag", tag_name(r.tag())}};
  if (r.tag() == ReferentTag::kNat) out["value"] = r.as_nat().str();
  if (r.tag() == ReferentTag::kBool) out["value"] = r.as_bool();
  return out;
}

Json to_json(const Context& k) { return {{"left", k.left}, {"right", k.right}}; }

Json to_json(const QueryTranscript& t) {
  Json entries = Json::array();
  for (const auto& q : t.entries()) {
    entries.push_back({{"lhs", q.lhs},
                       {"rhs", q.rhs},
                       {"context", to_json(q.context)},
                       {"answer", q.answer ? 1 : 0}});
  }
  return {{"count", t.count()},
          {"recorded", t.recorded()},
          {"entries", std::move(entries)}};
}

Json to_json(const TransparencyReport& r) {
  Json witnesses = Json::array();
  for (const auto& w : r.witnesses) {
    witnesses.push_back({{"expression", w.expression},
                         {"context", to_json(w.context)},
                         {"at_empty", to_json(w.at_empty)},
                         {"in_context", to_json(w.in_context)}});
  }
  return {{"language", r.language},
          {"expr_max_len", r.expr_max_len},
          {"ctx_max_len", r.ctx_max_len},
          {"designated_included", r.designated_included},
          {"expressions_checked", r.expressions_checked},
          {"contexts_checked", r.contexts_checked},
          {"evaluations", r.evaluations},
          {"witness_count", r.witness_count},
          {"witnesses", std::move(witnesses)},
          {"witness_expressions", r.witness_expressions},
          {"passed", r.passed()}};
}

Json to_json(const CanonicalRepresentation& r) {
  return {{"index", r.index.str()},
          {"canonical", r.canonical},
          {"queries", r.queries_used}};
}

Json to_json(const RelationTable& t) {
  Json entries = Json::array();
  for (const auto& [key, holds] : t.entries()) {
    entries.push_back({{"pair", {key.first, key.second}}, {"bit", holds ? 1 : 0}});
  }
  return {{"subject", t.subject()},
          {"size", t.size()},
          {"queries", t.queries_used()},
          {"entries", std::move(entries)}};
}

Json to_json(const AdversaryReport& r) {
  return {{"emulator", r.emulator},
          {"lhs", r.lhs},
          {"rhs", r.rhs},
          {"transcript_inf", to_json(r.transcript_inf)},
          {"max_numeral", r.max_numeral.str()},
          {"m_prime", r.m_prime.str()},
          {"replay_identical", r.replay_identical},
          {"representations_identical", r.representations_identical},
          {"disagreement_context", r.disagreement_context.str()},
          {"delta_output", r.delta_output ? 1 : 0},
          {"truth_inf", r.truth_infinite ? 1 : 0},
          {"truth_m_prime", r.truth_forged ? 1 : 0},
          {"refuted_language", r.refuted == RefutedLanguage::kInfinite
                                   ? "L_inf"
                                   : "L_" + r.m_prime.str()},
          {"refutes_exactly_one", r.refutes_exactly_one()}};
}

Json to_json(const ComplexityTable& t) {
  Json rows = Json::array();
  for (const auto& row : t.rows) {
    rows.push_back({{"N", row.bound},
                    {"m", row.m},
                    {"binary", row.binary},
                    {"linear", row.linear},
                    {"binary_bound", binary_search_query_bound(row.bound)},
                    {"binary_exact", row.binary_exact},
                    {"linear_exact", row.linear_exact}});
  }
  return {{"rows", std::move(rows)}};
}

Json to_json(const WorldTable& t) {
  Json cells = Json::array();
  for (std::size_t w = 0; w < t.worlds().size(); ++w) {
    for (std::size_t e = 0; e < t.expressions().size(); ++e) {
      for (std::size_t c = 0; c < t.contexts().size(); ++c) {
        cells.push_back({{"world", t.worlds()[w]},
                         {"expression", t.expressions()[e]},
                         {"context", to_json(t.contexts()[c])},
                         {"value", to_string(t.cell(w, e, c))}});
      }
    }
  }
  Json contexts = Json::array();
  for (const auto& k : t.contexts()) contexts.push_back(to_json(k));
  return {{"worlds", t.worlds()},
          {"expressions", t.expressions()},
          {"contexts", std::move(contexts)},
          {"cells", std::move(cells)}};
}

Json to_json(const VerificationReport& r) {
  return {{"quantifier", to_string(r.quantifier)},
          {"max_worlds", r.max_worlds},
          {"expr_count", r.expr_count},
          {"ctx_count", r.ctx_count},
          {"plain", pass_json(r.plain)},
          {"guarded", pass_json(r.guarded)},
          {"counterexamples", r.counterexamples()}};
}

Json to_json(const DiamondCounterexample& d) {
  return {{"left", {{"table", to_json(d.left)},
                    {"check", universe_json(d.check.left)}}},
          {"right", {{"table", to_json(d.right)},
                     {"check", universe_json(d.check.right)}}},
          {"underspecified", d.check.underspecified()}};
}

std::string canonical_dump(const Json& j) { return j.dump(2) + "\n"; }

}  // namespace semlab
