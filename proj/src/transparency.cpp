#include "semlab/transparency.hpp"

#include <string>

#include "semlab/enumeration.hpp"
#include "semlab/errors.hpp"

namespace semlab {

bool TransparencyReport::has_witness_for(std::string_view e) const {
  for (const auto& w : witness_expressions) {
    if (w == e) return true;
  }
  return false;
}

std::vector<Context> enumerate_contexts(const Alphabet& alphabet,
                                        std::size_t max_total) {
  // by_length[n] holds every string of length exactly n
  std::vector<std::vector<std::string>> by_length(max_total + 1);
  for (auto& s : strings_up_to_length(alphabet, max_total)) {
    by_length[s.size()].push_back(std::move(s));
  }
  std::vector<Context> out;
  for (std::size_t total = 0; total <= max_total; ++total) {
    for (std::size_t left_len = 0; left_len <= total; ++left_len) {
      for (const auto& l : by_length[left_len]) {
        for (const auto& r : by_length[total - left_len]) {
          out.push_back({l, r});
        }
      }
    }
  }
  return out;
}

TransparencyReport check_strong_transparency(const Language& lang,
                                             const TransparencyBounds& bounds) {
  const Alphabet& alphabet = lang.alphabet();
  const std::uint64_t budget =
      bounds.node_budget ? bounds.node_budget : default_node_budget();

  const std::uint64_t expr_nodes = strings_up_to(alphabet, bounds.expr_max_len);
  const std::uint64_t ctx_nodes = strings_up_to(alphabet, bounds.ctx_max_len);
  // The context pool holds (ctx_max_len + 1) * |strings of that length| pairs
  // at most; a cheap pre-check before materializing anything.
  if (expr_nodes > budget || ctx_nodes > budget ||
      static_cast<long double>(expr_nodes) * ctx_nodes > budget) {
    throw ResourceLimitError("transparency check at (" +
                             std::to_string(bounds.expr_max_len) + ", " +
                             std::to_string(bounds.ctx_max_len) +
                             ") exceeds node budget " + std::to_string(budget));
  }

  std::vector<std::string> expressions =
      strings_up_to_length(alphabet, bounds.expr_max_len);
  std::vector<Context> contexts =
      enumerate_contexts(alphabet, bounds.ctx_max_len);
  if (bounds.include_designated) {
    for (auto& e : lang.designated_expressions()) {
      if (e.size() > bounds.expr_max_len || !alphabet.spells(e)) {
        expressions.push_back(std::move(e));
      }
    }
    for (auto& k : lang.designated_contexts()) {
      if (k.left.size() + k.right.size() > bounds.ctx_max_len ||
          !alphabet.spells(k.left) || !alphabet.spells(k.right)) {
        contexts.push_back(std::move(k));
      }
    }
  }

  const std::uint64_t evaluations =
      static_cast<std::uint64_t>(expressions.size()) * (contexts.size() + 1);
  if (evaluations > budget) {
    throw ResourceLimitError("transparency check needs " +
                             std::to_string(evaluations) +
                             " evaluations, budget is " + std::to_string(budget));
  }

  TransparencyReport report;
  report.language = lang.name();
  report.expr_max_len = bounds.expr_max_len;
  report.ctx_max_len = bounds.ctx_max_len;
  report.designated_included = bounds.include_designated;
  report.expressions_checked = expressions.size();
  report.contexts_checked = contexts.size();
  report.evaluations = evaluations;

  const Context empty;
  for (const auto& e : expressions) {
    const Referent at_empty = lang.denote(e, empty);
    bool listed = false;
    for (const auto& k : contexts) {
      Referent in_context = lang.denote(e, k);
      if (in_context.is_null()) continue;
      if (!at_empty.is_null() && in_context == at_empty) continue;
      ++report.witness_count;
      if (!listed) {
        report.witness_expressions.push_back(e);
        listed = true;
      }
      if (report.witnesses.size() < bounds.max_witnesses) {
        report.witnesses.push_back({e, k, at_empty, std::move(in_context)});
      }
    }
  }
  return report;
}

}  // namespace semlab
