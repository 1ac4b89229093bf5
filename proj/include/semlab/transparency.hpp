#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "semlab/context.hpp"
#include "semlab/language.hpp"
#include "semlab/referent.hpp"

namespace semlab {

// An (e, k) pair where den(e | k) is neither NULL nor den(e | empty context).
struct TransparencyWitness {
  std::string expression;
  Context context;
  Referent at_empty;
  Referent in_context;
};

struct TransparencyReport {
  std::string language;
  std::size_t expr_max_len = 0;
  std::size_t ctx_max_len = 0;
  bool designated_included = true;
  std::uint64_t expressions_checked = 0;
  std::uint64_t contexts_checked = 0;
  std::uint64_t evaluations = 0;
  std::uint64_t witness_count = 0;
  // First max_witnesses witnesses in (expression, context) pool order.
  std::vector<TransparencyWitness> witnesses;
  // Every expression with at least one witness, in pool order.
  std::vector<std::string> witness_expressions;

  bool passed() const { return witness_count == 0; }
  bool has_witness_for(std::string_view e) const;
};

struct TransparencyBounds {
  std::size_t expr_max_len = 0;
  // Bound on |left| + |right| for enumerated contexts.
  std::size_t ctx_max_len = 0;
  // Add the language's designated expressions and contexts to the pools.
  bool include_designated = true;
  std::uint64_t node_budget = 0;  // 0 selects default_node_budget()
  std::size_t max_witnesses = 64;
};

// Bounded-exhaustive check of strong transparency. Expression pool: every
// string up to expr_max_len plus designated expressions. Context pool: every
// (left, right) with |left| + |right| <= ctx_max_len plus designated contexts.
// Throws ResourceLimitError when pool sizes multiply past the node budget.
TransparencyReport check_strong_transparency(const Language& lang,
                                             const TransparencyBounds& bounds);

// All contexts with |left| + |right| <= max_total, grouped by total length,
// then by split point, then in enumeration order.
std::vector<Context> enumerate_contexts(const Alphabet& alphabet,
                                        std::size_t max_total);

}  // namespace semlab
