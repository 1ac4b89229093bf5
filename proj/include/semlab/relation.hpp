#pragma once

#include <functional>
#include <string>
#include <vector>

#include "semlab/referent.hpp"

namespace semlab {

// A total, decidable predicate on referent pairs. NULL is a legal argument.
struct Relation {
  std::string name;    // CLI spelling: "eq", "leq", "contrary"
  std::string symbol;  // report spelling
  std::function<bool(const Referent&, const Referent&)> holds;

  bool operator()(const Referent& a, const Referent& b) const {
    return holds(a, b);
  }
};

// Structural equality; NULL = NULL holds.
Relation equality();

// Entailment order: a <= b on naturals with INF on top, false <= true on
// booleans, NULL related only to NULL, mixed tags unrelated.
Relation entailment();

// Contrary negation on booleans: holds unless both are true. Any non-boolean
// argument makes the pair unrelated.
Relation contrary();

std::vector<Relation> relation_library();

// Looks up a relation by name or symbol. Throws UsageError when unknown.
Relation relation_by_name(std::string_view name);

}  // namespace semlab
