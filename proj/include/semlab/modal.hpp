#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "semlab/context.hpp"

namespace semlab {

enum class Cell : std::uint8_t { kFalse = 0, kTrue = 1, kNull = 2 };

enum class ModalQuantifier { kBox, kDiamond };

std::string to_string(Cell c);
std::string to_string(ModalQuantifier q);

// Finite intensional assignment: a {0, 1, NULL} cell for every
// (world, expression, context) triple. Storage is dense, so every pair in the
// domain has a cell in every world.
class WorldTable {
 public:
  WorldTable(std::vector<std::string> worlds,
             std::vector<std::string> expressions,
             std::vector<Context> contexts, Cell fill = Cell::kFalse);

  const std::vector<std::string>& worlds() const { return worlds_; }
  const std::vector<std::string>& expressions() const { return expressions_; }
  const std::vector<Context>& contexts() const { return contexts_; }

  Cell cell(std::size_t w, std::size_t e, std::size_t c) const {
    return cells_[offset(w, e, c)];
  }
  void set(std::size_t w, std::size_t e, std::size_t c, Cell v) {
    cells_[offset(w, e, c)] = v;
  }
  // By name. Throws DomainError for unknown entries.
  Cell cell(std::string_view world, std::string_view e, const Context& k) const;
  void set(std::string_view world, std::string_view e, const Context& k,
           Cell v);

  std::size_t expression_index(std::string_view e) const;
  std::size_t context_index(const Context& k) const;
  std::size_t world_index(std::string_view w) const;

 private:
  std::size_t offset(std::size_t w, std::size_t e, std::size_t c) const {
    return (w * expressions_.size() + e) * contexts_.size() + c;
  }

  std::vector<std::string> worlds_;
  std::vector<std::string> expressions_;
  std::vector<Context> contexts_;
  std::vector<Cell> cells_;
};

// Folds the worlds' cells for (e, k): NULL if any world is NULL, otherwise
// conjunction for BOX and disjunction for DIAMOND.
Cell modal_denote(const WorldTable& t, ModalQuantifier q, std::string_view e,
                  const Context& k);
Cell modal_denote(const WorldTable& t, ModalQuantifier q, std::size_t e,
                  std::size_t c);

// Folds the per-world assertion bits (cells equal, NULL = NULL included).
bool modal_assert(const WorldTable& t, ModalQuantifier q, std::string_view e,
                  std::string_view e2, const Context& k);
bool modal_assert(const WorldTable& t, ModalQuantifier q, std::size_t e,
                  std::size_t e2, std::size_t c);

// A (table, e, e2, k) where modal-denotation equality and the modal assertion
// disagree.
struct ModalCounterexample {
  std::size_t world_count = 0;
  // cells[w][i] for the two expressions in the offending context
  std::vector<Cell> lhs_cells;
  std::vector<Cell> rhs_cells;
  std::size_t lhs = 0;
  std::size_t rhs = 0;
  std::size_t context = 0;
  Cell lhs_denotation = Cell::kNull;
  Cell rhs_denotation = Cell::kNull;
  bool assertion = false;
};

struct SweepPass {
  bool with_null = false;
  std::uint64_t tables = 0;
  std::uint64_t checks = 0;  // (e, e2, k) triples compared
  std::uint64_t skipped = 0;  // triples with a NULL modal denotation
  std::uint64_t counterexamples = 0;
  std::vector<ModalCounterexample> samples;  // at most 10, in sweep order
};

struct VerificationReport {
  ModalQuantifier quantifier = ModalQuantifier::kBox;
  std::size_t max_worlds = 0;
  std::size_t expr_count = 0;
  std::size_t ctx_count = 0;
  SweepPass plain;    // cells in {0, 1}
  SweepPass guarded;  // cells in {0, 1, NULL}; NULL modal denotations skipped

  std::uint64_t counterexamples() const {
    return plain.counterexamples + guarded.counterexamples;
  }
};

struct SweepBounds {
  std::size_t max_worlds = 3;
  std::size_t expr_count = 2;
  std::size_t ctx_count = 2;
  bool guarded_pass = true;
  std::uint64_t node_budget = 0;  // 0 selects default_node_budget()
};

// Enumerates every world table with 1..max_worlds worlds and checks, for each
// unordered pair of distinct expressions and each context,
//   q-den(e | k) = q-den(e2 | k)  <=>  q-assert(e, e2 | k).
// Throws ResourceLimitError if the sweep would exceed the budget.
VerificationReport verify_modal_theorem(ModalQuantifier q,
                                        const SweepBounds& bounds);

inline VerificationReport verify_box_theorem(std::size_t max_worlds,
                                             std::size_t expr_count,
                                             std::size_t ctx_count) {
  return verify_modal_theorem(ModalQuantifier::kBox,
                              {max_worlds, expr_count, ctx_count});
}

struct DiamondUniverseCheck {
  Cell lhs_denotation = Cell::kNull;
  Cell rhs_denotation = Cell::kNull;
  std::vector<bool> world_assertions;  // per-world assertion bits
  bool assertion = false;              // DIAMOND fold of world_assertions
  bool denotations_equal = false;
};

struct DiamondCheckReport {
  DiamondUniverseCheck left;
  DiamondUniverseCheck right;

  // Same assertion in both universes, opposite equality verdicts.
  bool underspecified() const {
    return left.assertion == right.assertion &&
           left.denotations_equal != right.denotations_equal;
  }
};

struct DiamondCounterexample {
  WorldTable left;
  WorldTable right;
  DiamondCheckReport check;
};

// Two universes over worlds w1, w2, expressions e1, e2 and one context:
// left has e1 = (0, 0), e2 = (0, 0); right has e1 = (0, 0), e2 = (0, 1).
DiamondCounterexample diamond_counterexample();

}  // namespace semlab
