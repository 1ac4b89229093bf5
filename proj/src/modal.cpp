#include "semlab/modal.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "semlab/errors.hpp"
#include "semlab/language.hpp"

namespace semlab {

std::string to_string(Cell c) {
  switch (c) {
    case Cell::kFalse:
      return "0";
    case Cell::kTrue:
      return "1";
    case Cell::kNull:
      return "null";
  }
  return "null";
}

std::string to_string(ModalQuantifier q) {
  return q == ModalQuantifier::kBox ? "box" : "diamond";
}

WorldTable::WorldTable(std::vector<std::string> worlds,
                       std::vector<std::string> expressions,
                       std::vector<Context> contexts, Cell fill)
    : worlds_(std::move(worlds)),
      expressions_(std::move(expressions)),
      contexts_(std::move(contexts)),
      cells_(worlds_.size() * expressions_.size() * contexts_.size(), fill) {}

std::size_t WorldTable::expression_index(std::string_view e) const {
  const auto it = std::find(expressions_.begin(), expressions_.end(), e);
  if (it == expressions_.end()) {
    throw DomainError("expression '" + std::string(e) + "' not in table");
  }
  return static_cast<std::size_t>(it - expressions_.begin());
}

std::size_t WorldTable::context_index(const Context& k) const {
  const auto it = std::find(contexts_.begin(), contexts_.end(), k);
  if (it == contexts_.end()) {
    throw DomainError("context <'" + k.left + "', '" + k.right +
                      "'> not in table");
  }
  return static_cast<std::size_t>(it - contexts_.begin());
}

std::size_t WorldTable::world_index(std::string_view w) const {
  const auto it = std::find(worlds_.begin(), worlds_.end(), w);
  if (it == worlds_.end()) {
    throw DomainError("world '" + std::string(w) + "' not in table");
  }
  return static_cast<std::size_t>(it - worlds_.begin());
}

Cell WorldTable::cell(std::string_view world, std::string_view e,
                      const Context& k) const {
  return cell(world_index(world), expression_index(e), context_index(k));
}

void WorldTable::set(std::string_view world, std::string_view e,
                     const Context& k, Cell v) {
  set(world_index(world), expression_index(e), context_index(k), v);
}

Cell modal_denote(const WorldTable& t, ModalQuantifier q, std::size_t e,
                  std::size_t c) {
  const bool box = q == ModalQuantifier::kBox;
  bool acc = box;
  for (std::size_t w = 0; w < t.worlds().size(); ++w) {
    const Cell v = t.cell(w, e, c);
    if (v == Cell::kNull) return Cell::kNull;
    acc = box ? (acc && v == Cell::kTrue) : (acc || v == Cell::kTrue);
  }
  return acc ? Cell::kTrue : Cell::kFalse;
}

Cell modal_denote(const WorldTable& t, ModalQuantifier q, std::string_view e,
                  const Context& k) {
  return modal_denote(t, q, t.expression_index(e), t.context_index(k));
}

bool modal_assert(const WorldTable& t, ModalQuantifier q, std::size_t e,
                  std::size_t e2, std::size_t c) {
  const bool box = q == ModalQuantifier::kBox;
  bool acc = box;
  for (std::size_t w = 0; w < t.worlds().size(); ++w) {
    const bool same = t.cell(w, e, c) == t.cell(w, e2, c);
    acc = box ? (acc && same) : (acc || same);
  }
  return acc;
}

bool modal_assert(const WorldTable& t, ModalQuantifier q, std::string_view e,
                  std::string_view e2, const Context& k) {
  return modal_assert(t, q, t.expression_index(e), t.expression_index(e2),
                      t.context_index(k));
}

namespace {

WorldTable blank_table(std::size_t worlds, std::size_t exprs,
                       std::size_t ctxs) {
  std::vector<std::string> world_ids;
  for (std::size_t i = 1; i <= worlds; ++i) {
    world_ids.push_back("w" + std::to_string(i));
  }
  std::vector<std::string> expressions;
  for (std::size_t i = 1; i <= exprs; ++i) {
    expressions.push_back("e" + std::to_string(i));
  }
  std::vector<Context> contexts;
  for (std::size_t i = 1; i <= ctxs; ++i) {
    contexts.push_back({"k" + std::to_string(i), ""});
  }
  return WorldTable(std::move(world_ids), std::move(expressions),
                    std::move(contexts));
}

SweepPass sweep(ModalQuantifier q, const SweepBounds& b, bool with_null) {
  SweepPass pass;
  pass.with_null = with_null;
  const std::uint64_t base = with_null ? 3 : 2;
  for (std::size_t worlds = 1; worlds <= b.max_worlds; ++worlds) {
    WorldTable t = blank_table(worlds, b.expr_count, b.ctx_count);
    const std::size_t cells = worlds * b.expr_count * b.ctx_count;
    std::uint64_t tables = 1;
    for (std::size_t i = 0; i < cells; ++i) tables *= base;

    for (std::uint64_t code = 0; code < tables; ++code) {
      std::uint64_t rest = code;
      for (std::size_t w = 0; w < worlds; ++w) {
        for (std::size_t e = 0; e < b.expr_count; ++e) {
          for (std::size_t c = 0; c < b.ctx_count; ++c) {
            t.set(w, e, c, static_cast<Cell>(rest % base));
            rest /= base;
          }
        }
      }
      ++pass.tables;
      for (std::size_t c = 0; c < b.ctx_count; ++c) {
        for (std::size_t e = 0; e < b.expr_count; ++e) {
          for (std::size_t e2 = e + 1; e2 < b.expr_count; ++e2) {
            const Cell lhs = modal_denote(t, q, e, c);
            const Cell rhs = modal_denote(t, q, e2, c);
            if (lhs == Cell::kNull || rhs == Cell::kNull) {
              ++pass.skipped;
              continue;
            }
            ++pass.checks;
            const bool assertion = modal_assert(t, q, e, e2, c);
            if ((lhs == rhs) == assertion) continue;
            ++pass.counterexamples;
            if (pass.samples.size() < 10) {
              ModalCounterexample ce;
              ce.world_count = worlds;
              for (std::size_t w = 0; w < worlds; ++w) {
                ce.lhs_cells.push_back(t.cell(w, e, c));
                ce.rhs_cells.push_back(t.cell(w, e2, c));
              }
              ce.lhs = e;
              ce.rhs = e2;
              ce.context = c;
              ce.lhs_denotation = lhs;
              ce.rhs_denotation = rhs;
              ce.assertion = assertion;
              pass.samples.push_back(std::move(ce));
            }
          }
        }
      }
    }
  }
  return pass;
}

}  // namespace

VerificationReport verify_modal_theorem(ModalQuantifier q,
                                        const SweepBounds& bounds) {
  const std::uint64_t budget =
      bounds.node_budget ? bounds.node_budget : default_node_budget();
  // Cell evaluations over both passes, in floating point to survive overflow.
  long double work = 0;
  for (std::size_t w = 1; w <= bounds.max_worlds; ++w) {
    const long double cells = static_cast<long double>(w) * bounds.expr_count *
                              bounds.ctx_count;
    work += std::pow(2.0L, cells) * cells;
    if (bounds.guarded_pass) work += std::pow(3.0L, cells) * cells;
  }
  if (work > static_cast<long double>(budget)) {
    throw ResourceLimitError("modal sweep over " +
                             std::to_string(bounds.max_worlds) + " worlds, " +
                             std::to_string(bounds.expr_count) + " expressions, " +
                             std::to_string(bounds.ctx_count) +
                             " contexts exceeds node budget " +
                             std::to_string(budget));
  }

  VerificationReport report;
  report.quantifier = q;
  report.max_worlds = bounds.max_worlds;
  report.expr_count = bounds.expr_count;
  report.ctx_count = bounds.ctx_count;
  report.plain = sweep(q, bounds, false);
  if (bounds.guarded_pass) report.guarded = sweep(q, bounds, true);
  report.guarded.with_null = true;
  return report;
}

namespace {

DiamondUniverseCheck check_universe(const WorldTable& t) {
  DiamondUniverseCheck out;
  out.lhs_denotation = modal_denote(t, ModalQuantifier::kDiamond, 0, 0);
  out.rhs_denotation = modal_denote(t, ModalQuantifier::kDiamond, 1, 0);
  for (std::size_t w = 0; w < t.worlds().size(); ++w) {
    out.world_assertions.push_back(t.cell(w, 0, 0) == t.cell(w, 1, 0));
  }
  out.assertion = modal_assert(t, ModalQuantifier::kDiamond, 0, 1, 0);
  out.denotations_equal = out.lhs_denotation == out.rhs_denotation;
  return out;
}

}  // namespace

DiamondCounterexample diamond_counterexample() {
  const std::vector<std::string> worlds = {"w1", "w2"};
  const std::vector<std::string> expressions = {"e1", "e2"};
  const std::vector<Context> contexts = {Context::empty()};

  WorldTable left(worlds, expressions, contexts, Cell::kFalse);
  WorldTable right(worlds, expressions, contexts, Cell::kFalse);
  right.set(1, 1, 0, Cell::kTrue);  // e2 in w2

  DiamondCheckReport check{check_universe(left), check_universe(right)};
  return {std::move(left), std::move(right), std::move(check)};
}

}  // namespace semlab
