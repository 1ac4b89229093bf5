#include <doctest.h>

#include "semlab/errors.hpp"
#include "semlab/modal.hpp"
#include "support/reference.hpp"

using namespace semlab;

namespace {

WorldTable two_worlds(Cell a0, Cell a1, Cell b0, Cell b1) {
  WorldTable t({"w1", "w2"}, {"a", "b"}, {Context{}});
  t.set(0, 0, 0, a0);
  t.set(1, 0, 0, a1);
  t.set(0, 1, 0, b0);
  t.set(1, 1, 0, b1);
  return t;
}

int code(Cell c) { return static_cast<int>(c); }

}  // namespace

TEST_CASE("folds") {
  auto t = two_worlds(Cell::kFalse, Cell::kTrue, Cell::kTrue, Cell::kNull);
  CHECK(modal_denote(t, ModalQuantifier::kBox, "a", {}) == Cell::kFalse);
  CHECK(modal_denote(t, ModalQuantifier::kDiamond, "a", {}) == Cell::kTrue);
  CHECK(modal_denote(t, ModalQuantifier::kBox, "b", {}) == Cell::kNull);
  CHECK(modal_denote(t, ModalQuantifier::kDiamond, "b", {}) == Cell::kNull);
}

TEST_CASE("folds agree with the reference on every two-world assignment") {
  const Cell cells[] = {Cell::kFalse, Cell::kTrue, Cell::kNull};
  for (Cell x : cells) {
    for (Cell y : cells) {
      auto t = two_worlds(x, y, Cell::kFalse, Cell::kFalse);
      CHECK(code(modal_denote(t, ModalQuantifier::kBox, 0, 0)) ==
            reference::box_fold({code(x), code(y)}));
      CHECK(code(modal_denote(t, ModalQuantifier::kDiamond, 0, 0)) ==
            reference::diamond_fold({code(x), code(y)}));
    }
  }
}

TEST_CASE("single world folds to its own cell") {
  WorldTable t({"w"}, {"a"}, {Context{}});
  for (Cell c : {Cell::kFalse, Cell::kTrue, Cell::kNull}) {
    t.set(0, 0, 0, c);
    CHECK(modal_denote(t, ModalQuantifier::kBox, 0, 0) == c);
    CHECK(modal_denote(t, ModalQuantifier::kDiamond, 0, 0) == c);
  }
}

TEST_CASE("assertions fold the per-world equality bits") {
  auto same = two_worlds(Cell::kTrue, Cell::kNull, Cell::kTrue, Cell::kNull);
  CHECK(modal_assert(same, ModalQuantifier::kBox, "a", "b", {}));
  auto split = two_worlds(Cell::kFalse, Cell::kFalse, Cell::kFalse, Cell::kTrue);
  CHECK_FALSE(modal_assert(split, ModalQuantifier::kBox, "a", "b", {}));
  CHECK(modal_assert(split, ModalQuantifier::kDiamond, "a", "b", {}));
}

TEST_CASE("unknown domain entries") {
  auto t = two_worlds(Cell::kFalse, Cell::kFalse, Cell::kFalse, Cell::kFalse);
  CHECK_THROWS_AS(modal_denote(t, ModalQuantifier::kBox, "c", {}), DomainError);
  CHECK_THROWS_AS(modal_denote(t, ModalQuantifier::kBox, "a", {"x", ""}),
                  DomainError);
  CHECK_THROWS_AS(t.cell("w3", "a", {}), DomainError);
}

TEST_CASE("box sweep with one world has no counterexamples") {
  auto r = verify_modal_theorem(ModalQuantifier::kBox, {1, 2, 2});
  CHECK(r.plain.tables == 16);
  CHECK(r.guarded.tables == 81);
  CHECK(r.counterexamples() == 0);
}

// Equality of the conjunctions does not imply conjunction of the
// equalities: with a = (0, 1) and b = (0, 0) both fold to 0 while the second
// world's assertion bit is 0.
TEST_CASE("box sweep over two worlds finds the fold counterexample") {
  auto r = verify_modal_theorem(ModalQuantifier::kBox, {2, 2, 1});
  CHECK(r.plain.counterexamples > 0);
  auto t = two_worlds(Cell::kFalse, Cell::kTrue, Cell::kFalse, Cell::kFalse);
  CHECK(modal_denote(t, ModalQuantifier::kBox, 0, 0) ==
        modal_denote(t, ModalQuantifier::kBox, 1, 0));
  CHECK_FALSE(modal_assert(t, ModalQuantifier::kBox, 0, 1, 0));
  // Every sampled counterexample is a genuine disagreement.
  for (const auto& c : r.plain.samples) {
    CHECK((c.lhs_denotation == c.rhs_denotation) != c.assertion);
  }
}

TEST_CASE("box sweep counts against a brute-force recount") {
  // Two worlds, two expressions, one context, cells in {0, 1}: count the
  // (a, b) cell pairs where fold equality and folded assertion disagree.
  std::uint64_t expected = 0;
  for (int mask = 0; mask < 16; ++mask) {
    int a0 = mask & 1, a1 = (mask >> 1) & 1, b0 = (mask >> 2) & 1,
        b1 = (mask >> 3) & 1;
    bool eq = reference::box_fold({a0, a1}) == reference::box_fold({b0, b1});
    bool asserted = (a0 == b0) && (a1 == b1);
    if (eq != asserted) ++expected;
  }
  auto r = verify_modal_theorem(ModalQuantifier::kBox, {2, 2, 1, false});
  // One-world tables contribute none.
  CHECK(r.plain.counterexamples == expected);
}

TEST_CASE("diamond sweep finds counterexamples") {
  auto r = verify_modal_theorem(ModalQuantifier::kDiamond, {2, 2, 1});
  CHECK(r.counterexamples() > 0);
}

TEST_CASE("diamond counterexample tables") {
  auto d = diamond_counterexample();
  const auto& L = d.left;
  const auto& R = d.right;
  CHECK(L.worlds() == std::vector<std::string>{"w1", "w2"});
  CHECK(L.expressions() == std::vector<std::string>{"e1", "e2"});
  CHECK(L.cell("w1", "e1", {}) == Cell::kFalse);
  CHECK(L.cell("w2", "e2", {}) == Cell::kFalse);
  CHECK(R.cell("w2", "e2", {}) == Cell::kTrue);
  CHECK(d.check.left.world_assertions == std::vector<bool>{true, true});
  CHECK(d.check.right.world_assertions == std::vector<bool>{true, false});
  CHECK(d.check.left.assertion);
  CHECK(d.check.right.assertion);
  CHECK(d.check.left.denotations_equal);
  CHECK_FALSE(d.check.right.denotations_equal);
  CHECK(d.check.right.lhs_denotation == Cell::kFalse);
  CHECK(d.check.right.rhs_denotation == Cell::kTrue);
  CHECK(d.check.underspecified());
}

TEST_CASE("sweep budget") {
  SweepBounds b{3, 2, 2};
  b.node_budget = 100;
  CHECK_THROWS_AS(verify_modal_theorem(ModalQuantifier::kBox, b),
                  ResourceLimitError);
}
