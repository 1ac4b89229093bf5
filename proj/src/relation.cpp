#include "semlab/relation.hpp"

#include "semlab/errors.hpp"

namespace semlab {

Relation equality() {
  return {"eq", "=", [](const Referent& a, const Referent& b) { return a == b; }};
}

Relation entailment() {
  return {"leq", "<=", [](const Referent& a, const Referent& b) {
            const auto ta = a.tag();
            const auto tb = b.tag();
            if (ta == ReferentTag::kNull || tb == ReferentTag::kNull) {
              return ta == tb;
            }
            if (ta == ReferentTag::kBool || tb == ReferentTag::kBool) {
              return ta == tb && (!a.as_bool() || b.as_bool());
            }
            // naturals with INF on top
            if (tb == ReferentTag::kInf) return true;
            if (ta == ReferentTag::kInf) return false;
            return a.as_nat() <= b.as_nat();
          }};
}

Relation contrary() {
  return {"contrary", "contrary", [](const Referent& a, const Referent& b) {
            if (a.tag() != ReferentTag::kBool || b.tag() != ReferentTag::kBool) {
              return false;
            }
            return !(a.as_bool() && b.as_bool());
          }};
}

std::vector<Relation> relation_library() {
  return {equality(), entailment(), contrary()};
}

Relation relation_by_name(std::string_view name) {
  for (auto& rel : relation_library()) {
    if (rel.name == name || rel.symbol == name) return rel;
  }
  throw UsageError("unknown relation: " + std::string(name));
}

}  // namespace semlab
