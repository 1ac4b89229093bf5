#include <doctest.h>

#include "semlab/errors.hpp"
#include "semlab/languages.hpp"

using namespace semlab;

namespace {

constexpr auto kCall = PrintedExpression::kLeqCall;
constexpr auto kTrue = PrintedExpression::kTrueLiteral;

}  // namespace

TEST_CASE("templates render byte-exactly") {
  CHECK(render_template(TemplateKind::kLessThan, kCall, 3) ==
        "def leq() -> bool:\n    return 3 < M\nprint(leq())");
  CHECK(render_template(TemplateKind::kLessThan, kTrue, 12) ==
        "def leq() -> bool:\n    return 12 < M\nprint(True)");
  CHECK(render_template(TemplateKind::kMembership, kCall, 2) ==
        "def leq() -> bool:\n    return 2 in M\nprint(leq())");
  const Context k = leq_context(kCall, 40);
  CHECK(k.left == "def leq() -> bool:\n    return 40 < M\nprint(");
  CHECK(k.right == ")");
  CHECK(leq_context(kTrue, 40) == k);
  CHECK(*leq_context_parameter(k) == 40);
  CHECK_FALSE(leq_context_parameter({}).has_value());
}

TEST_CASE("the shared alphabet spells every template") {
  for (auto kind : {TemplateKind::kLessThan, TemplateKind::kMembership}) {
    for (auto printed : {kCall, kTrue}) {
      CHECK(leq_alphabet().spells(render_template(kind, printed, 1234567890)));
    }
  }
  CHECK(arith_alphabet().symbols() == "0123456789+");
}

TEST_CASE("leq() denotes n < m at the print slot") {
  auto l5 = make_leq(Threshold::finite(5));
  CHECK(l5->denote("leq()", leq_context(kCall, 4)) == Referent::boolean(true));
  CHECK(l5->denote("leq()", leq_context(kCall, 5)) == Referent::boolean(false));
  CHECK(l5->denote("True", leq_context(kTrue, 5)) == Referent::boolean(true));
  CHECK(l5->denote("leq()", {}).is_null());
  CHECK(l5->denote("True", {}).is_null());
  auto inf = make_leq(Threshold::infinite());
  CHECK(inf->denote("leq()", leq_context(kCall, parse_natural("1" + std::string(40, '0'))))
        == Referent::boolean(true));
}

TEST_CASE("other designated slots") {
  auto l5 = make_leq(Threshold::finite(5));
  CHECK(l5->denote("3", leq_numeral_context(3, kCall)) == Referent::nat(3));
  CHECK(l5->denote("M", leq_threshold_context(3, kTrue)) == Referent::nat(5));
  CHECK(l5->denote("7 < M", leq_comparison_context(kCall)) ==
        Referent::boolean(false));
  CHECK(make_leq(Threshold::infinite())
            ->denote("M", leq_threshold_context(3, kTrue)) == Referent::inf());
  // Non-canonical numerals and stray fragments are invalid.
  CHECK(l5->denote("03", leq_numeral_context(3, kCall)).is_null());
  CHECK(l5->denote("leq", leq_context(kCall, 1)).is_null());
  CHECK(l5->denote("<", {"def leq() -> bool:\n    return 3 ", " M\nprint(True)"})
            .is_null());
}

TEST_CASE("membership variant") {
  auto s = make_leq_in({2, 4});
  using TK = TemplateKind;
  CHECK(s->denote("leq()", leq_context(kCall, 2, TK::kMembership)) ==
        Referent::boolean(true));
  CHECK(s->denote("leq()", leq_context(kCall, 3, TK::kMembership)) ==
        Referent::boolean(false));
  CHECK(s->denote("4 in M", leq_comparison_context(kTrue)) ==
        Referent::boolean(true));
  CHECK(s->denote("M", leq_threshold_context(2, kCall, TK::kMembership))
            .is_null());
  // The less-than template is not part of this language.
  CHECK(s->denote("leq()", leq_context(kCall, 2)).is_null());
  CHECK(s->name() == "leq-in(S={2,4})");
  CHECK(make_leq_in({})->denote("leq()", leq_context(kCall, 0, TK::kMembership))
        == Referent::boolean(false));
}

TEST_CASE("designated pools are valid somewhere") {
  auto l = make_leq(Threshold::finite(3));
  for (const auto& e : l->designated_expressions()) {
    bool valid = false;
    for (const auto& k : l->designated_contexts()) {
      valid = valid || !l->denote(e, k).is_null();
    }
    CHECK_MESSAGE(valid, e);
  }
}

TEST_CASE("threshold parsing") {
  CHECK(parse_threshold("inf").is_infinite());
  CHECK(*parse_threshold("17").value == 17);
  CHECK(parse_threshold("0").above(0) == false);
  CHECK_THROWS_AS(parse_threshold("-1"), UsageError);
  CHECK_THROWS_AS(parse_threshold("infinity"), UsageError);
  CHECK(make_leq(parse_threshold("inf"))->name() == "leq(m=inf)");
}
