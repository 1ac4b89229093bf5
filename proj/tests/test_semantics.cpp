#include <doctest.h>

#include <stdexcept>

#include "semlab/alphabet.hpp"
#include "semlab/enumeration.hpp"
#include "semlab/errors.hpp"
#include "semlab/languages.hpp"
#include "semlab/relation.hpp"
#include "semlab/transparency.hpp"
#include "support/reference.hpp"

using namespace semlab;

TEST_CASE("alphabet rejects empty and repeated symbols") {
  CHECK_THROWS_AS(Alphabet(""), std::invalid_argument);
  CHECK_THROWS_AS(Alphabet("aba"), std::invalid_argument);
  Alphabet a("xy");
  CHECK(a.rank('y') == 1);
  CHECK_FALSE(a.rank('z').has_value());
  CHECK(a.spells("xyyx"));
  CHECK_FALSE(a.spells("xz"));
}

TEST_CASE("referents print and compare by tag and value") {
  CHECK(Referent::null().to_string() == "NULL");
  CHECK(Referent::boolean(true).to_string() == "True");
  CHECK(Referent::inf().to_string() == "INF");
  CHECK(Referent::nat(parse_natural("123456789012345678901234567890"))
            .to_string() == "123456789012345678901234567890");
  CHECK(Referent::nat(1) != Referent::boolean(true));
  CHECK(Referent::null() == Referent::null());
  CHECK_THROWS_AS(parse_natural("12a"), std::invalid_argument);
  CHECK_THROWS_AS(parse_natural(""), std::invalid_argument);
}

TEST_CASE("enumeration matches the reference shortlex order") {
  const std::string symbols = "0123456789+";
  Alphabet a(symbols);
  const auto expected = reference::shortlex(symbols, 3);
  StringEnumerator it = all_strings(a);
  for (std::size_t i = 0; i < expected.size(); ++i) {
    REQUIRE(it.current() == expected[i]);
    CHECK(it.position() == i);
    CHECK(string_index(a, expected[i]) == i);
    CHECK(string_at(a, i) == expected[i]);
    it.advance();
  }
  CHECK(strings_up_to(a, 3) == expected.size());
  CHECK(strings_up_to_length(a, 3) == expected);
}

TEST_CASE("enumeration ranks") {
  Alphabet a("0123456789+");
  CHECK(string_index(a, "") == 0);
  CHECK(string_index(a, "0") == 1);
  CHECK(string_index(a, "4") == 5);
  CHECK(string_index(a, "+") == 11);
  CHECK(string_index(a, "00") == 12);
  CHECK_THROWS_AS(string_index(a, "x"), std::invalid_argument);
  // Round trip well past 64-bit range.
  const std::string long_string(30, '+');
  CHECK(string_at(a, string_index(a, long_string)) == long_string);
}

TEST_CASE("arith denotations agree with the reference evaluator") {
  auto arith = make_arith();
  const auto strings = reference::shortlex("0123456789+", 3);
  const std::vector<std::pair<std::string, std::string>> contexts = {
      {"", ""}, {"1+", ""}, {"", "+1"}, {"1", ""}, {"", "1"},
      {"+", ""}, {"9+", "+0"}, {"", "+"}, {"1+", "+"}};
  for (const auto& e : strings) {
    for (const auto& [l, r] : contexts) {
      auto expected = reference::arith_denote(e, l, r);
      Referent got = arith->denote(e, {l, r});
      if (expected) {
        REQUIRE(got.tag() == ReferentTag::kNat);
        CHECK(got.as_nat() == *expected);
      } else {
        CHECK(got.is_null());
      }
    }
  }
}

TEST_CASE("arith examples") {
  auto arith = make_arith();
  CHECK(arith->denote("2+2", {}) == Referent::nat(4));
  CHECK(arith->denote("2+2", {"1+", ""}) == Referent::nat(4));
  CHECK(arith->denote("2+", {}).is_null());
  CHECK(arith->denote("", {}).is_null());
  CHECK(arith->denote("2", {"1", ""}).is_null());
  CHECK(arith->denote("007", {}) == Referent::nat(7));
}

TEST_CASE("relation library") {
  const auto eq = equality();
  const auto le = entailment();
  const auto contra = contrary();
  CHECK(eq(Referent::null(), Referent::null()));
  CHECK_FALSE(eq(Referent::nat(1), Referent::null()));
  CHECK(le(Referent::nat(1), Referent::nat(2)));
  CHECK_FALSE(le(Referent::nat(3), Referent::nat(2)));
  CHECK(le(Referent::nat(3), Referent::inf()));
  CHECK(le(Referent::boolean(false), Referent::boolean(true)));
  CHECK_FALSE(le(Referent::boolean(true), Referent::boolean(false)));
  CHECK(le(Referent::null(), Referent::null()));
  CHECK_FALSE(le(Referent::null(), Referent::nat(0)));
  CHECK_FALSE(le(Referent::nat(0), Referent::boolean(true)));
  CHECK(contra(Referent::boolean(true), Referent::boolean(false)));
  CHECK_FALSE(contra(Referent::boolean(true), Referent::boolean(true)));
  CHECK(relation_by_name("<=").name == "leq");
  CHECK(relation_by_name("eq").symbol == "=");
  CHECK_THROWS_AS(relation_by_name("~"), UsageError);
}

TEST_CASE("support of a context") {
  auto arith = make_arith();
  auto support = support_of_context(*arith, {"1+", ""}, 2, 0);
  CHECK(support.size() == 10 + 100 + 0);
  CHECK(support.front() == "0");
  CHECK_THROWS_AS(support_of_context(*arith, {}, 12, 1000),
                  ResourceLimitError);
}

TEST_CASE("context enumeration is exhaustive and ordered by total length") {
  Alphabet a("ab");
  auto ks = enumerate_contexts(a, 2);
  // total 0: 1, total 1: 2 * 2, total 2: 4 + 2*2 + 4
  CHECK(ks.size() == 1 + 4 + 12);
  CHECK(ks.front() == Context{});
  CHECK(ks[1] == Context{"", "a"});
  CHECK(ks[3] == Context{"a", ""});
}

TEST_CASE("transparency of arith at small bounds") {
  auto report = check_strong_transparency(*make_arith(), {2, 2});
  CHECK(report.passed());
  CHECK(report.expressions_checked == 133);
  CHECK(report.evaluations == 133 * (report.contexts_checked + 1));
}

TEST_CASE("transparency flags LEQ through leq()") {
  for (auto lang : {make_leq(Threshold::finite(5)), make_leq(Threshold{}),
                    make_leq_in({2, 4})}) {
    auto report = check_strong_transparency(*lang, {1, 1});
    CHECK_FALSE(report.passed());
    CHECK(report.has_witness_for("leq()"));
  }
}

TEST_CASE("transparency budget") {
  TransparencyBounds b{4, 4};
  b.node_budget = 1000;
  CHECK_THROWS_AS(check_strong_transparency(*make_arith(), b),
                  ResourceLimitError);
}
