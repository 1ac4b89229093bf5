#pragma once

#include <cstdint>
#include <optional>
#include <set>
#include <string>
#include <string_view>

#include "semlab/context.hpp"
#include "semlab/language.hpp"
#include "semlab/referent.hpp"

namespace semlab {

// Sums of decimal numerals over the alphabet 0 < 1 < ... < 9 < +.
//
// den(e | <l, r>) is the sum of e's numerals when l.e.r is a member of
// numeral ("+" numeral)*, e itself matches that grammar, l is empty or ends
// with "+", and r is empty or starts with "+". Everything else is NULL.
LanguagePtr make_arith();

// True iff s matches numeral ("+" numeral)*.
bool arith_member(std::string_view s);

// Hidden threshold of an LEQ language; nullopt encodes infinity.
struct Threshold {
  std::optional<Natural> value;

  static Threshold infinite() { return {}; }
  static Threshold finite(Natural m) { return {std::move(m)}; }
  bool is_infinite() const { return !value.has_value(); }
  // n < m, true for every n when m is infinite.
  bool above(const Natural& n) const { return is_infinite() || n < *value; }
  std::string to_string() const;

  friend bool operator==(const Threshold&, const Threshold&) = default;
};

// Parses a decimal natural or the token "inf".
Threshold parse_threshold(std::string_view text);

// The two program templates, instantiated with a numeral n and a printed
// expression ("leq()" or "True"):
//
//   def leq() -> bool:
//       return <n> < M
//   print(<printed>)
//
// Lines are joined by a single LF with no trailing newline. The membership
// variant writes "<n> in M" in the return line.
enum class TemplateKind { kLessThan, kMembership };
enum class PrintedExpression { kLeqCall, kTrueLiteral };

inline constexpr std::string_view kLeqCall = "leq()";
inline constexpr std::string_view kTrueLiteral = "True";

std::string render_template(TemplateKind kind, PrintedExpression printed,
                            const Natural& n);

// k_n: the context around the printed expression. Both variants share it;
// the variant names the expression the context is meant to host.
Context leq_context(PrintedExpression variant, const Natural& n,
                    TemplateKind kind = TemplateKind::kLessThan);

// Slot contexts inside a rendered template.
Context leq_numeral_context(const Natural& n, PrintedExpression printed,
                            TemplateKind kind = TemplateKind::kLessThan);
Context leq_threshold_context(const Natural& n, PrintedExpression printed,
                              TemplateKind kind = TemplateKind::kLessThan);
Context leq_comparison_context(PrintedExpression printed);

// The comparison expression of the return line, e.g. "3 < M".
std::string leq_comparison(const Natural& n,
                           TemplateKind kind = TemplateKind::kLessThan);

// Recovers n from a context whose left side ends in a template's print slot.
std::optional<Natural> leq_context_parameter(const Context& k);

// L_m with designated-slot semantics: den("M") = m, den(n) = n at the numeral
// slot, den("n < M") = den("leq()") = (n < m), den("True") = true inside
// print(.); all other (e, k) denote NULL. Numerals must be canonical decimal.
LanguagePtr make_leq(Threshold m);

// The membership variant over a finite set S: "n in M" and "leq()" denote
// (n in S). "M" itself denotes NULL since sets are not referents here.
LanguagePtr make_leq_in(std::set<Natural> members);

// Alphabet shared by both LEQ families.
const Alphabet& leq_alphabet();
const Alphabet& arith_alphabet();

}  // namespace semlab
