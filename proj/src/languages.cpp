#include "semlab/languages.hpp"

#include <algorithm>
#include <initializer_list>

#include "semlab/errors.hpp"

namespace semlab {

namespace {

bool is_digit(char c) { return c >= '0' && c <= '9'; }

// Streams numeral ("+" numeral)* across adjacent pieces without concatenating.
bool arith_member_pieces(std::initializer_list<std::string_view> pieces) {
  bool in_numeral = false;
  for (auto piece : pieces) {
    for (char c : piece) {
      if (is_digit(c)) {
        in_numeral = true;
      } else if (c == '+' && in_numeral) {
        in_numeral = false;
      } else {
        return false;
      }
    }
  }
  return in_numeral;
}

class ArithLanguage final : public Language {
 public:
  std::string name() const override { return "arith"; }
  const Alphabet& alphabet() const override { return arith_alphabet(); }

  Referent denote(std::string_view e, const Context& k) const override {
    if (!arith_member(e)) return Referent::null();
    if (!k.left.empty() && k.left.back() != '+') return Referent::null();
    if (!k.right.empty() && k.right.front() != '+') return Referent::null();
    if (!arith_member_pieces({k.left, e, k.right})) return Referent::null();
    Natural sum = 0;
    Natural term = 0;
    for (char c : e) {
      if (c == '+') {
        sum += term;
        term = 0;
      } else {
        term *= 10;
        term += c - '0';
      }
    }
    sum += term;
    return Referent::nat(std::move(sum));
  }
};

constexpr std::string_view kPrefix = "def leq() -> bool:\n    return ";
constexpr std::string_view kPrintOpen = "\nprint(";
constexpr std::string_view kPrintClose = ")";

std::string_view comparison_tail(TemplateKind kind) {
  return kind == TemplateKind::kLessThan ? " < M" : " in M";
}

std::string_view printed_text(PrintedExpression p) {
  return p == PrintedExpression::kLeqCall ? kLeqCall : kTrueLiteral;
}

// Byte offsets of the designated slots within one rendered template.
struct TemplateParse {
  Natural n;
  std::size_t numeral_begin = 0;
  std::size_t numeral_end = 0;
  std::size_t threshold_begin = 0;  // "M"
  std::size_t comparison_end = 0;   // end of "n < M"
  std::size_t printed_begin = 0;
  std::size_t printed_end = 0;
  PrintedExpression printed = PrintedExpression::kLeqCall;
};

std::optional<TemplateParse> parse_template(std::string_view s,
                                            TemplateKind kind) {
  if (!s.starts_with(kPrefix)) return std::nullopt;
  TemplateParse p;
  std::size_t pos = kPrefix.size();
  p.numeral_begin = pos;
  while (pos < s.size() && is_digit(s[pos])) ++pos;
  p.numeral_end = pos;
  const std::size_t digits = p.numeral_end - p.numeral_begin;
  if (digits == 0) return std::nullopt;
  if (digits > 1 && s[p.numeral_begin] == '0') return std::nullopt;

  const std::string_view tail = comparison_tail(kind);
  if (s.substr(pos, tail.size()) != tail) return std::nullopt;
  pos += tail.size();
  p.threshold_begin = pos - 1;
  p.comparison_end = pos;

  if (s.substr(pos, kPrintOpen.size()) != kPrintOpen) return std::nullopt;
  pos += kPrintOpen.size();
  p.printed_begin = pos;
  const std::string_view rest = s.substr(pos);
  if (rest == "leq())") {
    p.printed = PrintedExpression::kLeqCall;
  } else if (rest == "True)") {
    p.printed = PrintedExpression::kTrueLiteral;
  } else {
    return std::nullopt;
  }
  p.printed_end = s.size() - kPrintClose.size();
  p.n = parse_natural(s.substr(p.numeral_begin, digits));
  return p;
}

const std::vector<Natural>& designated_parameters() {
  static const std::vector<Natural> ns = {0, 1, 2, 3, 4, 5, 7, 8, 16, 100};
  return ns;
}

class LeqFamilyLanguage : public Language {
 public:
  explicit LeqFamilyLanguage(TemplateKind kind) : kind_(kind) {}

  const Alphabet& alphabet() const override { return leq_alphabet(); }

  Referent denote(std::string_view e, const Context& k) const override {
    const std::size_t total = k.left.size() + e.size() + k.right.size();
    if (e.empty() || total < min_length_) return Referent::null();
    std::string s;
    s.reserve(total);
    s.append(k.left).append(e).append(k.right);
    const auto parsed = parse_template(s, kind_);
    if (!parsed) return Referent::null();
    const std::size_t begin = k.left.size();
    const std::size_t end = begin + e.size();
    const auto& p = *parsed;
    if (begin == p.printed_begin && end == p.printed_end) {
      return p.printed == PrintedExpression::kLeqCall
                 ? Referent::boolean(holds(p.n))
                 : Referent::boolean(true);
    }
    if (begin == p.numeral_begin && end == p.numeral_end) {
      return Referent::nat(p.n);
    }
    if (begin == p.numeral_begin && end == p.comparison_end) {
      return Referent::boolean(holds(p.n));
    }
    if (begin == p.threshold_begin && end == p.comparison_end) {
      return threshold_value();
    }
    return Referent::null();
  }

  std::vector<Context> designated_contexts() const override {
    std::vector<Context> out;
    auto add = [&out](Context k) {
      if (std::find(out.begin(), out.end(), k) == out.end()) {
        out.push_back(std::move(k));
      }
    };
    for (const auto& n : designated_parameters()) {
      add(leq_context(PrintedExpression::kLeqCall, n, kind_));
      for (auto printed :
           {PrintedExpression::kLeqCall, PrintedExpression::kTrueLiteral}) {
        add(leq_numeral_context(n, printed, kind_));
        add(leq_threshold_context(n, printed, kind_));
      }
    }
    for (auto printed :
         {PrintedExpression::kLeqCall, PrintedExpression::kTrueLiteral}) {
      add(leq_comparison_context(printed));
    }
    return out;
  }

  std::vector<std::string> designated_expressions() const override {
    std::vector<std::string> out = {std::string(kLeqCall),
                                    std::string(kTrueLiteral), "M"};
    for (const auto& n : designated_parameters()) {
      out.push_back(to_decimal(n));
      out.push_back(leq_comparison(n, kind_));
    }
    return out;
  }

 protected:
  virtual bool holds(const Natural& n) const = 0;
  virtual Referent threshold_value() const = 0;

 private:
  TemplateKind kind_;
  std::size_t min_length_ =
      render_template(kind_, PrintedExpression::kTrueLiteral, 0).size();
};

class LeqLanguage final : public LeqFamilyLanguage {
 public:
  explicit LeqLanguage(Threshold m)
      : LeqFamilyLanguage(TemplateKind::kLessThan), m_(std::move(m)) {}

  std::string name() const override { return "leq(m=" + m_.to_string() + ")"; }

 protected:
  bool holds(const Natural& n) const override { return m_.above(n); }
  Referent threshold_value() const override {
    return m_.is_infinite() ? Referent::inf() : Referent::nat(*m_.value);
  }

 private:
  Threshold m_;
};

class LeqInLanguage final : public LeqFamilyLanguage {
 public:
  explicit LeqInLanguage(std::set<Natural> members)
      : LeqFamilyLanguage(TemplateKind::kMembership),
        members_(std::move(members)) {}

  std::string name() const override {
    std::string out = "leq-in(S={";
    bool first = true;
    for (const auto& n : members_) {
      if (!first) out += ",";
      out += to_decimal(n);
      first = false;
    }
    return out + "})";
  }

 protected:
  bool holds(const Natural& n) const override { return members_.contains(n); }
  Referent threshold_value() const override { return Referent::null(); }

 private:
  std::set<Natural> members_;
};

std::string template_prefix(const Natural& n, TemplateKind kind) {
  std::string s(kPrefix);
  s += to_decimal(n);
  s += comparison_tail(kind);
  return s;
}

}  // namespace

bool arith_member(std::string_view s) { return arith_member_pieces({s}); }

LanguagePtr make_arith() { return std::make_shared<ArithLanguage>(); }

std::string Threshold::to_string() const {
  return is_infinite() ? "inf" : to_decimal(*value);
}

Threshold parse_threshold(std::string_view text) {
  if (text == "inf") return Threshold::infinite();
  try {
    return Threshold::finite(parse_natural(text));
  } catch (const std::invalid_argument&) {
    throw UsageError("m must be a decimal natural or 'inf', got '" +
                     std::string(text) + "'");
  }
}

std::string render_template(TemplateKind kind, PrintedExpression printed,
                            const Natural& n) {
  const Context k = leq_context(printed, n, kind);
  return k.left + std::string(printed_text(printed)) + k.right;
}

Context leq_context(PrintedExpression, const Natural& n, TemplateKind kind) {
  return {template_prefix(n, kind) + std::string(kPrintOpen),
          std::string(kPrintClose)};
}

Context leq_numeral_context(const Natural& n, PrintedExpression printed,
                            TemplateKind kind) {
  (void)n;  // the slot holds n itself; the context is the same for every n
  return {std::string(kPrefix),
          std::string(comparison_tail(kind)) + std::string(kPrintOpen) +
              std::string(printed_text(printed)) + std::string(kPrintClose)};
}

Context leq_threshold_context(const Natural& n, PrintedExpression printed,
                              TemplateKind kind) {
  std::string left = template_prefix(n, kind);
  left.pop_back();  // drop "M"
  return {std::move(left), std::string(kPrintOpen) +
                               std::string(printed_text(printed)) +
                               std::string(kPrintClose)};
}

Context leq_comparison_context(PrintedExpression printed) {
  return {std::string(kPrefix), std::string(kPrintOpen) +
                                    std::string(printed_text(printed)) +
                                    std::string(kPrintClose)};
}

std::string leq_comparison(const Natural& n, TemplateKind kind) {
  return to_decimal(n) + std::string(comparison_tail(kind));
}

std::optional<Natural> leq_context_parameter(const Context& k) {
  const std::string_view left = k.left;
  if (!left.starts_with(kPrefix) || !left.ends_with(kPrintOpen)) {
    return std::nullopt;
  }
  std::size_t pos = kPrefix.size();
  const std::size_t begin = pos;
  while (pos < left.size() && is_digit(left[pos])) ++pos;
  if (pos == begin) return std::nullopt;
  return parse_natural(left.substr(begin, pos - begin));
}

LanguagePtr make_leq(Threshold m) {
  return std::make_shared<LeqLanguage>(std::move(m));
}

LanguagePtr make_leq_in(std::set<Natural> members) {
  return std::make_shared<LeqInLanguage>(std::move(members));
}

const Alphabet& arith_alphabet() {
  static const Alphabet alphabet{"0123456789+"};
  return alphabet;
}

const Alphabet& leq_alphabet() {
  // Every character of both templates, in ASCII order.
  static const Alphabet alphabet{"\n ()-0123456789:<>MTbdefilnopqrtu"};
  return alphabet;
}

}  // namespace semlab
