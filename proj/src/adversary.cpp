#include "semlab/adversary.hpp"

#include <algorithm>
#include <sstream>

#include "semlab/emulation.hpp"
#include "semlab/errors.hpp"

namespace semlab {

namespace {

bool is_digit(char c) { return c >= '0' && c <= '9'; }

void scan_numerals(std::string_view s, Natural& best) {
  std::size_t i = 0;
  while (i < s.size()) {
    if (!is_digit(s[i])) {
      ++i;
      continue;
    }
    const std::size_t begin = i;
    while (i < s.size() && is_digit(s[i])) ++i;
    Natural n = parse_natural(s.substr(begin, i - begin));
    if (n > best) best = std::move(n);
  }
}

std::uint64_t fnv1a(std::string_view s) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : s) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  return h;
}

// Truth of a printed expression at n under an estimated threshold.
std::optional<bool> printed_value(std::string_view e,
                                  const std::optional<std::uint64_t>& m,
                                  const Natural& n) {
  if (e == kTrueLiteral) return true;
  if (e == kLeqCall) return !m || n < *m;
  return std::nullopt;
}

}  // namespace

std::uint64_t splitmix64(std::uint64_t& state) {
  std::uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

EmulatorUnderTest naive_emulator() {
  return {"naive",
          [](std::string_view e, AssertionOracle& oracle) {
            return emulate_eq(e, oracle).index.str();
          },
          [](const Representation& a, const Representation& b,
             const Context&) { return a == b; }};
}

EmulatorUnderTest binary_search_adapter(std::uint64_t bound) {
  return {"binary-search",
          [bound](std::string_view e, AssertionOracle& oracle) {
            const auto est = binary_search_emulator(oracle, bound);
            return std::string(e) + "|" +
                   (est.m ? std::to_string(*est.m) : std::string("above"));
          },
          [](const Representation& a, const Representation& b,
             const Context& k) {
            auto split = [](const Representation& r) {
              const auto bar = r.rfind('|');
              std::optional<std::uint64_t> m;
              const std::string tail = r.substr(bar + 1);
              if (tail != "above") m = std::stoull(tail);
              return std::pair{r.substr(0, bar), m};
            };
            const auto [ea, ma] = split(a);
            const auto [eb, mb] = split(b);
            const Natural n = leq_context_parameter(k).value_or(0);
            const auto va = printed_value(ea, ma, n);
            const auto vb = printed_value(eb, mb, n);
            if (!va || !vb) return ea == eb;
            return *va == *vb;
          }};
}

EmulatorUnderTest constant_emulator(bool answer) {
  return {answer ? "constant-1" : "constant",
          [](std::string_view, AssertionOracle&) { return Representation{}; },
          [answer](const Representation&, const Representation&,
                   const Context&) { return answer; }};
}

EmulatorUnderTest random_emulator(std::uint64_t seed) {
  auto emulate = [seed](std::string_view e, AssertionOracle& oracle) {
    std::uint64_t state = seed ^ fnv1a(e);
    const std::uint64_t queries = splitmix64(state) % 13;
    std::string rep(e);
    rep += ':';
    for (std::uint64_t i = 0; i < queries; ++i) {
      const std::uint64_t shape = splitmix64(state) % 4;
      const Natural n = splitmix64(state) % 1000;
      const Natural n2 = splitmix64(state) % 1000;
      bool answer = false;
      switch (shape) {
        case 0:
          answer = oracle.query(kLeqCall, kTrueLiteral,
                                leq_context(PrintedExpression::kLeqCall, n));
          break;
        case 1:
          answer = oracle.query(kTrueLiteral, kLeqCall,
                                leq_context(PrintedExpression::kTrueLiteral, n));
          break;
        case 2:
          answer = oracle.query(leq_comparison(n), leq_comparison(n2),
                                leq_comparison_context(
                                    PrintedExpression::kLeqCall));
          break;
        default:
          answer = oracle.query(
              "M", to_decimal(n),
              leq_threshold_context(n2, PrintedExpression::kTrueLiteral));
          break;
      }
      rep += answer ? '1' : '0';
    }
    return rep;
  };
  auto decide = [seed](const Representation& a, const Representation& b,
                       const Context& k) {
    std::uint64_t state =
        seed ^ fnv1a(a) ^ (fnv1a(b) * 31) ^
        fnv1a(to_decimal(leq_context_parameter(k).value_or(0)));
    return (splitmix64(state) & 1) != 0;
  };
  return {"random-" + std::to_string(seed), emulate, decide};
}

Natural extract_max_numeral(const QueryTranscript& t) {
  Natural best = 0;
  for (const auto& q : t.entries()) {
    scan_numerals(q.lhs, best);
    scan_numerals(q.rhs, best);
    scan_numerals(q.context.left, best);
    scan_numerals(q.context.right, best);
  }
  return best;
}

AdversaryReport run_adversary(const EmulatorUnderTest& emu,
                              std::string_view lhs, std::string_view rhs,
                              std::optional<std::uint64_t> query_budget) {
  AdversaryReport report;
  report.emulator = emu.name;
  report.lhs = lhs;
  report.rhs = rhs;

  const LanguagePtr infinite = make_leq(Threshold::infinite());
  AssertionOracle oracle_inf(infinite, equality(), query_budget);
  const Representation rep_lhs = emu.emulate(lhs, oracle_inf);
  const Representation rep_rhs = emu.emulate(rhs, oracle_inf);
  report.transcript_inf = read_transcript(oracle_inf);

  report.max_numeral = extract_max_numeral(report.transcript_inf);
  report.m_prime = report.max_numeral + 1;
  const LanguagePtr forged = make_leq(Threshold::finite(report.m_prime));

  if (const auto bad = first_replay_mismatch(report.transcript_inf, *forged,
                                             equality())) {
    throw ReplayMismatchError("transcript entry " + std::to_string(*bad) +
                              " answers differently in " + forged->name());
  }
  report.replay_identical = true;

  AssertionOracle oracle_forged(forged, equality(), query_budget);
  report.representations_identical =
      emu.emulate(lhs, oracle_forged) == rep_lhs &&
      emu.emulate(rhs, oracle_forged) == rep_rhs;

  report.disagreement_context = report.m_prime;
  const Context k = leq_context(PrintedExpression::kLeqCall, report.m_prime);
  report.delta_output = emu.decide(rep_lhs, rep_rhs, k);
  report.truth_infinite = compare(*infinite, equality(), lhs, rhs, k);
  report.truth_forged = compare(*forged, equality(), lhs, rhs, k);
  report.refuted = report.delta_output != report.truth_infinite
                       ? RefutedLanguage::kInfinite
                       : RefutedLanguage::kForged;
  return report;
}

std::string ComplexityTable::to_csv() const {
  std::ostringstream out;
  out << "N,m,binary,linear\n";
  for (const auto& row : rows) {
    out << row.bound << ',' << row.m << ',' << row.binary << ',' << row.linear
        << '\n';
  }
  return out.str();
}

ComplexityTable query_complexity_experiment(
    const std::vector<std::uint64_t>& bounds, std::size_t samples_per_bound,
    std::uint64_t seed, const std::vector<std::uint64_t>& extra_ms) {
  ComplexityTable table;
  for (const std::uint64_t bound : bounds) {
    if (bound == 0) throw UsageError("N must be at least 1");
    std::vector<std::uint64_t> ms = {1, bound};
    std::uint64_t state = seed ^ (bound * 0x9e3779b97f4a7c15ULL);
    for (std::size_t i = 2; i < samples_per_bound; ++i) {
      ms.push_back(1 + splitmix64(state) % bound);
    }
    for (const auto m : extra_ms) {
      if (m <= bound) ms.push_back(m);
    }
    std::sort(ms.begin(), ms.end());
    ms.erase(std::unique(ms.begin(), ms.end()), ms.end());

    for (const std::uint64_t m : ms) {
      const LanguagePtr lang = make_leq(Threshold::finite(m));
      AssertionOracle binary_oracle(lang, equality(), std::nullopt,
                                    Recording::kCountOnly);
      AssertionOracle linear_oracle(lang, equality(), std::nullopt,
                                    Recording::kCountOnly);
      const auto binary = binary_search_emulator(binary_oracle, bound);
      const auto linear = linear_scan_emulator(linear_oracle, bound);
      table.rows.push_back({bound, m, binary.queries, linear.queries,
                            binary.m == m, linear.m == m});
    }
  }
  return table;
}

}  // namespace semlab
