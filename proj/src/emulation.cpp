#include "semlab/emulation.hpp"

#include <bit>
#include <string>

#include "semlab/enumeration.hpp"
#include "semlab/errors.hpp"
#include "semlab/languages.hpp"

namespace semlab {

CanonicalRepresentation emulate_eq(std::string_view e, AssertionOracle& oracle,
                                   std::optional<Natural> max_candidates) {
  const Alphabet& alphabet = oracle.language().alphabet();
  // Strings outside the alphabet are never reached by the enumeration, so
  // they get no default bound.
  if (!max_candidates && alphabet.spells(e)) {
    max_candidates = string_index(alphabet, e) + 1;
  }
  const Context empty;
  const std::uint64_t before = oracle.count();
  for (auto it = all_strings(alphabet);; it.advance()) {
    if (max_candidates && it.position() >= *max_candidates) {
      throw CandidateBudgetError("no equal candidate among the first " +
                                 max_candidates->str() + " strings for '" +
                                 std::string(e) + "'");
    }
    if (oracle.query(e, it.current(), empty)) {
      return {it.position(), it.current(), oracle.count() - before};
    }
  }
}

bool delta_eq(const CanonicalRepresentation& m,
              const CanonicalRepresentation& m2, const Context&) {
  return m.index == m2.index;
}

std::optional<bool> RelationTable::lookup(const std::string& lhs,
                                          const std::string& rhs) const {
  const auto it = entries_.find(KeyView{lhs, rhs});
  if (it == entries_.end()) return std::nullopt;
  return it->second;
}

RelationTable emulate_rel(std::string_view e, AssertionOracle& oracle) {
  RelationTable table{std::string(e)};
  const Context empty;
  const std::uint64_t before = oracle.count();
  for (auto it = all_strings(oracle.language().alphabet());; it.advance()) {
    const std::string& cand = it.current();
    table.set({table.subject(), cand}, oracle.query(e, cand, empty));
    table.set({cand, table.subject()}, oracle.query(cand, e, empty));
    if (cand == e) break;
  }
  table.queries_used_ = oracle.count() - before;
  return table;
}

bool delta_rel(const RelationTable& m, const RelationTable& m2,
               const Context&) {
  if (auto bit = m.lookup(m.subject(), m2.subject())) return *bit;
  if (auto bit = m2.lookup(m.subject(), m2.subject())) return *bit;
  throw InconsistentTablesError("neither table records ('" + m.subject() +
                                "', '" + m2.subject() + "')");
}

namespace {

// Answer 0 means n >= m.
bool at_or_above_threshold(AssertionOracle& oracle, std::uint64_t n) {
  return !oracle.query(kLeqCall, kTrueLiteral,
                       leq_context(PrintedExpression::kLeqCall, n));
}

}  // namespace

ThresholdEstimate binary_search_emulator(AssertionOracle& oracle,
                                         std::uint64_t bound) {
  const std::uint64_t before = oracle.count();
  // The answer is the least n in [0, N] at or above m, or N + 1 for none.
  std::uint64_t lo = 0;
  std::uint64_t hi = bound + 1;
  while (lo < hi) {
    const std::uint64_t mid = lo + (hi - lo) / 2;
    if (at_or_above_threshold(oracle, mid)) {
      hi = mid;
    } else {
      lo = mid + 1;
    }
  }
  ThresholdEstimate out;
  if (lo <= bound) out.m = lo;
  out.queries = oracle.count() - before;
  return out;
}

ThresholdEstimate linear_scan_emulator(AssertionOracle& oracle,
                                       std::uint64_t bound) {
  const std::uint64_t before = oracle.count();
  ThresholdEstimate out;
  for (std::uint64_t n = 0; n <= bound; ++n) {
    if (at_or_above_threshold(oracle, n)) {
      out.m = n;
      break;
    }
  }
  out.queries = oracle.count() - before;
  return out;
}

std::uint64_t binary_search_query_bound(std::uint64_t bound) {
  // ceil(log2(N + 1)) == bit width of N
  return static_cast<std::uint64_t>(std::bit_width(bound)) + 1;
}

}  // namespace semlab
