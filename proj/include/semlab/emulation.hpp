#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "semlab/context.hpp"
#include "semlab/oracle.hpp"
#include "semlab/referent.hpp"

namespace semlab {

// The emulated representation of an expression under equality: the index of
// the first enumerated string the oracle deems equal to it.
struct CanonicalRepresentation {
  Natural index;
  std::string canonical;
  std::uint64_t queries_used = 0;
};

// Queries oracle(e, cand | empty context) for cand in enumeration order and
// returns the first match. max_candidates defaults to index(e) + 1, which
// always suffices since cand = e is reflexively equal. Throws
// CandidateBudgetError when exhausted first.
CanonicalRepresentation emulate_eq(
    std::string_view e, AssertionOracle& oracle,
    std::optional<Natural> max_candidates = std::nullopt);

// Equality of canonical indices; the context is ignored.
bool delta_eq(const CanonicalRepresentation& m,
              const CanonicalRepresentation& m2, const Context& k);

// Memoized relation bits between a subject and every string enumerated up to
// and including it.
class RelationTable {
 public:
  using Key = std::pair<std::string, std::string>;
  using KeyView = std::pair<std::string_view, std::string_view>;

  // Orders keys lexicographically; lookups take views without copying.
  struct KeyLess {
    using is_transparent = void;
    template <class A, class B>
    bool operator()(const A& a, const B& b) const {
      return KeyView(a.first, a.second) < KeyView(b.first, b.second);
    }
  };
  using Entries = std::map<Key, bool, KeyLess>;

  explicit RelationTable(std::string subject) : subject_(std::move(subject)) {}

  const std::string& subject() const { return subject_; }
  void set(Key key, bool holds) { entries_[std::move(key)] = holds; }
  std::optional<bool> lookup(const std::string& lhs,
                             const std::string& rhs) const;
  // Sorted by key, for byte-stable serialization.
  const Entries& entries() const { return entries_; }
  std::size_t size() const { return entries_.size(); }
  std::uint64_t queries_used() const { return queries_used_; }

 private:
  friend RelationTable emulate_rel(std::string_view, AssertionOracle&);

  std::string subject_;
  Entries entries_;
  std::uint64_t queries_used_ = 0;
};

// For each cand from the empty string up to and including e, records
// oracle(e, cand) and oracle(cand, e) in the empty context.
RelationTable emulate_rel(std::string_view e, AssertionOracle& oracle);

// Reads (m.subject, m2.subject) from m, else from m2. The context is ignored.
// Throws InconsistentTablesError if neither table holds the key.
bool delta_rel(const RelationTable& m, const RelationTable& m2,
               const Context& k);

// Result of a search for the hidden threshold m of an L_m oracle.
struct ThresholdEstimate {
  std::optional<std::uint64_t> m;  // nullopt: m exceeds the search bound N
  std::uint64_t queries = 0;

  bool above_bound() const { return !m.has_value(); }
};

// Recovers m from queries oracle("leq()", "True" | k_n) with n in [0, N],
// using at most ceil(log2(N + 2)) queries.
ThresholdEstimate binary_search_emulator(AssertionOracle& oracle,
                                         std::uint64_t bound);

// Same contract, querying n = 0, 1, ... until the first 0 answer: m + 1
// queries when m <= N, N + 1 otherwise.
ThresholdEstimate linear_scan_emulator(AssertionOracle& oracle,
                                       std::uint64_t bound);

// ceil(log2(N + 1)) + 1, the advertised query ceiling for binary search.
std::uint64_t binary_search_query_bound(std::uint64_t bound);

}  // namespace semlab
