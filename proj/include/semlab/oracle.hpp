#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "semlab/context.hpp"
#include "semlab/language.hpp"
#include "semlab/relation.hpp"

namespace semlab {

struct QueryRecord {
  std::string lhs;
  std::string rhs;
  Context context;
  bool answer = false;

  friend bool operator==(const QueryRecord&, const QueryRecord&) = default;
};

// Ordered log of answered queries. Only AssertionOracle appends to it; copies
// handed out by read_transcript() are snapshots.
class QueryTranscript {
 public:
  const std::vector<QueryRecord>& entries() const { return entries_; }
  std::uint64_t count() const { return count_; }
  // False for oracles running in count-only mode, where entries stay empty.
  bool recorded() const { return recorded_; }

  friend bool operator==(const QueryTranscript&,
                         const QueryTranscript&) = default;

 private:
  friend class AssertionOracle;

  std::vector<QueryRecord> entries_;
  std::uint64_t count_ = 0;
  bool recorded_ = true;
};

enum class Recording { kFull, kCountOnly };

// The assertion oracle over a language and relation. Answers are pure
// functions of (language, relation, e, e2, k); every answered query is logged.
class AssertionOracle {
 public:
  explicit AssertionOracle(LanguagePtr lang, Relation rel = equality(),
                           std::optional<std::uint64_t> budget = std::nullopt,
                           Recording recording = Recording::kFull);

  // 1 iff rel(den(e | k), den(e2 | k)). Throws BudgetExhaustedError on the
  // query after the budget is spent; that query is not logged.
  bool query(std::string_view e, std::string_view e2, const Context& k);

  const QueryTranscript& transcript() const { return transcript_; }
  std::uint64_t count() const { return transcript_.count(); }
  const Language& language() const { return *lang_; }
  const Relation& relation() const { return rel_; }
  std::optional<std::uint64_t> budget() const { return budget_; }

 private:
  LanguagePtr lang_;
  Relation rel_;
  std::optional<std::uint64_t> budget_;
  QueryTranscript transcript_;
};

inline bool assert_query(AssertionOracle& oracle, std::string_view e,
                         std::string_view e2, const Context& k) {
  return oracle.query(e, e2, k);
}

inline QueryTranscript read_transcript(const AssertionOracle& oracle) {
  return oracle.transcript();
}

// Re-answers every recorded query against lang under rel. Returns the index
// of the first entry whose answer differs, or nullopt when all agree.
std::optional<std::size_t> first_replay_mismatch(const QueryTranscript& t,
                                                 const Language& lang,
                                                 const Relation& rel);

// SEMLAB_BUDGET when set, else nullopt (unbounded).
std::optional<std::uint64_t> default_query_budget();

}  // namespace semlab
