#include "semlab/oracle.hpp"

#include <cstdlib>

#include "semlab/errors.hpp"

namespace semlab {

AssertionOracle::AssertionOracle(LanguagePtr lang, Relation rel,
                                 std::optional<std::uint64_t> budget,
                                 Recording recording)
    : lang_(std::move(lang)), rel_(std::move(rel)), budget_(budget) {
  transcript_.recorded_ = recording == Recording::kFull;
}

bool AssertionOracle::query(std::string_view e, std::string_view e2,
                            const Context& k) {
  if (budget_ && transcript_.count_ >= *budget_) {
    throw BudgetExhaustedError("oracle query budget of " +
                               std::to_string(*budget_) + " exhausted");
  }
  const bool answer = rel_(lang_->denote(e, k), lang_->denote(e2, k));
  if (transcript_.recorded_) {
    transcript_.entries_.push_back(
        {std::string(e), std::string(e2), k, answer});
  }
  ++transcript_.count_;
  return answer;
}

std::optional<std::size_t> first_replay_mismatch(const QueryTranscript& t,
                                                 const Language& lang,
                                                 const Relation& rel) {
  const auto& entries = t.entries();
  for (std::size_t i = 0; i < entries.size(); ++i) {
    const auto& q = entries[i];
    if (compare(lang, rel, q.lhs, q.rhs, q.context) != q.answer) return i;
  }
  return std::nullopt;
}

std::optional<std::uint64_t> default_query_budget() {
  if (const char* env = std::getenv("SEMLAB_BUDGET")) {
    char* end = nullptr;
    const unsigned long long v = std::strtoull(env, &end, 10);
    if (end != env && *end == '\0' && v > 0) return v;
  }
  return std::nullopt;
}

}  // namespace semlab
