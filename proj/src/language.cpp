#include "semlab/language.hpp"

#include <cstdlib>
#include <string>

#include "semlab/enumeration.hpp"
#include "semlab/errors.hpp"

namespace semlab {

std::uint64_t default_node_budget() {
  if (const char* env = std::getenv("SEMLAB_BUDGET")) {
    char* end = nullptr;
    const unsigned long long v = std::strtoull(env, &end, 10);
    if (end != env && *end == '\0' && v > 0) return v;
  }
  return 4'000'000'000ULL;
}

std::vector<std::string> support_of_context(const Language& lang,
                                            const Context& k,
                                            std::size_t max_len,
                                            std::uint64_t node_budget) {
  if (node_budget == 0) node_budget = default_node_budget();
  const std::uint64_t nodes = strings_up_to(lang.alphabet(), max_len);
  if (nodes > node_budget) {
    throw ResourceLimitError("support enumeration needs " +
                             std::to_string(nodes) + " nodes, budget is " +
                             std::to_string(node_budget));
  }
  std::vector<std::string> support;
  auto it = all_strings(lang.alphabet());
  for (std::uint64_t i = 0; i < nodes; ++i, it.advance()) {
    if (!lang.denote(it.current(), k).is_null()) support.push_back(it.current());
  }
  return support;
}

bool compare(const Language& lang, const Relation& rel, std::string_view e,
             std::string_view e2, const Context& k) {
  return rel(lang.denote(e, k), lang.denote(e2, k));
}

}  // namespace semlab
