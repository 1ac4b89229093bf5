#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <string_view>
#include <vector>

#include "semlab/alphabet.hpp"
#include "semlab/context.hpp"
#include "semlab/referent.hpp"
#include "semlab/relation.hpp"

namespace semlab {

// A closed language with a contextual denotation den(e | k). Implementations
// must be pure: the same (e, k) always denotes the same referent, and NULL is
// returned exactly when e is not a valid expression in k.
class Language {
 public:
  virtual ~Language() = default;

  virtual std::string name() const = 0;
  virtual const Alphabet& alphabet() const = 0;
  virtual Referent denote(std::string_view e, const Context& k) const = 0;

  // Long contexts the language wants included in transparency checks, in
  // addition to the small enumerated ones. Empty for transparent languages.
  virtual std::vector<Context> designated_contexts() const { return {}; }
  // Expressions that fill the designated contexts' slots.
  virtual std::vector<std::string> designated_expressions() const { return {}; }
};

using LanguagePtr = std::shared_ptr<const Language>;

inline Referent denote(const Language& lang, std::string_view e,
                       const Context& k) {
  return lang.denote(e, k);
}

// Every string of length <= max_len that is valid in k, in enumeration order.
// Throws ResourceLimitError if more than node_budget strings would be visited.
std::vector<std::string> support_of_context(const Language& lang,
                                            const Context& k,
                                            std::size_t max_len,
                                            std::uint64_t node_budget);

// rel(den(e | k), den(e2 | k)) by direct evaluation.
bool compare(const Language& lang, const Relation& rel, std::string_view e,
             std::string_view e2, const Context& k);

// Default evaluation budget for bounded-exhaustive checks; SEMLAB_BUDGET
// overrides it when set to a positive integer.
std::uint64_t default_node_budget();

}  // namespace semlab
