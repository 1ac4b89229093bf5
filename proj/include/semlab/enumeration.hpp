#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "semlab/alphabet.hpp"
#include "semlab/referent.hpp"

namespace semlab {

// Shortlex enumeration of every string over an alphabet: the empty string,
// then all strings of length 1 in alphabet order, then length 2, and so on.
class StringEnumerator {
 public:
  explicit StringEnumerator(Alphabet alphabet);

  // The string at the cursor; starts at the empty string.
  const std::string& current() const { return current_; }
  const Natural& position() const { return position_; }
  // Advances to the next string in enumeration order.
  void advance();

  const Alphabet& alphabet() const { return alphabet_; }

 private:
  Alphabet alphabet_;
  std::vector<std::size_t> digits_;  // symbol ranks of current_
  std::string current_;
  Natural position_ = 0;
};

inline StringEnumerator all_strings(const Alphabet& alphabet) {
  return StringEnumerator{alphabet};
}

// Enumeration index of s. Throws std::invalid_argument if s uses a symbol
// outside the alphabet.
Natural string_index(const Alphabet& alphabet, std::string_view s);
// Inverse of string_index.
std::string string_at(const Alphabet& alphabet, const Natural& index);

// Number of strings of length <= max_len (saturates at UINT64_MAX).
std::uint64_t strings_up_to(const Alphabet& alphabet, std::size_t max_len);

// Every string of length <= max_len in enumeration order.
std::vector<std::string> strings_up_to_length(const Alphabet& alphabet,
                                              std::size_t max_len);

}  // namespace semlab
