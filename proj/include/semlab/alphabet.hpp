#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace semlab {

// Ordered set of single-character symbols. The order is the enumeration order
// used for canonical indices, so it is fixed at construction.
class Alphabet {
 public:
  // Throws std::invalid_argument on an empty or repeated symbol list.
  explicit Alphabet(std::string symbols);

  std::size_t size() const { return symbols_.size(); }
  char symbol(std::size_t rank) const { return symbols_[rank]; }
  const std::string& symbols() const { return symbols_; }

  // Position of c in the order, or nullopt when c is not a symbol.
  std::optional<std::size_t> rank(char c) const;
  bool spells(std::string_view s) const;

  friend bool operator==(const Alphabet&, const Alphabet&) = default;

 private:
  std::string symbols_;
  std::vector<int> rank_;  // indexed by unsigned char, -1 when absent
};

}  // namespace semlab
