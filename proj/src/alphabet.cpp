#include "semlab/alphabet.hpp"

#include <stdexcept>

namespace semlab {

Alphabet::Alphabet(std::string symbols)
    : symbols_(std::move(symbols)), rank_(256, -1) {
  if (symbols_.empty()) throw std::invalid_argument("empty alphabet");
  for (std::size_t i = 0; i < symbols_.size(); ++i) {
    auto& slot = rank_[static_cast<unsigned char>(symbols_[i])];
    if (slot != -1) {
      throw std::invalid_argument(std::string("repeated symbol '") +
                                  symbols_[i] + "'");
    }
    slot = static_cast<int>(i);
  }
}

std::optional<std::size_t> Alphabet::rank(char c) const {
  const int r = rank_[static_cast<unsigned char>(c)];
  if (r < 0) return std::nullopt;
  return static_cast<std::size_t>(r);
}

bool Alphabet::spells(std::string_view s) const {
  for (char c : s) {
    if (rank_[static_cast<unsigned char>(c)] < 0) return false;
  }
  return true;
}

}  // namespace semlab
