#include "semlab/enumeration.hpp"

#include <limits>
#include <stdexcept>

namespace semlab {

StringEnumerator::StringEnumerator(Alphabet alphabet)
    : alphabet_(std::move(alphabet)) {}

void StringEnumerator::advance() {
  const std::size_t base = alphabet_.size();
  // Odometer increment over symbol ranks; on full carry, grow by one symbol.
  std::size_t pos = digits_.size();
  while (pos > 0) {
    --pos;
    if (++digits_[pos] < base) {
      current_[pos] = alphabet_.symbol(digits_[pos]);
      ++position_;
      return;
    }
    digits_[pos] = 0;
    current_[pos] = alphabet_.symbol(0);
  }
  digits_.insert(digits_.begin(), 0);
  current_.insert(current_.begin(), alphabet_.symbol(0));
  ++position_;
}

namespace {

// Number of strings of length exactly len: base^len.
Natural power(std::size_t base, std::size_t len) {
  Natural p = 1;
  for (std::size_t i = 0; i < len; ++i) p *= base;
  return p;
}

}  // namespace

Natural string_index(const Alphabet& alphabet, std::string_view s) {
  const std::size_t base = alphabet.size();
  Natural offset = 0;
  for (std::size_t len = 0; len < s.size(); ++len) offset += power(base, len);
  Natural within = 0;
  for (char c : s) {
    const auto r = alphabet.rank(c);
    if (!r) {
      throw std::invalid_argument(std::string("symbol '") + c +
                                  "' not in alphabet");
    }
    within *= base;
    within += *r;
  }
  return offset + within;
}

std::string string_at(const Alphabet& alphabet, const Natural& index) {
  const std::size_t base = alphabet.size();
  Natural rest = index;
  std::size_t len = 0;
  Natural block = 1;
  while (rest >= block) {
    rest -= block;
    ++len;
    block *= base;
  }
  std::string s(len, alphabet.symbol(0));
  for (std::size_t i = len; i > 0; --i) {
    const Natural digit = rest % base;
    s[i - 1] = alphabet.symbol(digit.convert_to<std::size_t>());
    rest /= base;
  }
  return s;
}

std::uint64_t strings_up_to(const Alphabet& alphabet, std::size_t max_len) {
  Natural total = 0;
  for (std::size_t len = 0; len <= max_len; ++len) {
    total += power(alphabet.size(), len);
    if (total > std::numeric_limits<std::uint64_t>::max()) {
      return std::numeric_limits<std::uint64_t>::max();
    }
  }
  return total.convert_to<std::uint64_t>();
}

std::vector<std::string> strings_up_to_length(const Alphabet& alphabet,
                                              std::size_t max_len) {
  std::vector<std::string> out;
  out.reserve(strings_up_to(alphabet, max_len));
  for (auto it = all_strings(alphabet); it.current().size() <= max_len;
       it.advance()) {
    out.push_back(it.current());
  }
  return out;
}

}  // namespace semlab
