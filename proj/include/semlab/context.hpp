#pragma once

#include <compare>
#include <string>

namespace semlab {

// Syntactic context <left, right>. The default value is the empty context.
struct Context {
  std::string left;
  std::string right;

  static Context empty() { return {}; }
  bool is_empty() const { return left.empty() && right.empty(); }

  friend auto operator<=>(const Context&, const Context&) = default;
  friend bool operator==(const Context&, const Context&) = default;
};

}  // namespace semlab
