#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <compare>
#include <optional>
#include <string>
#include <variant>

namespace semlab {

using Natural = boost::multiprecision::cpp_int;

// Parses a non-empty string of ASCII digits. Leading zeros are accepted.
Natural parse_natural(std::string_view digits);
std::string to_decimal(const Natural& n);

enum class ReferentTag { kNull, kNat, kBool, kInf };

// Semantic value of an expression in a context. NULL stands for the invalid
// value; INF is its own tag so that no finite numeral can compare equal to it.
class Referent {
 public:
  Referent() = default;  // NULL

  static Referent null() { return Referent{}; }
  static Referent nat(Natural n) {
    return Referent{Payload{std::in_place_type<Natural>, std::move(n)}};
  }
  static Referent boolean(bool b) {
    return Referent{Payload{std::in_place_type<bool>, b}};
  }
  static Referent inf() {
    return Referent{Payload{std::in_place_type<Infinity>}};
  }

  ReferentTag tag() const;
  bool is_null() const { return tag() == ReferentTag::kNull; }

  // Preconditions: tag() matches.
  const Natural& as_nat() const { return std::get<Natural>(value_); }
  bool as_bool() const { return std::get<bool>(value_); }

  std::string to_string() const;

  friend bool operator==(const Referent&, const Referent&) = default;

 private:
  struct Null {
    friend bool operator==(Null, Null) = default;
  };
  struct Infinity {
    friend bool operator==(Infinity, Infinity) = default;
  };
  using Payload = std::variant<Null, Natural, bool, Infinity>;

  explicit Referent(Payload p) : value_(std::move(p)) {}

  Payload value_;
};

}  // namespace semlab
