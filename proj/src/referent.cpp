#include "semlab/referent.hpp"

#include <stdexcept>

namespace semlab {

Natural parse_natural(std::string_view digits) {
  if (digits.empty()) throw std::invalid_argument("empty numeral");
  Natural n = 0;
  for (char c : digits) {
    if (c < '0' || c > '9') {
      throw std::invalid_argument("not a decimal numeral: " +
                                  std::string(digits));
    }
    n *= 10;
    n += c - '0';
  }
  return n;
}

std::string to_decimal(const Natural& n) { return n.str(); }

ReferentTag Referent::tag() const {
  switch (value_.index()) {
    case 0:
      return ReferentTag::kNull;
    case 1:
      return ReferentTag::kNat;
    case 2:
      return ReferentTag::kBool;
    default:
      return ReferentTag::kInf;
  }
}

std::string Referent::to_string() const {
  switch (tag()) {
    case ReferentTag::kNull:
      return "NULL";
    case ReferentTag::kNat:
      return as_nat().str();
    case ReferentTag::kBool:
      return as_bool() ? "True" : "False";
    case ReferentTag::kInf:
      return "INF";
  }
  return "NULL";
}

}  // namespace semlab
