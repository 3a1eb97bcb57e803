#include "truthpred/godel.hpp"

#include <stdexcept>

namespace truthpred {

GodelNumber::GodelNumber(BigNat value) : value_(std::move(value)) {
  if (value_ < 0) throw std::invalid_argument("Goedel numbers are natural numbers");
}

std::string GodelNumber::to_string() const { return value_.str(); }

GodelNumber GodelNumber::parse(std::string_view text) {
  if (text.empty()) throw std::invalid_argument("empty code");
  for (char c : text)
    if (c < '0' || c > '9') throw std::invalid_argument("not an unsigned decimal: " + std::string(text));
  return GodelNumber(BigNat(std::string(text)));
}

BigNat pair(const BigNat& x, const BigNat& y) {
  if (x >= y) return x * x + x + y;
  return y * y + x;
}

}  // namespace truthpred
