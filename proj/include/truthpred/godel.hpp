#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <compare>
#include <cstddef>
#include <functional>
#include <string>
#include <string_view>

namespace truthpred {

using BigNat = boost::multiprecision::cpp_int;

/// A natural number coding a sentence. Also serves as the numeral that
/// names the sentence inside T-atoms.
class GodelNumber {
 public:
  GodelNumber() = default;
  explicit GodelNumber(BigNat value);
  explicit GodelNumber(unsigned long long value) : value_(value) {}

  const BigNat& value() const { return value_; }
  std::string to_string() const;

  /// Parses an unsigned decimal. Throws std::invalid_argument otherwise.
  static GodelNumber parse(std::string_view text);

  friend bool operator==(const GodelNumber&, const GodelNumber&) = default;
  friend std::strong_ordering operator<=>(const GodelNumber& a, const GodelNumber& b) {
    int c = a.value_.compare(b.value_);
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
  }

 private:
  BigNat value_{0};
};

/// Szudzik's pairing map: a bijection N x N -> N with pair(x, y) >= max(x, y).
BigNat pair(const BigNat& x, const BigNat& y);

/// Every structural code is `tag + kCodeRadix * payload` with 1 <= tag < kCodeRadix.
inline constexpr unsigned kCodeRadix = 16;

inline BigNat tagged(unsigned tag, const BigNat& payload) { return BigNat(tag) + payload * kCodeRadix; }

}  // namespace truthpred

template <>
struct std::hash<truthpred::GodelNumber> {
  std::size_t operator()(const truthpred::GodelNumber& n) const noexcept {
    return std::hash<truthpred::BigNat>{}(n.value());
  }
};
