#pragma once

#include <compare>
#include <cstdint>
#include <ostream>
#include <string>
#include <string_view>

namespace treedim {

/// Exact non-negative rational vertex cost, always kept in lowest terms.
///
/// Arithmetic is carried out in 128-bit intermediates and reduced back to
/// 64-bit numerator/denominator; a result that does not fit throws
/// std::overflow_error rather than silently wrapping.
class Cost {
 public:
  constexpr Cost() = default;
  Cost(std::int64_t integer);  // NOLINT(google-explicit-constructor)
  Cost(std::int64_t numerator, std::int64_t denominator);

  /// Accepts "p" or "p/q" with p >= 0 and q > 0. Throws std::invalid_argument.
  static Cost parse(std::string_view text);

  std::int64_t numerator() const { return num_; }
  std::int64_t denominator() const { return den_; }
  bool is_zero() const { return num_ == 0; }

  Cost& operator+=(const Cost& other);
  friend Cost operator+(Cost lhs, const Cost& rhs) { return lhs += rhs; }
  Cost& operator*=(const Cost& other);
  friend Cost operator*(Cost lhs, const Cost& rhs) { return lhs *= rhs; }

  friend bool operator==(const Cost&, const Cost&) = default;
  friend std::strong_ordering operator<=>(const Cost& a, const Cost& b);

  /// "p" when the denominator is 1, otherwise "p/q".
  std::string to_string() const;
  double to_double() const { return static_cast<double>(num_) / static_cast<double>(den_); }

 private:
  static Cost from_wide(__int128 numerator, __int128 denominator);

  std::int64_t num_ = 0;
  std::int64_t den_ = 1;
};

std::ostream& operator<<(std::ostream& os, const Cost& c);

}  // namespace treedim
