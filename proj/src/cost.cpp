#include "treedim/cost.hpp"

#include <charconv>
#include <limits>
#include <numeric>
#include <stdexcept>

namespace treedim {
namespace {

__int128 gcd128(__int128 a, __int128 b) {
  if (a < 0) a = -a;
  if (b < 0) b = -b;
  while (b != 0) {
    const __int128 t = a % b;
    a = b;
    b = t;
  }
  return a;
}

std::int64_t parse_int(std::string_view text, std::string_view whole) {
  std::int64_t value = 0;
  const auto* first = text.data();
  const auto* last = text.data() + text.size();
  auto [ptr, ec] = std::from_chars(first, last, value);
  if (text.empty() || ec != std::errc() || ptr != last) {
    throw std::invalid_argument("malformed cost '" + std::string(whole) + "'");
  }
  return value;
}

}  // namespace

Cost::Cost(std::int64_t integer) : num_(integer), den_(1) {
  if (integer < 0) throw std::invalid_argument("cost must be non-negative");
}

Cost::Cost(std::int64_t numerator, std::int64_t denominator) {
  if (denominator == 0) throw std::invalid_argument("cost denominator is zero");
  *this = from_wide(numerator, denominator);
  if (num_ < 0) throw std::invalid_argument("cost must be non-negative");
}

Cost Cost::from_wide(__int128 numerator, __int128 denominator) {
  if (denominator < 0) {
    numerator = -numerator;
    denominator = -denominator;
  }
  constexpr auto kWord = static_cast<__int128>(std::numeric_limits<std::uint64_t>::max());
  const __int128 magnitude = numerator < 0 ? -numerator : numerator;
  const __int128 g = magnitude <= kWord && denominator <= kWord
                         ? static_cast<__int128>(std::gcd(static_cast<std::uint64_t>(magnitude),
                                                          static_cast<std::uint64_t>(denominator)))
                         : gcd128(numerator, denominator);
  if (g > 1) {
    numerator /= g;
    denominator /= g;
  }
  constexpr auto kMax = static_cast<__int128>(std::numeric_limits<std::int64_t>::max());
  if (numerator > kMax || numerator < -kMax || denominator > kMax) {
    throw std::overflow_error("cost arithmetic exceeds 64-bit rational range");
  }
  Cost c;
  c.num_ = static_cast<std::int64_t>(numerator);
  c.den_ = static_cast<std::int64_t>(denominator);
  return c;
}

Cost Cost::parse(std::string_view text) {
  const auto slash = text.find('/');
  if (slash == std::string_view::npos) {
    const auto p = parse_int(text, text);
    if (p < 0) throw std::invalid_argument("negative cost '" + std::string(text) + "'");
    return Cost(p);
  }
  const auto p = parse_int(text.substr(0, slash), text);
  const auto q = parse_int(text.substr(slash + 1), text);
  if (p < 0) throw std::invalid_argument("negative cost '" + std::string(text) + "'");
  if (q <= 0) throw std::invalid_argument("non-positive denominator in '" + std::string(text) + "'");
  return Cost(p, q);
}

Cost& Cost::operator+=(const Cost& other) {
  if (den_ == 1 && other.den_ == 1) {
    std::int64_t sum = 0;
    if (__builtin_add_overflow(num_, other.num_, &sum)) {
      throw std::overflow_error("cost arithmetic exceeds 64-bit rational range");
    }
    num_ = sum;
    return *this;
  }
  if (den_ == other.den_) {
    *this = from_wide(static_cast<__int128>(num_) + other.num_, den_);
  } else {
    *this = from_wide(static_cast<__int128>(num_) * other.den_ +
                          static_cast<__int128>(other.num_) * den_,
                      static_cast<__int128>(den_) * other.den_);
  }
  return *this;
}

Cost& Cost::operator*=(const Cost& other) {
  *this = from_wide(static_cast<__int128>(num_) * other.num_,
                    static_cast<__int128>(den_) * other.den_);
  return *this;
}

std::strong_ordering operator<=>(const Cost& a, const Cost& b) {
  if (a.den_ == b.den_) return a.num_ <=> b.num_;
  const __int128 lhs = static_cast<__int128>(a.num_) * b.den_;
  const __int128 rhs = static_cast<__int128>(b.num_) * a.den_;
  if (lhs < rhs) return std::strong_ordering::less;
  if (lhs > rhs) return std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

std::string Cost::to_string() const {
  if (den_ == 1) return std::to_string(num_);
  return std::to_string(num_) + "/" + std::to_string(den_);
}

std::ostream& operator<<(std::ostream& os, const Cost& c) { return os << c.to_string(); }

}  // namespace treedim
