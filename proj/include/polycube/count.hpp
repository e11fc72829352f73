#pragma once

#include <compare>
#include <cstdint>
#include <limits>
#include <ostream>
#include <stdexcept>
#include <string>
#include <string_view>

namespace polycube {

class OverflowError : public std::overflow_error {
 public:
  using std::overflow_error::overflow_error;
};

/// Exact signed integer backed by a 128-bit word. Every operation is checked;
/// anything leaving the signed 128-bit range throws OverflowError.
class Count {
 public:
  using word = __int128;

  constexpr Count() = default;
  constexpr Count(int v) : v_(v) {}
  constexpr Count(long v) : v_(v) {}
  constexpr Count(long long v) : v_(v) {}
  constexpr Count(unsigned v) : v_(v) {}
  constexpr Count(unsigned long v) : v_(v) {}
  constexpr Count(unsigned long long v) : v_(v) {}

  static constexpr Count from_word(word w) {
    Count c;
    c.v_ = w;
    return c;
  }

  static Count parse(std::string_view s) {
    if (s.empty()) throw std::invalid_argument("empty integer literal");
    bool neg = false;
    std::size_t i = 0;
    if (s[0] == '-' || s[0] == '+') {
      neg = s[0] == '-';
      i = 1;
    }
    if (i == s.size()) throw std::invalid_argument("bad integer literal");
    // accumulate downwards so the most negative value parses
    Count acc;
    for (; i < s.size(); ++i) {
      if (s[i] < '0' || s[i] > '9') throw std::invalid_argument("bad integer literal: " + std::string(s));
      acc = acc * 10 - Count(s[i] - '0');
    }
    return neg ? acc : -acc;
  }

  constexpr word raw() const { return v_; }
  constexpr bool is_zero() const { return v_ == 0; }
  constexpr int sign() const { return (v_ > 0) - (v_ < 0); }

  std::int64_t to_int64() const {
    if (v_ > std::numeric_limits<std::int64_t>::max() || v_ < std::numeric_limits<std::int64_t>::min())
      throw OverflowError("count does not fit in 64 bits");
    return static_cast<std::int64_t>(v_);
  }

  std::string to_string() const {
    if (v_ == 0) return "0";
    // magnitude in unsigned space so that the minimum value prints correctly
    unsigned __int128 m = v_ < 0 ? -static_cast<unsigned __int128>(v_) : static_cast<unsigned __int128>(v_);
    std::string out;
    while (m != 0) {
      out.push_back(static_cast<char>('0' + static_cast<int>(m % 10)));
      m /= 10;
    }
    if (v_ < 0) out.push_back('-');
    return {out.rbegin(), out.rend()};
  }

  friend Count operator+(Count a, Count b) {
    word r;
    if (__builtin_add_overflow(a.v_, b.v_, &r)) throw OverflowError("count overflow in addition");
    return from_word(r);
  }
  friend Count operator-(Count a, Count b) {
    word r;
    if (__builtin_sub_overflow(a.v_, b.v_, &r)) throw OverflowError("count overflow in subtraction");
    return from_word(r);
  }
  friend Count operator*(Count a, Count b) {
    word r;
    if (__builtin_mul_overflow(a.v_, b.v_, &r)) throw OverflowError("count overflow in multiplication");
    return from_word(r);
  }
  Count operator-() const { return Count{} - *this; }

  Count& operator+=(Count o) { return *this = *this + o; }
  Count& operator-=(Count o) { return *this = *this - o; }
  Count& operator*=(Count o) { return *this = *this * o; }

  friend constexpr bool operator==(Count a, Count b) = default;
  friend constexpr std::strong_ordering operator<=>(Count a, Count b) {
    return a.v_ < b.v_ ? std::strong_ordering::less
                       : (a.v_ > b.v_ ? std::strong_ordering::greater : std::strong_ordering::equal);
  }

  friend std::ostream& operator<<(std::ostream& os, Count c) { return os << c.to_string(); }

 private:
  word v_ = 0;
};

class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Quotient of an exact division; a nonzero remainder is a DomainError.
inline Count exact_div(Count num, Count den) {
  if (den.is_zero()) throw DomainError("division by zero");
  if (num.raw() % den.raw() != 0)
    throw DomainError("inexact division: " + num.to_string() + " / " + den.to_string());
  return Count::from_word(num.raw() / den.raw());
}

inline Count pow_count(Count base, unsigned e) {
  Count r = 1;
  while (e != 0) {
    if (e & 1U) r *= base;
    e >>= 1U;
    if (e != 0) base *= base;
  }
  return r;
}

}  // namespace polycube
