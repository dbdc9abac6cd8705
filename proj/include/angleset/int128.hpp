#pragma once

#include <cstdint>
#include <string>
#include <string_view>

#include "angleset/errors.hpp"

namespace angleset {

using i128 = __int128;
using u128 = unsigned __int128;

inline u128 checked_mul(u128 a, u128 b) {
  u128 out;
  if (__builtin_mul_overflow(a, b, &out)) throw OverflowError("128-bit multiplication overflow");
  return out;
}

inline u128 checked_add(u128 a, u128 b) {
  u128 out;
  if (__builtin_add_overflow(a, b, &out)) throw OverflowError("128-bit addition overflow");
  return out;
}

inline i128 checked_mul(i128 a, i128 b) {
  i128 out;
  if (__builtin_mul_overflow(a, b, &out)) throw OverflowError("128-bit multiplication overflow");
  return out;
}

inline i128 checked_add(i128 a, i128 b) {
  i128 out;
  if (__builtin_add_overflow(a, b, &out)) throw OverflowError("128-bit addition overflow");
  return out;
}

inline i128 checked_sub(i128 a, i128 b) {
  i128 out;
  if (__builtin_sub_overflow(a, b, &out)) throw OverflowError("128-bit subtraction overflow");
  return out;
}

inline u128 abs_u128(i128 v) { return v < 0 ? u128(0) - u128(v) : u128(v); }

/// Binary gcd; falls back to the 64-bit builtin when both operands fit.
inline u128 gcd_u128(u128 a, u128 b) {
  if ((a >> 64) == 0 && (b >> 64) == 0) {
    std::uint64_t x = static_cast<std::uint64_t>(a), y = static_cast<std::uint64_t>(b);
    if (x == 0) return y;
    if (y == 0) return x;
    const int shift = __builtin_ctzll(x | y);
    x >>= __builtin_ctzll(x);
    do {
      y >>= __builtin_ctzll(y);
      if (x > y) std::swap(x, y);
      y -= x;
    } while (y != 0);
    return u128(x) << shift;
  }
  if (a == 0) return b;
  if (b == 0) return a;
  auto ctz = [](u128 v) {
    const auto lo = static_cast<std::uint64_t>(v);
    return lo != 0 ? __builtin_ctzll(lo) : 64 + __builtin_ctzll(static_cast<std::uint64_t>(v >> 64));
  };
  const int shift = ctz(a | b);
  a >>= ctz(a);
  do {
    b >>= ctz(b);
    if (a > b) std::swap(a, b);
    b -= a;
  } while (b != 0);
  return a << shift;
}

inline std::string to_string(u128 v) {
  if (v == 0) return "0";
  std::string out;
  while (v != 0) {
    out.push_back(static_cast<char>('0' + static_cast<int>(v % 10)));
    v /= 10;
  }
  return {out.rbegin(), out.rend()};
}

inline std::string to_string(i128 v) {
  return v < 0 ? "-" + to_string(abs_u128(v)) : to_string(static_cast<u128>(v));
}

inline u128 parse_u128(std::string_view text) {
  if (text.empty()) throw RangeError("empty integer literal");
  u128 out = 0;
  for (char c : text) {
    if (c < '0' || c > '9') throw RangeError("invalid digit in integer literal '" + std::string(text) + "'");
    out = checked_add(checked_mul(out, u128(10)), u128(c - '0'));
  }
  return out;
}

/// Floor of the square root of a non-negative 64-bit value, exact.
inline std::int64_t isqrt(std::int64_t n) {
  if (n <= 0) return 0;
  auto r = static_cast<std::int64_t>(__builtin_sqrtl(static_cast<long double>(n)));
  while (r > 0 && static_cast<i128>(r) * r > n) --r;
  while (static_cast<i128>(r + 1) * (r + 1) <= n) ++r;
  return r;
}

}  // namespace angleset
