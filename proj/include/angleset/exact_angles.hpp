#pragma once

// Exact angle classification for lattice triples.
//
// The angle at `vertex` between rays to `a` and `b` is encoded by the sign
// of u.v and the reduced fraction (u.v)^2 / (|u|^2 |v|^2) = cos^2, where
// u = a - vertex and v = b - vertex. Two triples determine the same angle
// iff their keys compare equal.

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <string>

#include "angleset/int128.hpp"
#include "angleset/lattice.hpp"

namespace angleset {

struct AngleKey {
  int sign = 0;  // sign of cos, in {-1, 0, +1}
  u128 num = 0;  // cos^2 = num / den, gcd(num, den) = 1
  u128 den = 1;

  auto operator<=>(const AngleKey&) const = default;
  bool operator==(const AngleKey&) const = default;

  /// Serialized form `s:num/den` with s in {+, -, 0}.
  std::string str() const;
  static AngleKey parse(const std::string& text);
};

/// cos(pi/2): sign 0, 0/1.
inline constexpr AngleKey right_angle_key() { return {0, 0, 1}; }

/// Canonical key from an exact dot product and the two squared norms.
AngleKey make_angle_key(i128 dot, u128 norm_u, u128 norm_v);

u128 squared_norm(PointView v);

AngleKey angle_key(PointView vertex, PointView a, PointView b);
bool is_right(PointView vertex, PointView a, PointView b);
double cosine_value(PointView vertex, PointView a, PointView b);
double cosine_value(const AngleKey& key);
double angle_radians(const AngleKey& key);

struct AngleKeyHash {
  std::size_t operator()(const AngleKey& k) const noexcept {
    auto mix = [](std::uint64_t h, std::uint64_t v) {
      h ^= v + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
      return h;
    };
    std::uint64_t h = static_cast<std::uint64_t>(k.sign + 1);
    h = mix(h, static_cast<std::uint64_t>(k.num));
    h = mix(h, static_cast<std::uint64_t>(k.num >> 64));
    h = mix(h, static_cast<std::uint64_t>(k.den));
    h = mix(h, static_cast<std::uint64_t>(k.den >> 64));
    return static_cast<std::size_t>(h);
  }
};

}  // namespace angleset
