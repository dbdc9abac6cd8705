#include "angleset/exact_angles.hpp"

#include <cmath>
#include <numbers>

#include "angleset/errors.hpp"

namespace angleset {

namespace {

struct Rays {
  i128 dot = 0;
  u128 norm_u = 0;
  u128 norm_v = 0;
};

Rays rays(PointView vertex, PointView a, PointView b) {
  if (vertex.size() != a.size() || vertex.size() != b.size()) throw PreconditionError("points of mixed dimension");
  Rays r;
  bool a_is_vertex = true, b_is_vertex = true;
  for (std::size_t i = 0; i < vertex.size(); ++i) {
    const i128 u = checked_sub(a[i], vertex[i]);
    const i128 v = checked_sub(b[i], vertex[i]);
    a_is_vertex = a_is_vertex && u == 0;
    b_is_vertex = b_is_vertex && v == 0;
    r.dot = checked_add(r.dot, checked_mul(u, v));
    r.norm_u = checked_add(r.norm_u, checked_mul(abs_u128(u), abs_u128(u)));
    r.norm_v = checked_add(r.norm_v, checked_mul(abs_u128(v), abs_u128(v)));
  }
  if (a_is_vertex || b_is_vertex) throw DegenerateInputError("angle undefined: ray endpoint coincides with the vertex");
  return r;
}

}  // namespace

std::string AngleKey::str() const {
  const char s = sign > 0 ? '+' : sign < 0 ? '-' : '0';
  return std::string(1, s) + ":" + to_string(num) + "/" + to_string(den);
}

AngleKey AngleKey::parse(const std::string& text) {
  if (text.size() < 5 || text[1] != ':') throw RangeError("invalid angle key '" + text + "'");
  const auto slash = text.find('/', 2);
  if (slash == std::string::npos) throw RangeError("invalid angle key '" + text + "'");
  AngleKey key;
  switch (text[0]) {
    case '+': key.sign = 1; break;
    case '-': key.sign = -1; break;
    case '0': key.sign = 0; break;
    default: throw RangeError("invalid angle key sign in '" + text + "'");
  }
  key.num = parse_u128(std::string_view(text).substr(2, slash - 2));
  key.den = parse_u128(std::string_view(text).substr(slash + 1));
  const bool canonical = key.den >= 1 && key.num <= key.den && gcd_u128(key.num, key.den) == 1 &&
                         ((key.sign == 0) == (key.num == 0));
  if (!canonical) throw RangeError("angle key '" + text + "' is not in canonical form");
  return key;
}

AngleKey make_angle_key(i128 dot, u128 norm_u, u128 norm_v) {
  if (norm_u == 0 || norm_v == 0) throw DegenerateInputError("angle undefined for a zero ray");
  if (dot == 0) return right_angle_key();
  const u128 mag = abs_u128(dot);
  u128 num = checked_mul(mag, mag);
  u128 den = checked_mul(norm_u, norm_v);
  const u128 g = gcd_u128(num, den);
  return {dot > 0 ? 1 : -1, num / g, den / g};
}

u128 squared_norm(PointView v) {
  u128 out = 0;
  for (Coord c : v) {
    const u128 m = abs_u128(c);
    out = checked_add(out, checked_mul(m, m));
  }
  return out;
}

AngleKey angle_key(PointView vertex, PointView a, PointView b) {
  const auto r = rays(vertex, a, b);
  return make_angle_key(r.dot, r.norm_u, r.norm_v);
}

bool is_right(PointView vertex, PointView a, PointView b) { return rays(vertex, a, b).dot == 0; }

double cosine_value(PointView vertex, PointView a, PointView b) { return cosine_value(angle_key(vertex, a, b)); }

double cosine_value(const AngleKey& key) {
  if (key.sign == 0) return 0.0;
  if (key.num == key.den) return static_cast<double>(key.sign);
  const long double ratio = static_cast<long double>(key.num) / static_cast<long double>(key.den);
  return static_cast<double>(key.sign * std::sqrt(ratio));
}

double angle_radians(const AngleKey& key) {
  if (key.sign == 0) return std::numbers::pi / 2;
  return std::acos(cosine_value(key));
}

}  // namespace angleset
