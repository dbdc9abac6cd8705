#include <algorithm>
#include <cmath>
#include <cstdint>
#include <numbers>
#include <random>

#include "doctest.h"

#include "angleset/errors.hpp"
#include "angleset/exact_angles.hpp"
#include "oracle.hpp"

using namespace angleset;

namespace {

using P = LatticePoint;

AngleKey key(const P& v, const P& a, const P& b) { return angle_key(v, a, b); }

}  // namespace

TEST_SUITE("exact_angles") {
  TEST_CASE("squared_norm") {
    CHECK(squared_norm(P{3, 4}) == 25);
    CHECK(squared_norm(P{0, 0}) == 0);
    CHECK(squared_norm(P{1, 1, 1, 1}) == 4);
    CHECK_THROWS_AS(squared_norm(P{INT64_MIN, INT64_MIN, INT64_MIN, INT64_MIN, INT64_MIN}), OverflowError);
  }

  TEST_CASE("angle_key examples") {
    CHECK(key({0, 0}, {1, 0}, {0, 1}) == AngleKey{0, 0, 1});
    CHECK(key({0, 0}, {1, 0}, {1, 1}) == AngleKey{1, 1, 2});
    CHECK(key({0, 0}, {2, 0}, {2, 2}) == AngleKey{1, 1, 2});
    CHECK(key({0, 0}, {1, 0}, {1, 0}) == AngleKey{1, 1, 1});
    CHECK(key({0, 0}, {1, 0}, {-3, 0}) == AngleKey{-1, 1, 1});
    CHECK_THROWS_AS(key({0, 0}, {0, 0}, {1, 1}), DegenerateInputError);
    CHECK_THROWS_AS(key({0, 0}, {1, 1}, {0, 0}), DegenerateInputError);
  }

  TEST_CASE("is_right") {
    CHECK(is_right(P{0, 0}, P{1, 0}, P{0, 1}));
    CHECK_FALSE(is_right(P{0, 0}, P{1, 0}, P{1, 1}));
    CHECK(is_right(P{1, 0}, P{0, 0}, P{1, 1}));
    CHECK_THROWS_AS(is_right(P{1, 0}, P{1, 0}, P{1, 1}), DegenerateInputError);
  }

  TEST_CASE("cosine_value and angle_radians") {
    CHECK(cosine_value(AngleKey{0, 0, 1}) == 0.0);
    CHECK(std::abs(cosine_value(AngleKey{1, 1, 2}) - 0.7071067811865476) <= 1e-12);
    CHECK(cosine_value(AngleKey{-1, 1, 1}) == -1.0);
    CHECK(angle_radians(AngleKey{0, 0, 1}) == doctest::Approx(std::numbers::pi / 2).epsilon(1e-15));
    CHECK(angle_radians(AngleKey{1, 1, 1}) == 0.0);
    CHECK(angle_radians(AngleKey{-1, 1, 2}) == doctest::Approx(3 * std::numbers::pi / 4).epsilon(1e-14));
  }

  TEST_CASE("key string form") {
    CHECK(AngleKey{0, 0, 1}.str() == "0:0/1");
    CHECK(AngleKey{1, 1, 2}.str() == "+:1/2");
    CHECK(AngleKey{-1, 9, 25}.str() == "-:9/25");
    CHECK(AngleKey::parse("+:1/2") == AngleKey{1, 1, 2});
    CHECK(AngleKey::parse("0:0/1") == right_angle_key());
    CHECK_THROWS_AS(AngleKey::parse("+:2/4"), RangeError);
    CHECK_THROWS_AS(AngleKey::parse("0:1/2"), RangeError);
    CHECK_THROWS_AS(AngleKey::parse("+:3/2"), RangeError);
    CHECK_THROWS_AS(AngleKey::parse("x:1/2"), RangeError);
  }

  TEST_CASE("properties on random triples") {
    std::mt19937_64 rng(7);
    std::uniform_int_distribution<Coord> coord(-50, 50);
    std::uniform_int_distribution<Coord> shift(-1000000, 1000000);
    std::uniform_int_distribution<int> lam(1, 40);
    int checked = 0;
    while (checked < 2000) {
      const int d = 2 + checked % 4;
      P v(d), a(d), b(d);
      for (int i = 0; i < d; ++i) {
        v[i] = coord(rng);
        a[i] = coord(rng);
        b[i] = coord(rng);
      }
      if (a == v || b == v) continue;
      ++checked;
      const auto k = key(v, a, b);
      // Symmetry and the canonical-form invariants.
      CHECK(k == key(v, b, a));
      CHECK((k.sign == 0) == (k.num == 0));
      CHECK(k.num <= k.den);
      CHECK(gcd_u128(k.num, k.den) == 1);
      CHECK(is_right(v, a, b) == (k.sign == 0));

      // Translation, coordinate permutation (rotate), sign flip of one axis.
      P vt = v, at = a, bt = b;
      for (int i = 0; i < d; ++i) {
        const Coord s = shift(rng);
        vt[i] += s;
        at[i] += s;
        bt[i] += s;
      }
      CHECK(key(vt, at, bt) == k);
      auto rotate = [](P p) {
        std::rotate(p.begin(), p.begin() + 1, p.end());
        return p;
      };
      CHECK(key(rotate(v), rotate(a), rotate(b)) == k);
      P vf = v, af = a, bf = b;
      vf[d - 1] = -vf[d - 1];
      af[d - 1] = -af[d - 1];
      bf[d - 1] = -bf[d - 1];
      CHECK(key(vf, af, bf) == k);

      // Scale invariance about the vertex.
      const Coord l = lam(rng);
      P as(d), bs(d);
      for (int i = 0; i < d; ++i) {
        as[i] = v[i] + l * (a[i] - v[i]);
        bs[i] = v[i] + l * (b[i] - v[i]);
      }
      CHECK(key(v, as, bs) == k);

      // Agreement with direct floating evaluation.
      double dp = 0, nu = 0, nv = 0;
      for (int i = 0; i < d; ++i) {
        const double u = double(a[i] - v[i]), w = double(b[i] - v[i]);
        dp += u * w;
        nu += u * u;
        nv += w * w;
      }
      CHECK(std::abs(cosine_value(v, a, b) - dp / std::sqrt(nu * nv)) <= 1e-9);

      // Oracle key matches.
      const auto ok = oracle::key_of(v, a, b);
      CHECK(ok.sign == k.sign);
      CHECK(static_cast<u128>(ok.num) == k.num);
      CHECK(static_cast<u128>(ok.den) == k.den);
    }
  }

  TEST_CASE("large coordinates stay exact or raise overflow") {
    const Coord big = Coord{1} << 30;
    const auto k = key({0, 0, 0}, {big, big, 0}, {big, 0, 0});
    CHECK(k == AngleKey{1, 1, 2});
    const Coord huge = Coord{1} << 40;
    CHECK_THROWS_AS(key({0, 0, 0, 0, 0, 0, 0, 0}, {huge, huge, huge, huge, huge, huge, huge, huge},
                        {huge, huge, huge, huge, huge, huge, huge, 1}),
                    OverflowError);
  }
}
