#include <random>
#include <vector>

#include "doctest.h"

#include "angleset/census.hpp"
#include "angleset/errors.hpp"
#include "oracle.hpp"

using namespace angleset;

namespace {

LatticePointSet make(int d, const std::vector<oracle::Point>& pts) { return LatticePointSet::from_points(d, pts); }

std::vector<oracle::Point> points_of(const LatticePointSet& s) {
  std::vector<oracle::Point> out;
  for (std::size_t i = 0; i < s.size(); ++i) out.push_back(s.point(i));
  return out;
}

CensusOptions with_workers(unsigned w) {
  CensusOptions o;
  o.workers = w;
  return o;
}

}  // namespace

TEST_SUITE("census") {
  TEST_CASE("configuration_count") {
    CHECK(configuration_count(0) == 0);
    CHECK(configuration_count(2) == 0);
    CHECK(configuration_count(3) == 3);
    CHECK(configuration_count(9) == 252);
  }

  TEST_CASE("unit square") {
    const auto sq = make(2, {{0, 0}, {1, 0}, {0, 1}, {1, 1}});
    CHECK(count_right(sq) == 4);
    const auto rep = brute_force_census(sq);
    CHECK(rep.total == 12);
    CHECK(rep.counts.at(right_angle_key()) == 4);
    CHECK(rep.counts.at(AngleKey{1, 1, 2}) == 8);
    CHECK(rep.distinct_keys() == 2);
  }

  TEST_CASE("cube {0,1}^3") {
    const auto cube = make(3, {{0, 0, 0}, {0, 0, 1}, {0, 1, 0}, {0, 1, 1}, {1, 0, 0}, {1, 0, 1}, {1, 1, 0}, {1, 1, 1}});
    CHECK(count_right(cube) == 48);
    CHECK(brute_force_census(cube).total == 168);
  }

  TEST_CASE("grid {1..3}^2") {
    const auto g = generate_grid(2, 3);
    CHECK(count_right(g) == 44);
    const auto rep = brute_force_census(g);
    CHECK(rep.total == 252);
    const auto [key, count] = max_repetition(rep);
    CHECK(key == AngleKey{1, 1, 2});
    CHECK(count == 64);
    CHECK(count_key(g, AngleKey{1, 1, 2}) == 64);
  }

  TEST_CASE("collinear triple") {
    const auto line = make(2, {{0, 0}, {1, 0}, {2, 0}});
    const auto rep = brute_force_census(line);
    CHECK(rep.counts.size() == 2);
    CHECK(rep.counts.at(AngleKey{1, 1, 1}) == 2);
    CHECK(rep.counts.at(AngleKey{-1, 1, 1}) == 1);
    CHECK(count_right(line) == 0);
  }

  TEST_CASE("degenerate sizes") {
    const auto two = make(2, {{0, 0}, {1, 0}});
    CHECK(count_right(two) == 0);
    const auto rep = brute_force_census(two);
    CHECK(rep.total == 0);
    CHECK_THROWS_AS(max_repetition(rep), DegenerateInputError);
  }

  TEST_CASE("caps") {
    CensusOptions small;
    small.brute_force_cap = 10;
    small.vertex_cap = 12;
    const auto g = generate_grid(2, 4);
    CHECK_THROWS_AS(brute_force_census(g, small), CapExceededError);
    CHECK_THROWS_AS(distinct_angles(g, small), CapExceededError);
    CHECK_THROWS_AS(count_right(g, small), CapExceededError);
    try {
      count_right(g, small);
    } catch (const CapExceededError& e) {
      CHECK(e.requested() == 16);
      CHECK(e.cap() == 12);
    }
  }

  TEST_CASE("oracle equivalence on random sets") {
    std::mt19937_64 rng(2024);
    for (int trial = 0; trial < 60; ++trial) {
      const int d = 2 + trial % 3;
      const std::size_t n = 3 + static_cast<std::size_t>(trial % 17);
      const auto pts = oracle::random_points(rng, d, n, 4);
      const auto set = make(d, pts);
      const auto expected = oracle::census(pts);
      const auto rep = brute_force_census(set, with_workers(1 + trial % 4));
      REQUIRE(rep.counts.size() == expected.size());
      auto it = rep.counts.begin();
      for (const auto& [k, c] : expected) {
        CHECK(it->first.sign == k.sign);
        CHECK(it->first.num == static_cast<u128>(k.num));
        CHECK(it->first.den == static_cast<u128>(k.den));
        CHECK(it->second == c);
        ++it;
      }
      CHECK(rep.total == configuration_count(n));
      std::uint64_t sum = 0;
      for (const auto& [k, c] : rep.counts) sum += c;
      CHECK(sum == rep.total);

      const auto right = expected.find(oracle::Key{0, 0, 1});
      CHECK(count_right(set) == (right == expected.end() ? 0 : right->second));
      for (const auto& [k, c] : rep.counts) CHECK(count_key(set, k) == c);

      const auto da = distinct_angles(set);
      CHECK(da.keys == expected.size());
      CHECK(da.dot_products == oracle::distinct_dots(pts));
    }
  }

  TEST_CASE("wide coordinates use the 128-bit path") {
    const std::int64_t big = std::int64_t{1} << 30;
    const auto set = make(3, {{0, 0, 0}, {big, 0, 0}, {0, big, 0}, {big, big, big}, {-big, 3, 7}});
    const auto pts = points_of(set);
    const auto expected = oracle::census(pts);
    const auto rep = brute_force_census(set);
    CHECK(rep.counts.size() == expected.size());
    const auto right = expected.find(oracle::Key{0, 0, 1});
    CHECK(count_right(set) == (right == expected.end() ? 0 : right->second));
    const auto too_wide = make(2, {{0, 0}, {std::int64_t{1} << 40, 0}, {0, 1}});
    CHECK_THROWS_AS(count_right(too_wide), OverflowError);
  }

  TEST_CASE("worker count does not change integer results") {
    const auto g = generate_grid(3, 5);
    const auto base = count_right(g, with_workers(1));
    CHECK(base == 63276);
    for (unsigned w : {2u, 3u, 8u}) {
      CHECK(count_right(g, with_workers(w)) == base);
      CHECK(count_key(g, AngleKey{1, 1, 2}, with_workers(w)) == count_key(g, AngleKey{1, 1, 2}));
    }
    const auto small = generate_grid(2, 7);
    CHECK(brute_force_census(small, with_workers(5)).counts == brute_force_census(small).counts);
  }

  TEST_CASE("right-angle counts on grids") {
    CHECK(count_right(generate_grid(2, 8)) == 5520);
    CHECK(count_right(generate_grid(2, 12)) == 34936);
    CHECK(count_right(generate_grid(3, 4)) == 12312);
    CHECK(count_right(generate_grid(3, 5)) == 63276);
    CHECK(count_key(generate_grid(2, 8), AngleKey{1, 1, 2}) == 7264);
  }

  TEST_CASE("sphere decomposition and antipodal bound") {
    const auto cross = make(2, {{0, 0}, {1, 0}, {-1, 0}, {0, 1}, {0, -1}});
    const auto dec = build_sphere_decomposition(cross, cross);
    CHECK(dec.p_size == 5);
    CHECK(dec.q_size == 5);
    CHECK(antipodal_lower_bound(dec, cross, true) == 4);
    CHECK(count_right(cross) == 8);
    std::uint64_t members = 0;
    for (const auto& e : dec.entries) members += e.members.size();
    CHECK(dec.total_members() == members);

    const auto other = make(2, {{5, 5}});
    CHECK_THROWS_AS(build_sphere_decomposition(cross, other), PreconditionError);
  }

  TEST_CASE("antipodal bound never exceeds the right-angle count") {
    for (std::int64_t side : {4, 8, 12}) {
      const auto g = generate_grid(2, side);
      const auto block = middle_block(g, Rational::make(1, 2));
      const auto dec = build_sphere_decomposition(g, block);
      const auto lb = antipodal_lower_bound(dec, g, true);
      if (side >= 8) CHECK(lb > 0);
      CHECK(lb <= count_right(g));
    }
    std::mt19937_64 rng(99);
    for (int trial = 0; trial < 20; ++trial) {
      const auto pts = oracle::random_points(rng, 2 + trial % 2, 25, 3);
      const auto set = make(2 + trial % 2, pts);
      const auto dec = build_sphere_decomposition(set, set);
      CHECK(antipodal_lower_bound(dec, set, true) <= count_right(set));
    }
  }

  TEST_CASE("windowed mass examples") {
    const auto tri = thicken(make(2, {{0, 0}, {1, 0}, {0, 1}}), 1.0, Rational{});
    CHECK(windowed_mass(tri, 0.0, 0.1) == doctest::Approx(2.0 / 27).epsilon(1e-14));
    CHECK(windowed_mass(tri, 0.0, 2.0) == doctest::Approx(12.0 / 27).epsilon(1e-14));
    CHECK(total_triple_mass(tri) == doctest::Approx(12.0 / 27).epsilon(1e-14));
    CHECK_THROWS_AS(windowed_mass(tri, 0.0, 0.0), RangeError);
    CHECK_THROWS_AS(windowed_mass(tri, 1.5, 0.1), RangeError);
  }

  TEST_CASE("window masses match the oracle and are monotone in eps") {
    std::mt19937_64 rng(5);
    for (int trial = 0; trial < 15; ++trial) {
      const int d = 2 + trial % 3;
      auto pts = oracle::random_points(rng, d, 12, 3);
      for (auto& p : pts)
        for (auto& c : p) c += 4;
      const auto m = thicken(make(d, pts), 0.5, Rational::make(1, 8));
      const double mass3 = m.mass_per_atom * m.mass_per_atom * m.mass_per_atom;
      double prev = 0;
      for (double eps : {0.01, 0.05, 0.2, 0.7, 2.5}) {
        const double t = -0.3 + 0.1 * trial / 3.0;
        const double got = windowed_mass(m, t, eps);
        const auto expect = oracle::ordered_in_window(pts, t - eps, t + eps);
        CHECK(got == doctest::Approx(static_cast<double>(expect) * mass3).epsilon(1e-12));
        CHECK(got >= prev);
        prev = got;
      }
      CHECK(prev == doctest::Approx(total_triple_mass(m)).epsilon(1e-12));
    }
  }
}
