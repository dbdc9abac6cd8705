#include <cmath>
#include <random>
#include <vector>

#include "doctest.h"

#include "angleset/errors.hpp"
#include "angleset/fit.hpp"
#include "angleset/spectrum.hpp"
#include "oracle.hpp"

using namespace angleset;

namespace {

WeightedPointMeasure measure_of(int d, const std::vector<oracle::Point>& pts, double s = 1.0) {
  std::int64_t hi = 1;
  for (const auto& p : pts)
    for (auto c : p) hi = std::max(hi, c);
  return thicken(LatticePointSet::from_points(d, pts), s, Rational::make(1, hi));
}

}  // namespace

TEST_SUITE("spectrum") {
  TEST_CASE("nu_epsilon on a right triangle") {
    const auto tri = measure_of(2, {{0, 0}, {1, 0}, {0, 1}});
    CHECK(nu_epsilon(tri, 0.0, 0.1) == doctest::Approx(20.0 / 27).epsilon(1e-14));
    CHECK(nu_epsilon(tri, 0.0, 2.0) == doctest::Approx(6.0 / 27).epsilon(1e-14));
    CHECK_THROWS_AS(nu_epsilon(tri, 0.0, -1.0), RangeError);
  }

  TEST_CASE("symmetric cross: the sup sits on the 45-degree family") {
    const auto cross = measure_of(2, {{1, 2}, {3, 2}, {2, 1}, {2, 3}}, 1.0);
    const double eps = 0.05;
    const auto [t, nu] = equitable_sup(cross, eps);
    CHECK(std::abs(t - std::sqrt(0.5)) <= eps);
    // 16 ordered triples at cos = 1/sqrt(2) out of 64 weighted cubes.
    CHECK(nu == doctest::Approx(16.0 / 64 / eps).epsilon(1e-12));
    CHECK(nu_epsilon(cross, 0.0, eps) == doctest::Approx(8.0 / 64 / eps).epsilon(1e-12));
  }

  TEST_CASE("histogram cells partition the total mass") {
    std::mt19937_64 rng(17);
    for (int trial = 0; trial < 10; ++trial) {
      const int d = 2 + trial % 2;
      auto pts = oracle::random_points(rng, d, 15, 4);
      for (auto& p : pts)
        for (auto& c : p) c += 5;
      const auto m = measure_of(d, pts);
      for (std::size_t bins : {1u, 7u, 40u, 200u}) {
        const auto hist = nu_profile(m, 0.05, bins);
        REQUIRE(hist.bins.size() == bins);
        CHECK(hist.total_mass_check == doctest::Approx(total_triple_mass(m)).epsilon(1e-12));
        double sum = 0;
        for (const auto& b : hist.bins) sum += b.cell_mass;
        CHECK(sum == doctest::Approx(total_triple_mass(m)).epsilon(1e-12));
        CHECK(hist.bins.front().t == doctest::Approx(-1.0 + 1.0 / static_cast<double>(bins)));
      }
    }
  }

  TEST_CASE("histogram nu agrees with nu_epsilon") {
    const auto m = thicken(generate_grid(2, 5), 1.0, Rational::make(1, 5));
    const auto hist = nu_profile(m, 0.08, 25);
    for (const auto& b : hist.bins) {
      CHECK(b.nu == doctest::Approx(nu_epsilon(m, b.t, 0.08)).epsilon(1e-12));
      CHECK(b.near_endpoint == (std::abs(b.t) + 0.08 > 1.0));
    }
    CHECK_THROWS_AS(nu_profile(m, 0.1, 0), RangeError);
  }

  TEST_CASE("CosineSpectrum matches window_mass") {
    std::mt19937_64 rng(23);
    auto pts = oracle::random_points(rng, 3, 14, 3);
    for (auto& p : pts)
      for (auto& c : p) c += 4;
    const auto m = measure_of(3, pts);
    const auto spec = CosineSpectrum::from_measure(m);
    std::uniform_real_distribution<double> u(-1.2, 1.2);
    for (int i = 0; i < 200; ++i) {
      double lo = u(rng), hi = u(rng);
      if (lo > hi) std::swap(lo, hi);
      CHECK(spec.mass(lo, hi) == doctest::Approx(window_mass(m, lo, hi)).epsilon(1e-12));
    }
  }

  TEST_CASE("eps monotonicity of windowed mass") {
    const auto m = thicken(generate_grid(3, 4), 2.0, Rational::make(1, 4));
    for (double t : {-0.9, -0.3, 0.0, 0.45, 1.0}) {
      double prev = 0;
      for (double eps = 0.001; eps < 2.5; eps *= 1.7) {
        const double w = windowed_mass(m, t, eps);
        CHECK(w >= prev);
        prev = w;
      }
    }
  }

  TEST_CASE("angle set estimate covers every key") {
    const auto sq = LatticePointSet::from_points(2, {{0, 0}, {1, 0}, {0, 1}, {1, 1}});
    const auto est = angle_set_estimate(sq, 0.1);
    CHECK(est.occupied_bins == 2);
    CHECK(est.distinct_keys == 2);
    CHECK(est.measure_estimate == doctest::Approx(0.2));

    const auto g = generate_grid(2, 6);
    const auto rep = brute_force_census(g);
    for (double eps : {0.5, 0.1, 0.01, 0.001}) {
      const auto e = angle_set_estimate(g, eps);
      CHECK(e.occupied_bins <= e.distinct_keys);
      CHECK(e.occupied_bins >= 1);
      CHECK(e.measure_estimate <= 2.0 + eps);
      std::vector<bool> hit(static_cast<std::size_t>(std::ceil(2.0 / eps - 1e-12)), false);
      for (const auto& [k, c] : rep.counts) {
        const auto bin = std::min<std::size_t>(static_cast<std::size_t>(std::floor((cosine_value(k) + 1.0) / eps)),
                                               hit.size() - 1);
        hit[bin] = true;
      }
      CHECK(static_cast<std::size_t>(std::count(hit.begin(), hit.end(), true)) == e.occupied_bins);
    }
    CHECK_THROWS_AS(angle_set_estimate(g, 0.0), RangeError);
  }
}

TEST_SUITE("fit") {
  TEST_CASE("exact power laws") {
    const std::vector<double> x{2, 4, 8, 16, 32};
    std::vector<double> y;
    for (double v : x) y.push_back(3.0 * std::pow(v, 1.7));
    const auto f = fit_loglog(x, y);
    CHECK(f.slope == doctest::Approx(1.7).epsilon(1e-12));
    CHECK(f.intercept == doctest::Approx(std::log(3.0)).epsilon(1e-12));
    CHECK(f.r_squared == doctest::Approx(1.0));
    CHECK(f.residual_rms < 1e-12);

    const std::vector<double> flat{5, 5, 5};
    const auto c = fit_loglog(std::vector<double>{1, 2, 3}, flat);
    CHECK(c.slope == doctest::Approx(0.0));
    CHECK(c.r_squared == 1.0);
  }

  TEST_CASE("fit errors") {
    CHECK_THROWS_AS(fit_loglog(std::vector<double>{1, 2}, std::vector<double>{1, 2}), DegenerateInputError);
    CHECK_THROWS_AS(fit_loglog(std::vector<double>{1, 2, 3}, std::vector<double>{1, 0, 2}), RangeError);
    CHECK_THROWS_AS(fit_loglog(std::vector<double>{1, 2, 3}, std::vector<double>{1, 2}), PreconditionError);
    CHECK_THROWS_AS(fit_loglog(std::vector<double>{2, 2, 2}, std::vector<double>{1, 2, 3}), DegenerateInputError);
  }
}
