#include "angleset/energy.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "angleset/errors.hpp"
#include "angleset/exact_angles.hpp"
#include "angleset/int128.hpp"
#include "angleset/parallel.hpp"

namespace angleset {

namespace {

std::int64_t squared_distance(PointView a, PointView b) {
  i128 out = 0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    const i128 diff = static_cast<i128>(a[i]) - b[i];
    out += diff * diff;
  }
  if (out > std::numeric_limits<std::int64_t>::max()) throw OverflowError("squared distance exceeds 64 bits");
  return static_cast<std::int64_t>(out);
}

// sum_{j != i} |p_i - p_j|^-s per row i with a fixed inner order, then a
// pairwise reduction over rows; bitwise identical for any worker count.
double off_diagonal_power_sum(const LatticePointSet& points, double s, unsigned workers, std::int64_t* min_sq) {
  const std::size_t n = points.size();
  std::vector<double> rows(n, 0.0);
  std::vector<std::int64_t> row_min(n, std::numeric_limits<std::int64_t>::max());
  parallel_for(n, workers, [&](unsigned, std::size_t i) {
    CompensatedSum acc;
    for (std::size_t j = 0; j < n; ++j) {
      if (j == i) continue;
      const auto sq = squared_distance(points[i], points[j]);
      row_min[i] = std::min(row_min[i], sq);
      acc.add(std::pow(static_cast<double>(sq), -0.5 * s));
    }
    rows[i] = acc.value();
  });
  if (min_sq != nullptr) {
    *min_sq = std::numeric_limits<std::int64_t>::max();
    for (auto v : row_min) *min_sq = std::min(*min_sq, v);
  }
  return pairwise_sum(std::span<const double>(rows));
}

}  // namespace

EnergyReport riesz_energy(const LatticePointSet& points, double s, Rational scale, const EnergyOptions& options) {
  if (!(s > 0.0 && s < points.dim()))
    throw RangeError("s must lie in (0, " + std::to_string(points.dim()) + "), got " + std::to_string(s));
  if (points.size() < 2) throw DegenerateInputError("Riesz energy needs at least two points");
  const auto n = static_cast<double>(points.size());
  std::int64_t min_sq = 0;
  const double raw = off_diagonal_power_sum(points, s, options.workers, &min_sq);
  EnergyReport report;
  report.s = s;
  report.n = points.size();
  report.value = raw * std::pow(scale.value(), -s) / (n * n);
  report.min_separation = std::sqrt(static_cast<double>(min_sq)) * scale.value();
  const bool separated = report.min_separation >= std::pow(n, -1.0 / s);
  report.adaptable = separated && report.value <= options.adaptability_threshold;
  return report;
}

ShellCountReport shell_counts(const LatticePointSet& sphere, std::int64_t r2) {
  if (sphere.empty()) throw DegenerateInputError("shell counts of an empty sphere");
  for (std::size_t i = 0; i < sphere.size(); ++i) {
    if (squared_norm(sphere[i]) != static_cast<u128>(r2))
      throw PreconditionError("point " + std::to_string(i) + " is not on the sphere of squared radius " + std::to_string(r2));
  }
  ShellCountReport report;
  report.r2 = r2;
  report.dim = sphere.dim();
  while ((i128{4} << (2 * report.max_j)) <= i128{4} * r2) ++report.max_j;
  const std::size_t m = sphere.size();
  report.w.assign(m, std::vector<std::uint64_t>(static_cast<std::size_t>(report.max_j) + 1, 0));
  for (std::size_t k = 0; k < m; ++k) {
    for (std::size_t l = 0; l < m; ++l) {
      if (l == k) continue;
      const auto sq = squared_distance(sphere[k], sphere[l]);
      int j = 0;
      while ((std::int64_t{4} << (2 * j)) <= sq) ++j;
      ++report.w[k][static_cast<std::size_t>(j)];
    }
  }
  for (std::size_t k = 0; k < m; ++k) {
    for (int j = 0; j <= report.max_j; ++j) {
      const double ratio = static_cast<double>(report.w[k][static_cast<std::size_t>(j)]) /
                           std::ldexp(1.0, j * (report.dim - 2));
      if (ratio > report.max_ratio) {
        report.max_ratio = ratio;
        report.argmax_j = j;
        report.argmax_k = k;
      }
    }
  }
  return report;
}

double cross_term(const LatticePointSet& sphere, std::int64_t r2, double s, unsigned workers) {
  if (sphere.size() < 2) throw DegenerateInputError("cross term needs at least two sphere points");
  const double limit = (sphere.dim() - 1) / 2.0;
  if (!(s > 0.0 && s < limit))
    throw RangeError("s must lie in (0, (d-1)/2) = (0, " + std::to_string(limit) + "), got " + std::to_string(s));
  const auto m = static_cast<double>(sphere.size());
  const double raw = off_diagonal_power_sum(sphere, s, workers, nullptr);
  return raw * std::pow(static_cast<double>(r2), 0.5 * s) / (m * m);
}

}  // namespace angleset
