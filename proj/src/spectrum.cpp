#include "angleset/spectrum.hpp"

#include <algorithm>
#include <cmath>
#include <map>

#include "angleset/errors.hpp"

namespace angleset {

double nu_epsilon(const WeightedPointMeasure& measure, double t, double eps, const CensusOptions& options) {
  return windowed_mass(measure, t, eps, options) / eps;
}

CosineSpectrum CosineSpectrum::from_measure(const WeightedPointMeasure& measure, const CensusOptions& options) {
  const auto report = brute_force_census(measure.base, options);
  std::map<double, std::uint64_t> by_cosine;
  for (const auto& [key, count] : report.counts) by_cosine[cosine_value(key)] += 2 * count;
  const std::uint64_t n = measure.size();
  if (n >= 2) by_cosine[1.0] += n * (n - 1);
  CosineSpectrum out;
  out.prefix.push_back(0);
  for (const auto& [c, count] : by_cosine) {
    if (count == 0) continue;
    out.cosines.push_back(c);
    out.prefix.push_back(out.prefix.back() + count);
  }
  const double m = measure.mass_per_atom;
  out.mass_cubed = m * m * m;
  return out;
}

double CosineSpectrum::mass(double lo, double hi) const {
  if (hi < lo) return 0.0;
  const auto first = std::lower_bound(cosines.begin(), cosines.end(), lo - kWindowGuard) - cosines.begin();
  const auto last = std::upper_bound(cosines.begin(), cosines.end(), hi + kWindowGuard) - cosines.begin();
  return static_cast<double>(prefix[static_cast<std::size_t>(last)] - prefix[static_cast<std::size_t>(first)]) *
         mass_cubed;
}

AngleHistogram nu_profile(const WeightedPointMeasure& measure, double eps, std::size_t n_bins,
                          const CensusOptions& options) {
  if (!(eps > 0.0)) throw RangeError("eps must be positive");
  if (n_bins < 1) throw RangeError("n_bins must be >= 1");
  const auto spectrum = CosineSpectrum::from_measure(measure, options);
  AngleHistogram hist;
  hist.eps = eps;
  hist.n = measure.size();
  const double width = 2.0 / static_cast<double>(n_bins);
  std::vector<std::uint64_t> cell_triples(n_bins, 0);
  for (std::size_t c = 0; c < spectrum.cosines.size(); ++c) {
    const double raw = std::floor((spectrum.cosines[c] + 1.0) / width);
    const auto cell = std::min<std::size_t>(raw < 0 ? 0 : static_cast<std::size_t>(raw), n_bins - 1);
    cell_triples[cell] += spectrum.prefix[c + 1] - spectrum.prefix[c];
  }
  std::uint64_t triples = 0;
  for (std::size_t i = 0; i < n_bins; ++i) {
    const double t = -1.0 + static_cast<double>(2 * i + 1) / static_cast<double>(n_bins);
    const double cell_mass = static_cast<double>(cell_triples[i]) * spectrum.mass_cubed;
    hist.bins.push_back({t, spectrum.mass(t - eps, t + eps) / eps, cell_mass, std::abs(t) + eps > 1.0});
    triples += cell_triples[i];
  }
  hist.total_mass_check = static_cast<double>(triples) * spectrum.mass_cubed;
  return hist;
}

std::pair<double, double> equitable_sup(const WeightedPointMeasure& measure, double eps, const CensusOptions& options) {
  if (!(eps > 0.0)) throw RangeError("eps must be positive");
  const auto spectrum = CosineSpectrum::from_measure(measure, options);
  const double step = eps / 2.0;
  const auto steps = static_cast<std::size_t>(std::floor(2.0 / step + 1e-9));
  double best_t = -1.0, best_nu = -1.0;
  for (std::size_t j = 0; j <= steps; ++j) {
    const double t = std::min(1.0, -1.0 + static_cast<double>(j) * step);
    const double nu = spectrum.mass(t - eps, t + eps) / eps;
    if (nu > best_nu) {
      best_nu = nu;
      best_t = t;
    }
  }
  return {best_t, best_nu};
}

AngleSetEstimate angle_set_estimate(const LatticePointSet& points, double eps, const CensusOptions& options) {
  if (!(eps > 0.0)) throw RangeError("eps must be positive");
  const auto report = brute_force_census(points, options);
  const auto n_bins = std::max<std::size_t>(1, static_cast<std::size_t>(std::ceil(2.0 / eps - 1e-12)));
  std::vector<bool> occupied(n_bins, false);
  for (const auto& [key, count] : report.counts) {
    const double c = cosine_value(key);
    const auto raw = std::floor((c + 1.0) / eps);
    const auto bin = std::min<std::size_t>(raw < 0 ? 0 : static_cast<std::size_t>(raw), n_bins - 1);
    occupied[bin] = true;
  }
  AngleSetEstimate est;
  est.eps = eps;
  est.occupied_bins = static_cast<std::size_t>(std::count(occupied.begin(), occupied.end(), true));
  est.measure_estimate = eps * static_cast<double>(est.occupied_bins);
  est.distinct_keys = report.distinct_keys();
  return est;
}

}  // namespace angleset
