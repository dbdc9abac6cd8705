#pragma once

// The angle-distribution functional
//   nu_eps(t) = eps^-1 (mu x mu x mu){(x, y, z) : |cos angle(x z y) - t| <= eps}
// for uniform atomic measures, and a covering estimate of the angle set.

#include <cstddef>
#include <utility>
#include <vector>

#include "angleset/census.hpp"
#include "angleset/lattice.hpp"

namespace angleset {

double nu_epsilon(const WeightedPointMeasure& measure, double t, double eps, const CensusOptions& options = {});

struct HistogramBin {
  double t;
  double nu;
  double cell_mass;    // mass with cosine in [t - 1/n_bins, t + 1/n_bins), disjoint across bins
  bool near_endpoint;  // window reaches past +-1, where cosine and angle windows stop being comparable
};

struct AngleHistogram {
  double eps = 0.0;
  std::vector<HistogramBin> bins;
  std::size_t n = 0;
  double total_mass_check = 0.0;  // sum of cell_mass
};

/// nu_eps at the bin centers t_i = -1 + (2i + 1) / n_bins.
AngleHistogram nu_profile(const WeightedPointMeasure& measure, double eps, std::size_t n_bins,
                          const CensusOptions& options = {});

/// Maximum of nu_eps over the grid t_j = -1 + j eps / 2 in [-1, 1]; the
/// first maximizer wins ties.
std::pair<double, double> equitable_sup(const WeightedPointMeasure& measure, double eps,
                                        const CensusOptions& options = {});

struct AngleSetEstimate {
  double eps = 0.0;
  std::size_t occupied_bins = 0;
  double measure_estimate = 0.0;  // eps * occupied_bins
  std::size_t distinct_keys = 0;
};

/// Counts the width-eps bins [-1 + i eps, -1 + (i + 1) eps) (last bin closed
/// at 1) that contain the cosine of at least one configuration.
AngleSetEstimate angle_set_estimate(const LatticePointSet& points, double eps, const CensusOptions& options = {});

/// Cosine distribution of a uniform atomic measure: every distinct cosine
/// with the number of ordered non-degenerate triples realizing it, sorted.
/// Built from the exact census, so each cosine appears once.
struct CosineSpectrum {
  std::vector<double> cosines;
  std::vector<std::uint64_t> prefix;  // prefix[i] = triples with cosine index < i
  double mass_cubed = 0.0;

  static CosineSpectrum from_measure(const WeightedPointMeasure& measure, const CensusOptions& options = {});
  /// Mass in the closed window [lo, hi] with the census guard band.
  double mass(double lo, double hi) const;
};

}  // namespace angleset
