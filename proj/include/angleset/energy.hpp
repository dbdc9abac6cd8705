#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "angleset/lattice.hpp"

namespace angleset {

struct EnergyOptions {
  double adaptability_threshold = 10.0;  // C_E: adaptable requires value <= C_E
  unsigned workers = 1;
};

struct EnergyReport {
  double s = 0.0;
  double value = 0.0;           // N^-2 sum_{p != p'} |scale (p - p')|^-s
  double min_separation = 0.0;  // scaled
  bool adaptable = false;       // separated at N^(-1/s) and value <= C_E
  std::size_t n = 0;
};

/// Normalized discrete Riesz s-energy of the scaled point set.
EnergyReport riesz_energy(const LatticePointSet& points, double s, Rational scale, const EnergyOptions& options = {});

/// Dyadic shell counts on an integer sphere. w[k][j] counts the sphere
/// points l != k with 4^j <= |k - l|^2 < 4^(j+1); j runs over 0..max_j where
/// 4^max_j <= 4 r2 (the largest possible squared chord).
struct ShellCountReport {
  std::int64_t r2 = 0;
  int dim = 0;
  int max_j = 0;
  std::vector<std::vector<std::uint64_t>> w;
  double max_ratio = 0.0;  // max over (j, k) of w_j(k) / 2^(j (d - 2))
  int argmax_j = 0;
  std::size_t argmax_k = 0;
};

ShellCountReport shell_counts(const LatticePointSet& sphere, std::int64_t r2);

/// m^-2 r2^(s/2) sum_{k != l} |k - l|^-s over the sphere's m points, i.e.
/// the off-diagonal energy of the sphere rescaled to radius 1.
double cross_term(const LatticePointSet& sphere, std::int64_t r2, double s, unsigned workers = 1);

}  // namespace angleset
