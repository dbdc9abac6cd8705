#pragma once

// Angle census over vertex-marked configurations.
//
// A configuration is a vertex q together with an unordered pair {p, r} of
// other points, p != r. An N-point set has N (N-1) (N-2) / 2 of them.
// Integer results are independent of the worker count.

#include <cstddef>
#include <cstdint>
#include <map>
#include <utility>
#include <vector>

#include "angleset/exact_angles.hpp"
#include "angleset/lattice.hpp"

namespace angleset {

struct CensusOptions {
  std::size_t brute_force_cap = 600;  // full census, distinct-angle counts
  std::size_t vertex_cap = 40000;     // single-key counts, window masses
  unsigned workers = 1;
};

struct CensusReport {
  std::map<AngleKey, std::uint64_t> counts;
  std::uint64_t total = 0;
  std::size_t n_points = 0;

  std::size_t distinct_keys() const { return counts.size(); }
};

/// Total configurations N (N-1) (N-2) / 2.
std::uint64_t configuration_count(std::size_t n);

CensusReport brute_force_census(const LatticePointSet& points, const CensusOptions& options = {});
std::uint64_t count_key(const LatticePointSet& points, const AngleKey& key, const CensusOptions& options = {});
std::uint64_t count_right(const LatticePointSet& points, const CensusOptions& options = {});

struct DistinctAngles {
  std::size_t keys = 0;
  std::size_t dot_products = 0;
};
DistinctAngles distinct_angles(const LatticePointSet& points, const CensusOptions& options = {});

/// Key with the largest count; ties go to the smallest (sign, num, den).
std::pair<AngleKey, std::uint64_t> max_repetition(const CensusReport& report);

struct SphereEntry {
  std::size_t center;                // index into P
  std::int64_t r2;
  std::vector<std::size_t> members;  // indices into P, ascending
};

/// Spheres centered at points of Q through other points of Q, with their
/// members taken from P. Entries are ordered by (center index in Q, r2).
struct SphereDecomposition {
  std::vector<SphereEntry> entries;
  std::size_t p_size = 0;
  std::size_t q_size = 0;

  /// Sum of m_sigma over all spheres.
  std::uint64_t total_members() const;
};

SphereDecomposition build_sphere_decomposition(const LatticePointSet& p, const LatticePointSet& q);

/// Right angles certified by antipodal pairs: sum over spheres of
/// A_sigma (m_sigma - 2), A_sigma the number of antipodal pairs found in P.
/// With `verify_thales`, every contributed triple is re-checked with
/// is_right() and a std::logic_error is thrown on mismatch.
std::uint64_t antipodal_lower_bound(const SphereDecomposition& decomposition, const LatticePointSet& p,
                                    bool verify_thales = false);

/// mu^3 mass of ordered triples (x, y, z), x != z, y != z, whose cosine at
/// z lies in the closed window [lo, hi] (1e-12 guard band on both ends).
/// x = y is included and has cosine 1.
double window_mass(const WeightedPointMeasure& measure, double lo, double hi, const CensusOptions& options = {});

/// window_mass over [t - eps, t + eps].
double windowed_mass(const WeightedPointMeasure& measure, double t, double eps, const CensusOptions& options = {});

/// Number of ordered non-degenerate triples N (N-1)^2 times mass^3.
double total_triple_mass(const WeightedPointMeasure& measure);

inline constexpr double kWindowGuard = 1e-12;

}  // namespace angleset
