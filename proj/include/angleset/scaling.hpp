#pragma once

// Size-ladder experiments: each runs one counting or measure computation
// over increasing sizes and compares the fitted log-log slope to a target
// exponent.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"

#include "angleset/census.hpp"
#include "angleset/exact_angles.hpp"
#include "angleset/fit.hpp"
#include "angleset/lattice.hpp"

namespace angleset {

enum class Direction { AtLeast, AtMost };

struct ScalingRow {
  std::uint64_t size = 0;     // n, N or r2 as reported in CSV
  double fit_size = 0.0;      // abscissa used in the fit (n, r2, or R)
  double value = 0.0;
  std::optional<std::uint64_t> exact_value;  // set for integer-valued rows
  nlohmann::json extra = nlohmann::json::object();
};

struct ScalingReport {
  std::string name;
  std::vector<ScalingRow> rows;
  LogLogFit fit;
  std::optional<double> target_exponent;  // unset: measured only, no verdict
  Direction direction = Direction::AtLeast;
  double slack = 0.0;
  bool pass = false;
  std::vector<std::string> notes;
  nlohmann::json parameters = nlohmann::json::object();
};

struct ExperimentOptions {
  CensusOptions census;
  std::optional<double> slack;      // default depends on direction: 0.3 (>=), 0.1 (<=)
  Rational block_fraction{1, 2};    // middle block for the antipodal cross-check
  bool verify_thales = false;
  std::optional<AngleKey> key;      // right-angle experiment: count this key instead
  double adaptability_threshold = 10.0;
};

inline constexpr double kLowerBoundSlack = 0.3;
inline constexpr double kUpperBoundSlack = 0.1;

/// Fits rows and sets fit/pass; rows must already be populated.
void finalize_report(ScalingReport& report);

ScalingReport run_right_angle_scaling(int dim, const std::vector<std::int64_t>& sides, const ExperimentOptions& options = {});
ScalingReport run_equitable_violation(int dim, double s, const std::vector<std::int64_t>& sides,
                                      const ExperimentOptions& options = {});
ScalingReport run_repetition_bound(int dim, double s, const std::vector<std::int64_t>& sides,
                                   const ExperimentOptions& options = {});
ScalingReport run_sphere_angle_bound(int dim, const std::vector<std::int64_t>& r2_ladder, const ExperimentOptions& options = {});
ScalingReport run_shell_bound(int dim, const std::vector<std::int64_t>& r2_ladder, const ExperimentOptions& options = {});

}  // namespace angleset
