#include "angleset/scaling.hpp"

#include <cmath>
#include <string>

#include "angleset/energy.hpp"
#include "angleset/errors.hpp"
#include "angleset/spectrum.hpp"

namespace angleset {

namespace {

void require_ladder(const std::vector<std::int64_t>& sizes, const char* what) {
  if (sizes.size() < 3)
    throw DegenerateInputError(std::string("scaling needs at least 3 ") + what + ", got " + std::to_string(sizes.size()));
  for (std::size_t i = 1; i < sizes.size(); ++i)
    if (sizes[i] <= sizes[i - 1]) throw PreconditionError(std::string(what) + " must be strictly increasing");
}

ScalingRow integer_row(std::uint64_t size, double fit_size, std::uint64_t value) {
  ScalingRow row;
  row.size = size;
  row.fit_size = fit_size;
  row.value = static_cast<double>(value);
  row.exact_value = value;
  return row;
}

void set_target(ScalingReport& report, double target, Direction direction, const ExperimentOptions& options) {
  report.target_exponent = target;
  report.direction = direction;
  report.slack = options.slack.value_or(direction == Direction::AtLeast ? kLowerBoundSlack : kUpperBoundSlack);
}

}  // namespace

void finalize_report(ScalingReport& report) {
  std::vector<double> x, y;
  for (const auto& row : report.rows) {
    x.push_back(row.fit_size);
    y.push_back(row.value);
  }
  report.fit = fit_loglog(x, y);
  if (!report.target_exponent) {
    report.pass = true;
    return;
  }
  report.pass = report.direction == Direction::AtLeast ? report.fit.slope >= *report.target_exponent - report.slack
                                                       : report.fit.slope <= *report.target_exponent + report.slack;
}

ScalingReport run_right_angle_scaling(int dim, const std::vector<std::int64_t>& sides, const ExperimentOptions& options) {
  require_ladder(sides, "sides");
  ScalingReport report;
  report.name = options.key ? "key_scaling" : "right_angles";
  report.parameters = {{"dim", dim}, {"sides", sides}, {"block_fraction", options.block_fraction.str()}};
  bool bound_holds = true;
  for (auto side : sides) {
    const auto grid = generate_grid(dim, side);
    if (options.key) {
      report.rows.push_back(integer_row(grid.size(), static_cast<double>(grid.size()), count_key(grid, *options.key, options.census)));
      continue;
    }
    const auto count = count_right(grid, options.census);
    auto row = integer_row(grid.size(), static_cast<double>(grid.size()), count);
    std::uint64_t lower = 0;
    try {
      const auto block = middle_block(grid, options.block_fraction);
      const auto spheres = build_sphere_decomposition(grid, block);
      lower = antipodal_lower_bound(spheres, grid, options.verify_thales);
      row.extra["spheres"] = spheres.entries.size();
      row.extra["sum_m_sigma"] = spheres.total_members();
    } catch (const DegenerateInputError& e) {
      report.notes.push_back("side " + std::to_string(side) + ": " + e.what());
    }
    row.extra["antipodal_lower_bound"] = lower;
    row.extra["lower_bound_ratio"] = count > 0 ? static_cast<double>(lower) / static_cast<double>(count) : 0.0;
    bound_holds = bound_holds && lower <= count;
    report.rows.push_back(std::move(row));
  }
  if (options.key) {
    report.parameters["key"] = options.key->str();
    report.notes.push_back("non-right key: measured exponent only, no target");
    finalize_report(report);
    return report;
  }
  set_target(report, 3.0 - 2.0 / dim, Direction::AtLeast, options);
  finalize_report(report);
  if (!bound_holds) {
    report.pass = false;
    report.notes.push_back("antipodal lower bound exceeded the exact right-angle count");
  }
  return report;
}

ScalingReport run_equitable_violation(int dim, double s, const std::vector<std::int64_t>& sides, const ExperimentOptions& options) {
  if (!(s > 0.0 && s < dim / 2.0))
    throw RangeError("equitable-violation experiment needs 0 < s < d/2, got s=" + std::to_string(s));
  require_ladder(sides, "sides");
  ScalingReport report;
  report.name = "equitable_violation";
  report.parameters = {{"dim", dim}, {"s", s}, {"sides", sides}, {"t", 0.0}, {"eps_policy", "n^(-1/s)"}};
  for (auto side : sides) {
    const auto grid = generate_grid(dim, side);
    const auto measure = thicken(grid, s, Rational::make(1, side));
    const auto n = static_cast<double>(grid.size());
    const double eps = std::pow(n, -1.0 / s);
    ScalingRow row;
    row.size = grid.size();
    row.fit_size = n;
    row.value = nu_epsilon(measure, 0.0, eps, options.census);
    row.extra["eps"] = eps;
    report.rows.push_back(std::move(row));
  }
  set_target(report, 1.0 / s - 2.0 / dim, Direction::AtLeast, options);
  finalize_report(report);
  return report;
}

ScalingReport run_repetition_bound(int dim, double s, const std::vector<std::int64_t>& sides, const ExperimentOptions& options) {
  if (!(s > (dim + 1) / 2.0 && s < dim))
    throw RangeError("repetition-bound experiment needs (d+1)/2 < s < d, got s=" + std::to_string(s));
  require_ladder(sides, "sides");
  ScalingReport report;
  report.name = "repetition_bound";
  report.parameters = {{"dim", dim}, {"s", s}, {"sides", sides}};
  EnergyOptions energy_options;
  energy_options.adaptability_threshold = options.adaptability_threshold;
  energy_options.workers = options.census.workers;
  for (auto side : sides) {
    const auto grid = generate_grid(dim, side);
    const auto census = brute_force_census(grid, options.census);
    const auto [key, count] = max_repetition(census);
    // The census counts each configuration once; ordered triples are twice that.
    auto row = integer_row(grid.size(), static_cast<double>(grid.size()), 2 * count);
    const auto energy = riesz_energy(grid, s, Rational::make(1, side), energy_options);
    row.extra["max_key"] = key.str();
    row.extra["energy"] = energy.value;
    row.extra["adaptable"] = energy.adaptable;
    if (!energy.adaptable) report.notes.push_back("side " + std::to_string(side) + ": grid is not s-adaptable at the configured threshold");
    report.rows.push_back(std::move(row));
  }
  set_target(report, 3.0 - 1.0 / s, Direction::AtMost, options);
  finalize_report(report);
  return report;
}

ScalingReport run_sphere_angle_bound(int dim, const std::vector<std::int64_t>& r2_ladder, const ExperimentOptions& options) {
  if (dim < 4) throw RangeError("sphere angle experiment needs d >= 4, got " + std::to_string(dim));
  require_ladder(r2_ladder, "squared radii");
  ScalingReport report;
  report.name = "sphere_angles";
  report.parameters = {{"dim", dim}, {"r2", r2_ladder}};
  for (auto r2 : r2_ladder) {
    if (dim == 4 && r2 % 4 == 0) report.notes.push_back("r2=" + std::to_string(r2) + " is divisible by 4 (inadmissible in d=4)");
    const auto sphere = sphere_lattice(dim, r2);
    if (sphere.size() < 3) {
      report.notes.push_back("r2=" + std::to_string(r2) + ": fewer than 3 sphere points, row skipped");
      continue;
    }
    const auto distinct = distinct_angles(sphere, options.census);
    auto row = integer_row(static_cast<std::uint64_t>(r2), static_cast<double>(r2), distinct.keys);
    row.extra["points"] = sphere.size();
    row.extra["points_over_r2_power"] = static_cast<double>(sphere.size()) / std::pow(static_cast<double>(r2), (dim - 2) / 2.0);
    row.extra["distinct_dot_products"] = distinct.dot_products;
    row.extra["dot_product_bound"] = 2 * r2 + 1;
    row.extra["within_dot_product_bound"] = distinct.dot_products <= static_cast<std::size_t>(2 * r2 + 1);
    report.rows.push_back(std::move(row));
  }
  if (report.rows.size() < 3) throw DegenerateInputError("sphere angle experiment has fewer than 3 usable rows");
  set_target(report, 1.0, Direction::AtMost, options);
  finalize_report(report);
  return report;
}

ScalingReport run_shell_bound(int dim, const std::vector<std::int64_t>& r2_ladder, const ExperimentOptions& options) {
  if (dim != 4 && dim != 5) throw RangeError("shell experiment needs d in {4, 5}, got " + std::to_string(dim));
  require_ladder(r2_ladder, "squared radii");
  ScalingReport report;
  report.name = "shell_bound";
  report.parameters = {{"dim", dim}, {"r2", r2_ladder}, {"fit_abscissa", "R"}};
  bool partition_ok = true;
  for (auto r2 : r2_ladder) {
    const auto sphere = sphere_lattice(dim, r2);
    if (sphere.empty()) {
      report.notes.push_back("r2=" + std::to_string(r2) + ": empty sphere, row skipped");
      continue;
    }
    const auto shells = shell_counts(sphere, r2);
    for (const auto& wk : shells.w) {
      std::uint64_t total = 0;
      for (auto w : wk) total += w;
      partition_ok = partition_ok && total == sphere.size() - 1;
    }
    ScalingRow row;
    row.size = static_cast<std::uint64_t>(r2);
    row.fit_size = std::sqrt(static_cast<double>(r2));
    row.value = shells.max_ratio;
    row.extra["points"] = sphere.size();
    row.extra["argmax_j"] = shells.argmax_j;
    report.rows.push_back(std::move(row));
  }
  if (report.rows.size() < 3) throw DegenerateInputError("shell experiment has fewer than 3 usable rows");
  set_target(report, 0.0, Direction::AtMost, options);
  finalize_report(report);
  report.parameters["partition_identity"] = partition_ok;
  if (!partition_ok) {
    report.pass = false;
    report.notes.push_back("shell partition identity violated");
  }
  return report;
}

}  // namespace angleset
