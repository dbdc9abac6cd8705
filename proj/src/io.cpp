#include "angleset/io.hpp"

#include <cstdio>
#include <ostream>

namespace angleset {

std::string format_double(double value) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", value);
  return buf;
}

void write_census_csv(std::ostream& out, const CensusReport& report) {
  out << "angle_key,count\n";
  for (const auto& [key, count] : report.counts) out << key.str() << ',' << count << '\n';
}

nlohmann::json census_summary_json(const CensusReport& report) {
  nlohmann::json j = {{"n_points", report.n_points}, {"total", report.total}, {"distinct_keys", report.distinct_keys()}};
  if (report.counts.empty()) {
    j["max_key"] = nullptr;
    j["max_count"] = 0;
  } else {
    const auto [key, count] = max_repetition(report);
    j["max_key"] = key.str();
    j["max_count"] = count;
  }
  return j;
}

void write_shell_csv(std::ostream& out, const ShellCountReport& report) {
  out << "r2,k_index,j,w_j\n";
  for (std::size_t k = 0; k < report.w.size(); ++k)
    for (std::size_t j = 0; j < report.w[k].size(); ++j) out << report.r2 << ',' << k << ',' << j << ',' << report.w[k][j] << '\n';
}

nlohmann::json energy_json(const EnergyReport& report) {
  return {{"s", report.s}, {"value", report.value}, {"min_separation", report.min_separation},
          {"adaptable", report.adaptable}, {"n", report.n}};
}

void write_histogram_csv(std::ostream& out, const AngleHistogram& histogram) {
  out << "t,nu\n";
  for (const auto& bin : histogram.bins) out << format_double(bin.t) << ',' << format_double(bin.nu) << '\n';
}

nlohmann::json angle_set_json(const AngleSetEstimate& estimate) {
  return {{"eps", estimate.eps}, {"occupied_bins", estimate.occupied_bins},
          {"measure_estimate", estimate.measure_estimate}, {"distinct_keys", estimate.distinct_keys}};
}

nlohmann::json decay_json(const DecayFit& fit, const ShellMeasureGrid& grid) {
  return {{"d", grid.dim},           {"t", grid.t},
          {"eps", grid.eps},         {"h", grid.h},
          {"ray", fit.ray},          {"lambdas", fit.lambdas},
          {"magnitudes", fit.magnitudes}, {"gamma_hat", fit.gamma_hat},
          {"residual", fit.residual}};
}

void write_scaling_csv(std::ostream& out, const ScalingReport& report) {
  out << "size,value\n";
  for (const auto& row : report.rows) {
    out << row.size << ',';
    if (row.exact_value)
      out << *row.exact_value;
    else
      out << format_double(row.value);
    out << '\n';
  }
}

nlohmann::json scaling_json(const ScalingReport& report) {
  nlohmann::json rows = nlohmann::json::array();
  for (const auto& row : report.rows) {
    nlohmann::json r = {{"size", row.size}, {"fit_size", row.fit_size}, {"value", row.value}};
    if (row.exact_value) r["exact_value"] = *row.exact_value;
    if (!row.extra.empty()) r["extra"] = row.extra;
    rows.push_back(std::move(r));
  }
  nlohmann::json j = {{"name", report.name},
                      {"rows", rows},
                      {"slope", report.fit.slope},
                      {"intercept", report.fit.intercept},
                      {"r_squared", report.fit.r_squared},
                      {"direction", report.direction == Direction::AtLeast ? ">=" : "<="},
                      {"slack", report.slack},
                      {"pass", report.pass},
                      {"notes", report.notes},
                      {"parameters", report.parameters}};
  j["target_exponent"] = report.target_exponent ? nlohmann::json(*report.target_exponent) : nlohmann::json(nullptr);
  return j;
}

}  // namespace angleset
