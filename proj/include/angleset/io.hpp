#pragma once

// CSV and JSON encodings of the library's reports.

#include <iosfwd>
#include <string>

#include "json.hpp"

#include "angleset/census.hpp"
#include "angleset/energy.hpp"
#include "angleset/oscillatory.hpp"
#include "angleset/scaling.hpp"
#include "angleset/spectrum.hpp"

namespace angleset {

/// Shortest round-trip decimal form ("%.17g").
std::string format_double(double value);

void write_census_csv(std::ostream& out, const CensusReport& report);
nlohmann::json census_summary_json(const CensusReport& report);

void write_shell_csv(std::ostream& out, const ShellCountReport& report);
nlohmann::json energy_json(const EnergyReport& report);

void write_histogram_csv(std::ostream& out, const AngleHistogram& histogram);
nlohmann::json angle_set_json(const AngleSetEstimate& estimate);

nlohmann::json decay_json(const DecayFit& fit, const ShellMeasureGrid& grid);

void write_scaling_csv(std::ostream& out, const ScalingReport& report);
nlohmann::json scaling_json(const ScalingReport& report);

}  // namespace angleset
