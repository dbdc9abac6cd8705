#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"

#include "angleset/errors.hpp"

namespace angleset::cli {

/// Bad command line; the message names the offending flag.
class UsageError : public Error {
 public:
  using Error::Error;
};

struct RunConfig {
  std::string command;  // generate | census | energy | spectrum | decay | scaling
  std::string target;   // sub-target of the command, e.g. "grid" or "right-angles"

  int dim = 2;
  std::optional<std::int64_t> side;
  std::optional<std::int64_t> r2;
  std::vector<std::int64_t> sides;
  std::vector<std::int64_t> r2_ladder;
  std::optional<double> s;
  std::optional<double> eps;
  std::string eps_policy = "fixed";  // fixed | n  (n: eps = n^(-1/s))
  double t = 0.0;
  std::size_t bins = 20;
  std::optional<std::string> key;
  std::optional<std::string> fraction;  // default 1/5; scaling uses 1/2
  std::optional<std::string> scale;
  int first_index = 0;
  int depth = 1;
  double h = 1.0 / 64;
  std::vector<double> ray;
  std::vector<double> lambdas;

  bool right = false;
  bool distinct = false;
  bool lower_bound = false;

  std::size_t brute_force_cap = 600;
  std::size_t vertex_cap = 40000;
  std::optional<double> slack;
  double adaptability_threshold = 10.0;
  unsigned workers = 1;
  std::string out_dir = ".";

  nlohmann::json to_json() const;
};

/// Parses and validates; throws UsageError. The default output directory
/// comes from $ANGLESET_OUT when set.
RunConfig parse_args(int argc, const char* const* argv);
RunConfig parse_args(const std::vector<std::string>& args);  // args exclude the program name

/// Runs the configured operation and writes its artifacts. Returns 0 on
/// success or a passing experiment, 2 on a failing experiment, 1 on error.
int dispatch(const RunConfig& config);

}  // namespace angleset::cli
