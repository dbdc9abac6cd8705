#pragma once

#include <span>

namespace angleset {

struct LogLogFit {
  double slope = 0.0;
  double intercept = 0.0;
  double r_squared = 0.0;
  double residual_rms = 0.0;
};

/// Ordinary least squares of log(value) on log(size). Needs >= 3 points,
/// all strictly positive.
LogLogFit fit_loglog(std::span<const double> sizes, std::span<const double> values);

}  // namespace angleset
