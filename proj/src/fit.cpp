#include "angleset/fit.hpp"

#include <cmath>
#include <string>
#include <vector>

#include "angleset/errors.hpp"

namespace angleset {

LogLogFit fit_loglog(std::span<const double> sizes, std::span<const double> values) {
  if (sizes.size() != values.size()) throw PreconditionError("fit_loglog: size/value length mismatch");
  if (sizes.size() < 3) throw DegenerateInputError("fit_loglog needs at least 3 rows, got " + std::to_string(sizes.size()));
  const auto n = static_cast<double>(sizes.size());
  std::vector<double> x, y;
  for (std::size_t i = 0; i < sizes.size(); ++i) {
    if (!(sizes[i] > 0.0) || !(values[i] > 0.0))
      throw RangeError("fit_loglog: row " + std::to_string(i) + " has a non-positive size or value");
    x.push_back(std::log(sizes[i]));
    y.push_back(std::log(values[i]));
  }
  double mx = 0, my = 0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    mx += x[i];
    my += y[i];
  }
  mx /= n;
  my /= n;
  double sxx = 0, sxy = 0, syy = 0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    sxx += (x[i] - mx) * (x[i] - mx);
    sxy += (x[i] - mx) * (y[i] - my);
    syy += (y[i] - my) * (y[i] - my);
  }
  if (sxx == 0.0) throw DegenerateInputError("fit_loglog: all sizes are equal");
  LogLogFit fit;
  fit.slope = sxy / sxx;
  fit.intercept = my - fit.slope * mx;
  double ss_res = 0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    const double r = y[i] - (fit.intercept + fit.slope * x[i]);
    ss_res += r * r;
  }
  fit.residual_rms = std::sqrt(ss_res / n);
  fit.r_squared = syy > 0.0 ? 1.0 - ss_res / syy : 1.0;
  return fit;
}

}  // namespace angleset
