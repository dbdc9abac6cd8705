#include "angleset/oscillatory.hpp"

#include <cmath>
#include <limits>
#include <numbers>
#include <string>

#include "angleset/errors.hpp"
#include "angleset/fit.hpp"
#include "angleset/parallel.hpp"

namespace angleset {

namespace {

double norm(std::span<const double> x) {
  double s = 0;
  for (double c : x) s += c * c;
  return std::sqrt(s);
}

double dot(std::span<const double> a, std::span<const double> b) {
  double s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

template <class Keep>
ShellMeasureGrid scan_pairs(int dim, double h, std::size_t cell_cap, Keep&& keep) {
  ShellMeasureGrid grid;
  grid.dim = dim;
  grid.h = h;
  grid.nodes = ball_nodes(dim, h);
  const std::size_t n = grid.node_count();
  grid.row_start.reserve(n + 1);
  grid.row_start.push_back(0);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (keep(grid, i, j)) {
        if (grid.partner.size() >= cell_cap)
          throw CapExceededError("shell grid cell cap", cell_cap, grid.partner.size() + 1);
        grid.partner.push_back(static_cast<std::uint32_t>(j));
      }
    }
    grid.row_start.push_back(grid.partner.size());
  }
  return grid;
}

}  // namespace

double ShellMeasureGrid::total_weight() const {
  if (weights.empty()) return partner.empty() ? 0.0 : 1.0;
  return pairwise_sum(std::span<const double>(weights));
}

std::vector<double> ball_nodes(int dim, double h) {
  if (dim < 1) throw RangeError("dimension must be positive");
  if (!(h > 0.0 && h <= 0.5)) throw RangeError("grid spacing h must lie in (0, 1/2]");
  const auto half = static_cast<long>(std::ceil(1.0 / h));
  std::vector<double> out;
  std::vector<long> idx(static_cast<std::size_t>(dim), -half);
  std::vector<double> x(static_cast<std::size_t>(dim));
  while (true) {
    double r2 = 0;
    for (std::size_t a = 0; a < idx.size(); ++a) {
      x[a] = h * (static_cast<double>(idx[a]) + 0.5);
      r2 += x[a] * x[a];
    }
    if (r2 <= 1.0 && r2 >= h * h) out.insert(out.end(), x.begin(), x.end());
    std::size_t a = idx.size();
    while (a-- > 0) {
      if (++idx[a] < half) break;
      idx[a] = -half;
    }
    if (a == static_cast<std::size_t>(-1)) break;
  }
  return out;
}

ShellMeasureGrid build_shell_grid(int dim, double t, double eps, double h, std::size_t cell_cap) {
  if (dim != 2 && dim != 3) throw RangeError("shell grids are limited to d = 2 or 3, got " + std::to_string(dim));
  if (!(t >= -1.0 && t <= 1.0)) throw RangeError("t must lie in [-1, 1]");
  if (!(eps > 0.0 && eps <= 0.1)) throw RangeError("eps must lie in (0, 0.1]");
  if (!(h > 0.0 && h <= eps / 2)) throw PreconditionError("grid spacing h must satisfy h <= eps/2");
  std::vector<double> norms;
  auto grid = scan_pairs(dim, h, cell_cap, [&](const ShellMeasureGrid& g, std::size_t i, std::size_t j) {
    if (norms.empty()) {
      norms.resize(g.node_count());
      for (std::size_t k = 0; k < norms.size(); ++k) norms[k] = norm(g.node(k));
    }
    const double c = dot(g.node(i), g.node(j)) / (norms[i] * norms[j]);
    return std::abs(c - t) <= eps;
  });
  if (grid.partner.empty()) throw DegenerateInputError("shell grid is empty; refine h");
  grid.t = t;
  grid.eps = eps;
  return grid;
}

ShellMeasureGrid build_density_grid(int dim, double h,
                                    const std::function<double(std::span<const double>, std::span<const double>)>& density,
                                    std::size_t cell_cap) {
  std::vector<double> raw;
  auto grid = scan_pairs(dim, h, cell_cap, [&](const ShellMeasureGrid& g, std::size_t i, std::size_t j) {
    const double w = density(g.node(i), g.node(j));
    if (w < 0.0) throw RangeError("density must be non-negative");
    if (w == 0.0) return false;
    raw.push_back(w);
    return true;
  });
  if (raw.empty()) throw DegenerateInputError("density grid has no mass");
  const double total = pairwise_sum(std::span<const double>(raw));
  for (double& w : raw) w /= total;
  grid.weights = std::move(raw);
  grid.t = std::numeric_limits<double>::quiet_NaN();
  grid.eps = std::numeric_limits<double>::quiet_NaN();
  return grid;
}

std::complex<double> fourier_transform(const ShellMeasureGrid& grid, std::span<const double> xi, std::span<const double> eta) {
  const auto d = static_cast<std::size_t>(grid.dim);
  if (xi.size() != d || eta.size() != d) throw PreconditionError("frequency vectors must have the grid dimension");
  const double limit = 1.0 / (2.0 * grid.h);
  for (std::size_t a = 0; a < d; ++a) {
    if (std::abs(xi[a]) > limit || std::abs(eta[a]) > limit)
      throw RangeError("frequency component beyond the Nyquist limit 1/(2h) = " + std::to_string(limit));
  }
  const std::size_t n = grid.node_count();
  std::vector<std::complex<double>> phase_u(n), phase_v(n);
  const double two_pi = 2.0 * std::numbers::pi;
  for (std::size_t i = 0; i < n; ++i) {
    phase_u[i] = std::polar(1.0, -two_pi * dot(grid.node(i), xi));
    phase_v[i] = std::polar(1.0, -two_pi * dot(grid.node(i), eta));
  }
  const bool uniform = grid.weights.empty();
  const double uniform_weight = uniform ? 1.0 / static_cast<double>(grid.cell_count()) : 0.0;
  std::vector<std::complex<double>> rows(n);
  for (std::size_t i = 0; i < n; ++i) {
    std::complex<double> acc{0.0, 0.0};
    for (std::size_t c = grid.row_start[i]; c < grid.row_start[i + 1]; ++c)
      acc += (uniform ? uniform_weight : grid.weights[c]) * phase_v[grid.partner[c]];
    rows[i] = phase_u[i] * acc;
  }
  return pairwise_sum(std::span<const std::complex<double>>(rows));
}

double fourier_sample(const ShellMeasureGrid& grid, std::span<const double> xi, std::span<const double> eta) {
  return std::abs(fourier_transform(grid, xi, eta));
}

DecayFit decay_fit(const ShellMeasureGrid& grid, std::span<const double> ray, std::span<const double> lambdas) {
  const auto d = static_cast<std::size_t>(grid.dim);
  if (ray.size() != 2 * d) throw PreconditionError("ray must have 2d components");
  if (lambdas.size() < 4) throw DegenerateInputError("decay fit needs at least 4 frequencies");
  const double len = norm(ray);
  if (!(len > 0.0)) throw RangeError("ray must be non-zero");
  DecayFit fit;
  for (double c : ray) fit.ray.push_back(c / len);
  fit.lambdas.assign(lambdas.begin(), lambdas.end());
  std::vector<double> xi(d), eta(d);
  for (double lambda : lambdas) {
    if (!(lambda > 0.0)) throw RangeError("frequencies must be positive");
    for (std::size_t a = 0; a < d; ++a) {
      xi[a] = lambda * fit.ray[a];
      eta[a] = lambda * fit.ray[d + a];
    }
    fit.magnitudes.push_back(fourier_sample(grid, xi, eta));
  }
  const auto ll = fit_loglog(fit.lambdas, fit.magnitudes);
  fit.gamma_hat = -ll.slope;
  fit.residual = ll.residual_rms;
  return fit;
}

}  // namespace angleset
