#pragma once

// Quadrature probe of the Fourier decay of the measure on
//   {(u, v) in B x B : |u.v / (|u| |v|) - t| <= eps},
// B the unit ball of R^d, discretized on cell centers of spacing h.

#include <complex>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <span>
#include <vector>

namespace angleset {

/// Normalized point masses on pairs (u, v) of grid nodes. Cells are stored
/// row-wise by u (CSR); an empty `weights` means uniform mass.
struct ShellMeasureGrid {
  int dim = 0;
  double t = 0.0;
  double eps = 0.0;
  double h = 0.0;
  std::vector<double> nodes;  // dim coordinates per node, h <= |node| <= 1
  std::vector<std::size_t> row_start;
  std::vector<std::uint32_t> partner;  // v node of each cell
  std::vector<double> weights;

  std::size_t node_count() const { return nodes.size() / static_cast<std::size_t>(dim); }
  std::size_t cell_count() const { return partner.size(); }
  std::span<const double> node(std::size_t i) const {
    return {nodes.data() + i * static_cast<std::size_t>(dim), static_cast<std::size_t>(dim)};
  }
  double total_weight() const;
};

inline constexpr std::size_t kShellCellCap = 500'000'000;

/// Cell-center nodes h (i + 1/2) with h <= |x| <= 1.
std::vector<double> ball_nodes(int dim, double h);

ShellMeasureGrid build_shell_grid(int dim, double t, double eps, double h, std::size_t cell_cap = kShellCellCap);

/// General grid measure with density(u, v) >= 0 on ball_nodes x ball_nodes,
/// normalized to total mass 1. Zero-density pairs are dropped.
ShellMeasureGrid build_density_grid(int dim, double h,
                                    const std::function<double(std::span<const double>, std::span<const double>)>& density,
                                    std::size_t cell_cap = kShellCellCap);

/// |sum_cells w exp(-2 pi i (u.xi + v.eta))|. Each frequency coordinate must
/// stay within the grid's Nyquist limit 1/(2h).
double fourier_sample(const ShellMeasureGrid& grid, std::span<const double> xi, std::span<const double> eta);
std::complex<double> fourier_transform(const ShellMeasureGrid& grid, std::span<const double> xi, std::span<const double> eta);

struct DecayFit {
  std::vector<double> ray;  // unit vector in (xi, eta) space, length 2d
  std::vector<double> lambdas;
  std::vector<double> magnitudes;
  double gamma_hat = 0.0;  // minus the log-log slope
  double residual = 0.0;   // RMS log residual
};

/// Samples |mu^(lambda ray)| for each lambda and fits magnitude ~ lambda^-gamma.
DecayFit decay_fit(const ShellMeasureGrid& grid, std::span<const double> ray, std::span<const double> lambdas);

}  // namespace angleset
