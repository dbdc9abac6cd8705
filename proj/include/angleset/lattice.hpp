#pragma once

// Point configurations on the integer lattice: cubes {1..m}^d, centered
// sub-blocks, integer spheres {|k|^2 = r2}, and their uniform thickenings.

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace angleset {

using Coord = std::int64_t;
using LatticePoint = std::vector<Coord>;
using PointView = std::span<const Coord>;

/// Exact positive rational, kept in lowest terms.
struct Rational {
  std::int64_t num = 1;
  std::int64_t den = 1;

  static Rational make(std::int64_t num, std::int64_t den);
  static Rational parse(const std::string& text);  // "1/5", "3", ...
  double value() const { return static_cast<double>(num) / static_cast<double>(den); }
  std::string str() const;
  bool operator==(const Rational&) const = default;
};

/// A finite set of pairwise distinct points of Z^d.
///
/// Points are stored contiguously (row-major, d coordinates per point) in
/// insertion order. A lexicographically sorted index answers membership
/// queries in O(d log N).
class LatticePointSet {
 public:
  LatticePointSet(int dim, std::vector<Coord> flat_coords);
  static LatticePointSet from_points(int dim, const std::vector<LatticePoint>& points);

  int dim() const noexcept { return dim_; }
  std::size_t size() const noexcept { return order_.size(); }
  bool empty() const noexcept { return order_.empty(); }

  PointView operator[](std::size_t i) const {
    return {coords_.data() + i * static_cast<std::size_t>(dim_), static_cast<std::size_t>(dim_)};
  }
  LatticePoint point(std::size_t i) const;
  const std::vector<Coord>& coords() const noexcept { return coords_; }

  std::optional<std::size_t> index_of(PointView p) const;
  bool contains(PointView p) const { return index_of(p).has_value(); }

  /// Largest coordinate difference along any axis (0 for fewer than 2 points).
  Coord extent() const noexcept { return extent_; }

  bool operator==(const LatticePointSet& other) const {
    return dim_ == other.dim_ && coords_ == other.coords_;
  }

 private:
  int dim_;
  std::vector<Coord> coords_;
  std::vector<std::uint32_t> order_;
  Coord extent_ = 0;
};

/// {1..side}^d in lexicographic order.
LatticePointSet generate_grid(int dim, Coord side);

/// Centered sub-cube of side floor(fraction * m) of a full cube {1..m}^d.
LatticePointSet middle_block(const LatticePointSet& grid, Rational fraction);

/// All integer points with squared norm exactly r2, lexicographic order.
LatticePointSet sphere_lattice(int dim, std::int64_t r2);

struct GridLevel {
  int k;
  Coord side;           // 2^(2^k)
  std::uint64_t count;  // side^d = 2^(d 2^k)
  double radius;        // count^(-1/s)
};

struct NestedGridSchedule {
  int dim;
  double s;
  int first_index;
  std::vector<GridLevel> levels;
};

/// Finite prefix (`depth` levels starting at index K) of the nested grids
/// with n_k = 2^(d 2^k) points.
NestedGridSchedule nested_grid_schedule(int dim, double s, int first_index, int depth);

/// Uniform atomic discretization of the thickened measure: mass 1/N per
/// atom, ball radius N^(-1/s) after scaling coordinates by `scale`.
struct WeightedPointMeasure {
  LatticePointSet base;
  Rational scale;
  double s;
  double radius;
  double mass_per_atom;
  double min_separation;  // scaled; +inf for a single atom
  bool separated;         // min_separation >= radius

  std::size_t size() const { return base.size(); }
};

WeightedPointMeasure thicken(const LatticePointSet& points, double s, Rational scale);

/// Smallest squared distance between two distinct points (0 if N < 2).
std::int64_t min_squared_distance(const LatticePointSet& points);

// CSV: line 1 `dim,side_or_r2,kind`, line 2 the values, then one row of d
// integers per point.
void write_point_csv(std::ostream& out, const LatticePointSet& points, std::int64_t side_or_r2,
                     const std::string& kind);
struct PointCsv {
  LatticePointSet points;
  std::int64_t side_or_r2;
  std::string kind;
};
PointCsv read_point_csv(std::istream& in);

}  // namespace angleset
