#include "angleset/lattice.hpp"

#include <algorithm>
#include <cmath>
#include <istream>
#include <limits>
#include <numeric>
#include <ostream>
#include <sstream>

#include "angleset/errors.hpp"
#include "angleset/int128.hpp"

namespace angleset {

Rational Rational::make(std::int64_t num, std::int64_t den) {
  if (num <= 0 || den <= 0) throw RangeError("rational must be positive: " + std::to_string(num) + "/" + std::to_string(den));
  const auto g = std::gcd(num, den);
  return {num / g, den / g};
}

Rational Rational::parse(const std::string& text) {
  const auto slash = text.find('/');
  try {
    std::size_t used = 0;
    if (slash == std::string::npos) {
      const auto n = std::stoll(text, &used);
      if (used != text.size()) throw RangeError("");
      return make(n, 1);
    }
    const auto num_text = text.substr(0, slash), den_text = text.substr(slash + 1);
    const auto n = std::stoll(num_text, &used);
    if (used != num_text.size()) throw RangeError("");
    const auto d = std::stoll(den_text, &used);
    if (used != den_text.size()) throw RangeError("");
    return make(n, d);
  } catch (const std::logic_error&) {
    throw RangeError("invalid rational '" + text + "'");
  } catch (const RangeError&) {
    throw RangeError("invalid rational '" + text + "'");
  }
}

std::string Rational::str() const {
  return den == 1 ? std::to_string(num) : std::to_string(num) + "/" + std::to_string(den);
}

LatticePointSet::LatticePointSet(int dim, std::vector<Coord> flat_coords) : dim_(dim), coords_(std::move(flat_coords)) {
  if (dim < 2) throw RangeError("dimension must be >= 2, got " + std::to_string(dim));
  const auto d = static_cast<std::size_t>(dim);
  if (coords_.size() % d != 0) throw PreconditionError("coordinate count is not a multiple of the dimension");
  const std::size_t n = coords_.size() / d;
  if (n > std::numeric_limits<std::uint32_t>::max()) throw SizeError("too many points");

  order_.resize(n);
  std::iota(order_.begin(), order_.end(), 0u);
  auto less = [&](std::uint32_t a, std::uint32_t b) {
    return std::lexicographical_compare(coords_.begin() + a * d, coords_.begin() + (a + 1) * d,
                                        coords_.begin() + b * d, coords_.begin() + (b + 1) * d);
  };
  std::sort(order_.begin(), order_.end(), less);
  for (std::size_t i = 1; i < n; ++i) {
    if (!less(order_[i - 1], order_[i]))
      throw PreconditionError("point set contains duplicate points (index " + std::to_string(order_[i]) + ")");
  }

  for (std::size_t axis = 0; axis < d && n > 0; ++axis) {
    Coord lo = coords_[axis], hi = coords_[axis];
    for (std::size_t i = 1; i < n; ++i) {
      lo = std::min(lo, coords_[i * d + axis]);
      hi = std::max(hi, coords_[i * d + axis]);
    }
    const i128 span = static_cast<i128>(hi) - lo;
    if (span > std::numeric_limits<Coord>::max()) throw OverflowError("coordinate extent exceeds 64 bits");
    extent_ = std::max(extent_, static_cast<Coord>(span));
  }
}

LatticePointSet LatticePointSet::from_points(int dim, const std::vector<LatticePoint>& points) {
  std::vector<Coord> flat;
  flat.reserve(points.size() * static_cast<std::size_t>(std::max(dim, 0)));
  for (const auto& p : points) {
    if (static_cast<int>(p.size()) != dim)
      throw PreconditionError("point of dimension " + std::to_string(p.size()) + " in a set of dimension " +
                              std::to_string(dim));
    flat.insert(flat.end(), p.begin(), p.end());
  }
  return LatticePointSet(dim, std::move(flat));
}

LatticePoint LatticePointSet::point(std::size_t i) const {
  const auto v = (*this)[i];
  return {v.begin(), v.end()};
}

std::optional<std::size_t> LatticePointSet::index_of(PointView p) const {
  if (static_cast<int>(p.size()) != dim_) return std::nullopt;
  auto it = std::lower_bound(order_.begin(), order_.end(), p, [&](std::uint32_t idx, PointView key) {
    const auto v = (*this)[idx];
    return std::lexicographical_compare(v.begin(), v.end(), key.begin(), key.end());
  });
  if (it == order_.end()) return std::nullopt;
  const auto v = (*this)[*it];
  if (!std::equal(v.begin(), v.end(), p.begin())) return std::nullopt;
  return *it;
}

namespace {

std::uint64_t checked_power(Coord base, int exponent) {
  u128 out = 1;
  for (int i = 0; i < exponent; ++i) {
    out *= static_cast<u128>(base);
    if (out > std::numeric_limits<std::int64_t>::max())
      throw SizeError(std::to_string(base) + "^" + std::to_string(exponent) + " does not fit in 64 bits");
  }
  return static_cast<std::uint64_t>(out);
}

// Lexicographic enumeration of {lo..hi}^d.
LatticePointSet cube(int dim, Coord lo, Coord hi) {
  const auto count = checked_power(hi - lo + 1, dim);
  const auto d = static_cast<std::size_t>(dim);
  std::vector<Coord> flat;
  flat.reserve(count * d);
  std::vector<Coord> current(d, lo);
  for (std::uint64_t i = 0; i < count; ++i) {
    flat.insert(flat.end(), current.begin(), current.end());
    for (std::size_t axis = d; axis-- > 0;) {
      if (++current[axis] <= hi) break;
      current[axis] = lo;
    }
  }
  return LatticePointSet(dim, std::move(flat));
}

}  // namespace

LatticePointSet generate_grid(int dim, Coord side) {
  if (dim < 2) throw RangeError("dimension must be >= 2, got " + std::to_string(dim));
  if (side < 2) throw RangeError("grid side must be >= 2, got " + std::to_string(side));
  checked_power(side, dim);
  return cube(dim, 1, side);
}

LatticePointSet middle_block(const LatticePointSet& grid, Rational fraction) {
  if (fraction.num <= 0 || fraction.num > fraction.den)
    throw RangeError("block fraction must lie in (0, 1], got " + fraction.str());
  if (grid.empty()) throw DegenerateInputError("middle_block of an empty grid");
  Coord lo = grid.coords().front(), hi = lo;
  for (Coord c : grid.coords()) {
    lo = std::min(lo, c);
    hi = std::max(hi, c);
  }
  if (lo != 1 || grid.size() != checked_power(hi, grid.dim()))
    throw PreconditionError("middle_block expects a full cube {1..m}^d");
  const Coord m = hi;
  const Coord side = static_cast<Coord>(static_cast<i128>(fraction.num) * m / fraction.den);
  if (side < 1)
    throw DegenerateInputError("block of fraction " + fraction.str() + " in a side-" + std::to_string(m) +
                               " grid is empty");
  const Coord start = (m - side) / 2 + 1;
  return cube(grid.dim(), start, start + side - 1);
}

namespace {

void sphere_search(std::vector<Coord>& current, std::size_t axis, std::int64_t remaining, std::vector<Coord>& out) {
  const std::size_t d = current.size();
  if (axis + 1 == d) {
    const Coord r = isqrt(remaining);
    if (r * r != remaining) return;
    for (Coord x : {-r, r}) {
      current[axis] = x;
      out.insert(out.end(), current.begin(), current.end());
      if (r == 0) break;
    }
    return;
  }
  const Coord bound = isqrt(remaining);
  for (Coord x = -bound; x <= bound; ++x) {
    current[axis] = x;
    sphere_search(current, axis + 1, remaining - x * x, out);
  }
}

}  // namespace

LatticePointSet sphere_lattice(int dim, std::int64_t r2) {
  if (dim < 2) throw RangeError("dimension must be >= 2, got " + std::to_string(dim));
  if (r2 < 1) throw RangeError("squared radius must be >= 1, got " + std::to_string(r2));
  std::vector<Coord> current(static_cast<std::size_t>(dim), 0), flat;
  sphere_search(current, 0, r2, flat);
  return LatticePointSet(dim, std::move(flat));
}

NestedGridSchedule nested_grid_schedule(int dim, double s, int first_index, int depth) {
  if (dim < 2) throw RangeError("dimension must be >= 2, got " + std::to_string(dim));
  if (!(s > 0.0 && s < dim)) throw RangeError("s must lie in (0, d)");
  if (first_index < 0) throw RangeError("starting index K must be non-negative");
  if (depth < 1) throw RangeError("depth must be >= 1");
  NestedGridSchedule schedule{dim, s, first_index, {}};
  for (int k = first_index; k < first_index + depth; ++k) {
    if (k >= 6 || (static_cast<std::int64_t>(dim) << k) >= 64)
      throw SizeError("level k=" + std::to_string(k) + " needs 2^(" + std::to_string(dim) + "*2^" + std::to_string(k) +
                      ") points, beyond 64-bit capacity");
    const int bits = dim << k;
    const auto count = std::uint64_t{1} << bits;
    const auto side = Coord{1} << (1 << k);
    schedule.levels.push_back({k, side, count, std::pow(static_cast<double>(count), -1.0 / s)});
  }
  return schedule;
}

std::int64_t min_squared_distance(const LatticePointSet& points) {
  const std::size_t n = points.size();
  const auto d = static_cast<std::size_t>(points.dim());
  const auto& c = points.coords();
  i128 best = -1;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      i128 sq = 0;
      for (std::size_t a = 0; a < d; ++a) {
        const i128 diff = static_cast<i128>(c[i * d + a]) - c[j * d + a];
        sq += diff * diff;
      }
      if (best < 0 || sq < best) best = sq;
    }
  }
  if (best < 0) return 0;
  if (best > std::numeric_limits<std::int64_t>::max()) throw OverflowError("minimum distance exceeds 64 bits");
  return static_cast<std::int64_t>(best);
}

WeightedPointMeasure thicken(const LatticePointSet& points, double s, Rational scale) {
  if (!(s > 0.0 && s < points.dim()))
    throw RangeError("s must lie in (0, " + std::to_string(points.dim()) + "), got " + std::to_string(s));
  if (points.empty()) throw DegenerateInputError("cannot thicken an empty point set");
  for (Coord c : points.coords()) {
    const i128 scaled_num = static_cast<i128>(c) * scale.num;
    if (scaled_num < 0 || scaled_num > scale.den)
      throw RangeError("scaled coordinate " + std::to_string(c) + "*" + scale.str() + " lies outside [0,1]");
  }
  const auto n = static_cast<double>(points.size());
  const double radius = std::pow(n, -1.0 / s);
  double min_sep = std::numeric_limits<double>::infinity();
  if (points.size() >= 2) min_sep = std::sqrt(static_cast<double>(min_squared_distance(points))) * scale.value();
  return {points, scale, s, radius, 1.0 / n, min_sep, min_sep >= radius};
}

void write_point_csv(std::ostream& out, const LatticePointSet& points, std::int64_t side_or_r2, const std::string& kind) {
  out << "dim,side_or_r2,kind\n" << points.dim() << ',' << side_or_r2 << ',' << kind << '\n';
  for (std::size_t i = 0; i < points.size(); ++i) {
    const auto p = points[i];
    for (std::size_t a = 0; a < p.size(); ++a) out << (a ? "," : "") << p[a];
    out << '\n';
  }
}

PointCsv read_point_csv(std::istream& in) {
  std::string line;
  if (!std::getline(in, line) || line != "dim,side_or_r2,kind") throw PreconditionError("missing point CSV header");
  if (!std::getline(in, line)) throw PreconditionError("missing point CSV metadata row");
  std::istringstream meta(line);
  std::string dim_text, size_text, kind;
  std::getline(meta, dim_text, ',');
  std::getline(meta, size_text, ',');
  std::getline(meta, kind);
  const int dim = std::stoi(dim_text);
  const std::int64_t side_or_r2 = std::stoll(size_text);
  std::vector<Coord> flat;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    std::istringstream row(line);
    std::string cell;
    int count = 0;
    while (std::getline(row, cell, ',')) {
      flat.push_back(std::stoll(cell));
      ++count;
    }
    if (count != dim) throw PreconditionError("point row has " + std::to_string(count) + " columns, expected " + std::to_string(dim));
  }
  return {LatticePointSet(dim, std::move(flat)), side_or_r2, kind};
}

}  // namespace angleset
