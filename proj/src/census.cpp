#include "angleset/census.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <unordered_map>
#include <unordered_set>

#include "angleset/errors.hpp"
#include "angleset/parallel.hpp"

namespace angleset {

namespace {

// Dot products and squared norms of all rays fit in int64 when
// d * extent^2 < 2^62; otherwise the census runs in 128-bit arithmetic.
bool fits_small(const LatticePointSet& points) {
  const auto e = static_cast<u128>(points.extent());
  return e * e * static_cast<u128>(points.dim()) < (u128(1) << 62);
}

void check_exact_range(const LatticePointSet& points) {
  if (points.extent() > (Coord{1} << 31))
    throw OverflowError("coordinate extent " + std::to_string(points.extent()) + " too large for exact 128-bit census");
}

void check_cap(std::size_t n, std::size_t cap, const char* name) {
  if (n > cap) throw CapExceededError(name, cap, n);
}

// Rays from one vertex to every other point of the set.
template <class Int>
class RayTable {
 public:
  explicit RayTable(const LatticePointSet& points) : points_(points), d_(static_cast<std::size_t>(points.dim())) {
    rays_.reserve(points.size() * d_);
    norms_.reserve(points.size());
  }

  void build(std::size_t vertex) {
    rays_.clear();
    norms_.clear();
    const auto v = points_[vertex];
    for (std::size_t j = 0; j < points_.size(); ++j) {
      if (j == vertex) continue;
      const auto p = points_[j];
      Int norm = 0;
      for (std::size_t a = 0; a < d_; ++a) {
        const Int u = static_cast<Int>(p[a]) - static_cast<Int>(v[a]);
        rays_.push_back(u);
        norm += u * u;
      }
      norms_.push_back(norm);
    }
  }

  std::size_t size() const { return norms_.size(); }
  Int norm(std::size_t j) const { return norms_[j]; }
  Int dot(std::size_t j, std::size_t k) const {
    const Int* a = rays_.data() + j * d_;
    const Int* b = rays_.data() + k * d_;
    Int out = 0;
    for (std::size_t i = 0; i < d_; ++i) out += a[i] * b[i];
    return out;
  }
  AngleKey key(std::size_t j, std::size_t k) const {
    return make_angle_key(static_cast<i128>(dot(j, k)), static_cast<u128>(norms_[j]), static_cast<u128>(norms_[k]));
  }
  double cosine(std::size_t j, std::size_t k) const {
    const Int dp = dot(j, k);
    if (dp == 0) return 0.0;
    const long double denom = std::sqrt(static_cast<long double>(norms_[j]) * static_cast<long double>(norms_[k]));
    const long double c = static_cast<long double>(dp) / denom;
    return static_cast<double>(std::clamp<long double>(c, -1.0L, 1.0L));
  }

 private:
  const LatticePointSet& points_;
  std::size_t d_;
  std::vector<Int> rays_;
  std::vector<Int> norms_;
};

// Calls visit(table, j, k) for every pair j < k of rays at every vertex,
// with one RayTable per worker. Integer type chosen from the coordinate extent.
template <class Setup, class Visit>
void for_each_vertex(const LatticePointSet& points, unsigned workers, Setup&& setup, Visit&& visit) {
  check_exact_range(points);
  auto run = [&]<class Int>(Int) {
    std::vector<RayTable<Int>> tables;
    const unsigned w = std::max(1u, workers);
    tables.reserve(w);
    for (unsigned i = 0; i < w; ++i) tables.emplace_back(points);
    parallel_for(points.size(), w, [&](unsigned worker, std::size_t vertex) {
      auto& table = tables[worker];
      table.build(vertex);
      setup(worker, vertex);
      visit(worker, table);
    });
  };
  if (fits_small(points))
    run(std::int64_t{});
  else
    run(i128{});
}

}  // namespace

std::uint64_t configuration_count(std::size_t n) {
  if (n < 3) return 0;
  return static_cast<std::uint64_t>(n) * (n - 1) * (n - 2) / 2;
}

CensusReport brute_force_census(const LatticePointSet& points, const CensusOptions& options) {
  check_cap(points.size(), options.brute_force_cap, "brute-force census cap");
  const unsigned w = std::max(1u, options.workers);
  std::vector<std::unordered_map<AngleKey, std::uint64_t, AngleKeyHash>> local(w);
  for_each_vertex(
      points, w, [](unsigned, std::size_t) {},
      [&](unsigned worker, const auto& table) {
        auto& counts = local[worker];
        const std::size_t m = table.size();
        for (std::size_t j = 0; j < m; ++j)
          for (std::size_t k = j + 1; k < m; ++k) ++counts[table.key(j, k)];
      });
  CensusReport report;
  report.n_points = points.size();
  for (const auto& counts : local)
    for (const auto& [key, count] : counts) report.counts[key] += count;
  for (const auto& [key, count] : report.counts) report.total += count;
  return report;
}

std::uint64_t count_key(const LatticePointSet& points, const AngleKey& key, const CensusOptions& options) {
  check_cap(points.size(), options.vertex_cap, "vertex census cap");
  if (key.sign == 0) return count_right(points, options);
  const unsigned w = std::max(1u, options.workers);
  std::vector<std::uint64_t> local(w, 0);
  for_each_vertex(
      points, w, [](unsigned, std::size_t) {},
      [&](unsigned worker, const auto& table) {
        std::uint64_t hits = 0;
        const std::size_t m = table.size();
        for (std::size_t j = 0; j < m; ++j) {
          for (std::size_t k = j + 1; k < m; ++k) {
            const auto dp = table.dot(j, k);
            if ((dp > 0 ? 1 : dp < 0 ? -1 : 0) != key.sign) continue;
            // dot^2 * den == num * |u|^2 |v|^2, falling back to the reduced
            // key when a product leaves 128 bits.
            const u128 mag = abs_u128(static_cast<i128>(dp));
            u128 lhs, rhs, sq, norms;
            const bool overflow = __builtin_mul_overflow(mag, mag, &sq) ||
                                  __builtin_mul_overflow(static_cast<u128>(table.norm(j)),
                                                         static_cast<u128>(table.norm(k)), &norms) ||
                                  __builtin_mul_overflow(sq, key.den, &lhs) ||
                                  __builtin_mul_overflow(norms, key.num, &rhs);
            if (overflow ? table.key(j, k) == key : lhs == rhs) ++hits;
          }
        }
        local[worker] += hits;
      });
  std::uint64_t total = 0;
  for (auto c : local) total += c;
  return total;
}

std::uint64_t count_right(const LatticePointSet& points, const CensusOptions& options) {
  check_cap(points.size(), options.vertex_cap, "vertex census cap");
  const unsigned w = std::max(1u, options.workers);
  std::vector<std::uint64_t> local(w, 0);
  for_each_vertex(
      points, w, [](unsigned, std::size_t) {},
      [&](unsigned worker, const auto& table) {
        std::uint64_t hits = 0;
        const std::size_t m = table.size();
        for (std::size_t j = 0; j < m; ++j)
          for (std::size_t k = j + 1; k < m; ++k) hits += table.dot(j, k) == 0;
        local[worker] += hits;
      });
  std::uint64_t total = 0;
  for (auto c : local) total += c;
  return total;
}

namespace {

struct I128Hash {
  std::size_t operator()(i128 v) const noexcept {
    const auto u = static_cast<u128>(v);
    return std::hash<std::uint64_t>{}(static_cast<std::uint64_t>(u) ^ (static_cast<std::uint64_t>(u >> 64) * 0x9e3779b97f4a7c15ULL));
  }
};

}  // namespace

DistinctAngles distinct_angles(const LatticePointSet& points, const CensusOptions& options) {
  check_cap(points.size(), options.brute_force_cap, "brute-force census cap");
  const unsigned w = std::max(1u, options.workers);
  std::vector<std::unordered_set<AngleKey, AngleKeyHash>> keys(w);
  std::vector<std::unordered_set<i128, I128Hash>> dots(w);
  for_each_vertex(
      points, w, [](unsigned, std::size_t) {},
      [&](unsigned worker, const auto& table) {
        const std::size_t m = table.size();
        for (std::size_t j = 0; j < m; ++j) {
          for (std::size_t k = j + 1; k < m; ++k) {
            keys[worker].insert(table.key(j, k));
            dots[worker].insert(static_cast<i128>(table.dot(j, k)));
          }
        }
      });
  for (unsigned i = 1; i < w; ++i) {
    keys[0].insert(keys[i].begin(), keys[i].end());
    dots[0].insert(dots[i].begin(), dots[i].end());
  }
  return {keys[0].size(), dots[0].size()};
}

std::pair<AngleKey, std::uint64_t> max_repetition(const CensusReport& report) {
  if (report.counts.empty()) throw DegenerateInputError("max_repetition of an empty census");
  auto best = report.counts.begin();
  for (auto it = report.counts.begin(); it != report.counts.end(); ++it)
    if (it->second > best->second) best = it;
  return *best;
}

std::uint64_t SphereDecomposition::total_members() const {
  std::uint64_t total = 0;
  for (const auto& e : entries) total += e.members.size();
  return total;
}

namespace {

i128 squared_distance(PointView a, PointView b) {
  i128 out = 0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    const i128 diff = checked_sub(a[i], b[i]);
    out = checked_add(out, checked_mul(diff, diff));
  }
  return out;
}

}  // namespace

SphereDecomposition build_sphere_decomposition(const LatticePointSet& p, const LatticePointSet& q) {
  if (p.dim() != q.dim()) throw PreconditionError("P and Q have different dimensions");
  std::vector<std::size_t> q_in_p(q.size());
  for (std::size_t i = 0; i < q.size(); ++i) {
    const auto idx = p.index_of(q[i]);
    if (!idx) throw PreconditionError("Q is not a subset of P (point " + std::to_string(i) + " of Q)");
    q_in_p[i] = *idx;
  }
  SphereDecomposition out;
  out.p_size = p.size();
  out.q_size = q.size();
  std::vector<i128> dist(p.size());
  for (std::size_t c = 0; c < q.size(); ++c) {
    std::vector<i128> radii;
    for (std::size_t j = 0; j < q.size(); ++j)
      if (j != c) radii.push_back(squared_distance(q[c], q[j]));
    std::sort(radii.begin(), radii.end());
    radii.erase(std::unique(radii.begin(), radii.end()), radii.end());
    if (radii.empty()) continue;

    const std::size_t first = out.entries.size();
    for (i128 r2 : radii) {
      if (r2 > std::numeric_limits<std::int64_t>::max()) throw OverflowError("sphere radius exceeds 64 bits");
      out.entries.push_back({q_in_p[c], static_cast<std::int64_t>(r2), {}});
    }
    for (std::size_t j = 0; j < p.size(); ++j) {
      const i128 d2 = squared_distance(q[c], p[j]);
      const auto it = std::lower_bound(radii.begin(), radii.end(), d2);
      if (it != radii.end() && *it == d2) out.entries[first + static_cast<std::size_t>(it - radii.begin())].members.push_back(j);
    }
  }
  return out;
}

std::uint64_t antipodal_lower_bound(const SphereDecomposition& decomposition, const LatticePointSet& p, bool verify_thales) {
  const auto d = static_cast<std::size_t>(p.dim());
  std::uint64_t total = 0;
  LatticePoint mirror(d);
  for (const auto& entry : decomposition.entries) {
    const std::size_t m = entry.members.size();
    if (m < 3) continue;
    const auto center = p[entry.center];
    std::uint64_t antipodal_pairs = 0;
    for (std::size_t member : entry.members) {
      const auto x = p[member];
      bool representable = true;
      for (std::size_t a = 0; a < d; ++a) {
        const i128 reflected = checked_sub(checked_mul(i128{2}, i128{center[a]}), x[a]);
        representable = representable && reflected >= std::numeric_limits<Coord>::min() &&
                        reflected <= std::numeric_limits<Coord>::max();
        mirror[a] = static_cast<Coord>(reflected);
      }
      if (!representable) continue;
      const auto partner = p.index_of(mirror);
      if (!partner || *partner <= member) continue;
      ++antipodal_pairs;
      if (verify_thales) {
        for (std::size_t third : entry.members) {
          if (third == member || third == *partner) continue;
          if (!is_right(p[third], x, p[*partner]))
            throw std::logic_error("antipodal triple is not a right angle at point " + std::to_string(third));
        }
      }
    }
    total += antipodal_pairs * (m - 2);
  }
  return total;
}

double total_triple_mass(const WeightedPointMeasure& measure) {
  const auto n = static_cast<double>(measure.size());
  const double m = measure.mass_per_atom;
  return n * (n - 1) * (n - 1) * m * m * m;
}

double window_mass(const WeightedPointMeasure& measure, double lo, double hi, const CensusOptions& options) {
  const auto& points = measure.base;
  check_cap(points.size(), options.vertex_cap, "vertex census cap");
  if (points.size() < 2 || hi < lo) return 0.0;
  const double lo_g = lo - kWindowGuard, hi_g = hi + kWindowGuard;
  const bool right_only = lo_g <= 0.0 && hi_g >= 0.0;
  const unsigned w = std::max(1u, options.workers);
  std::vector<std::uint64_t> pairs(w, 0);
  for_each_vertex(
      points, w, [](unsigned, std::size_t) {},
      [&](unsigned worker, const auto& table) {
        std::uint64_t hits = 0;
        const std::size_t m = table.size();
        for (std::size_t j = 0; j < m; ++j) {
          for (std::size_t k = j + 1; k < m; ++k) {
            if (right_only && table.dot(j, k) == 0) {
              ++hits;
              continue;
            }
            const double c = table.cosine(j, k);
            hits += c >= lo_g && c <= hi_g;
          }
        }
        pairs[worker] += hits;
      });
  std::uint64_t ordered = 0;
  for (auto c : pairs) ordered += 2 * c;
  // x = y contributes cosine 1 once per ordered (z, x) with x != z.
  if (lo_g <= 1.0 && hi_g >= 1.0) ordered += static_cast<std::uint64_t>(points.size()) * (points.size() - 1);
  const double m = measure.mass_per_atom;
  return static_cast<double>(ordered) * m * m * m;
}

double windowed_mass(const WeightedPointMeasure& measure, double t, double eps, const CensusOptions& options) {
  if (!(eps > 0.0)) throw RangeError("window half-width eps must be positive");
  if (!(t >= -1.0 && t <= 1.0)) throw RangeError("window center t must lie in [-1, 1]");
  return window_mass(measure, t - eps, t + eps, options);
}

}  // namespace angleset
