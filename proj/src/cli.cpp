#include "angleset/cli.hpp"

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <set>
#include <sstream>

#include "CLI11.hpp"

#include "angleset/census.hpp"
#include "angleset/energy.hpp"
#include "angleset/io.hpp"
#include "angleset/lattice.hpp"
#include "angleset/oscillatory.hpp"
#include "angleset/scaling.hpp"
#include "angleset/spectrum.hpp"

namespace angleset::cli {

nlohmann::json RunConfig::to_json() const {
  nlohmann::json j = {{"command", command},
                      {"target", target},
                      {"dim", dim},
                      {"sides", sides},
                      {"r2_ladder", r2_ladder},
                      {"eps_policy", eps_policy},
                      {"t", t},
                      {"bins", bins},
                      {"first_index", first_index},
                      {"depth", depth},
                      {"h", h},
                      {"ray", ray},
                      {"lambdas", lambdas},
                      {"right", right},
                      {"distinct", distinct},
                      {"lower_bound", lower_bound},
                      {"brute_force_cap", brute_force_cap},
                      {"vertex_cap", vertex_cap},
                      {"adaptability_threshold", adaptability_threshold},
                      {"workers", workers}};
  auto opt = [&](const char* name, const auto& value) { j[name] = value ? nlohmann::json(*value) : nlohmann::json(nullptr); };
  opt("side", side);
  opt("r2", r2);
  opt("s", s);
  opt("eps", eps);
  opt("key", key);
  opt("scale", scale);
  opt("fraction", fraction);
  opt("slack", slack);
  return j;
}

namespace {

const std::map<std::string, std::set<std::string>> kTargets = {
    {"generate", {"grid", "block", "sphere", "schedule"}},
    {"census", {"grid", "sphere"}},
    {"energy", {"riesz", "shells", "cross"}},
    {"spectrum", {"nu", "profile", "sup", "angle-set"}},
    {"decay", {"shell"}},
    {"scaling", {"right-angles", "equitable", "repetition", "sphere-angles", "shells"}},
};

void add_shared(CLI::App* sub, RunConfig& c) {
  sub->add_option("--dim", c.dim, "ambient dimension d >= 2");
  sub->add_option("--workers", c.workers, "worker threads");
  sub->add_option("--out", c.out_dir, "output directory");
  sub->add_option("--brute-cap", c.brute_force_cap, "point cap for full censuses");
  sub->add_option("--vertex-cap", c.vertex_cap, "point cap for single-key counts");
}

void add_points(CLI::App* sub, RunConfig& c) {
  sub->add_option("--side", c.side, "grid side m (points {1..m}^d)");
  sub->add_option("--r2", c.r2, "squared sphere radius");
}

void validate(RunConfig& c) {
  const auto& allowed = kTargets.at(c.command);
  if (c.command == "decay" && c.target.empty()) c.target = "shell";
  if (!allowed.count(c.target)) {
    std::string list;
    for (const auto& t : allowed) list += (list.empty() ? "" : ", ") + t;
    throw UsageError(c.command + ": unknown target '" + c.target + "' (expected one of " + list + ")");
  }
  if (c.dim < 2) throw UsageError("--dim must be >= 2, got " + std::to_string(c.dim));
  if (c.workers < 1) throw UsageError("--workers must be >= 1");
  if (c.side && *c.side < 2) throw UsageError("--side must be >= 2, got " + std::to_string(*c.side));
  if (c.r2 && *c.r2 < 1) throw UsageError("--r2 must be >= 1, got " + std::to_string(*c.r2));
  if (c.s && !(*c.s > 0.0)) throw UsageError("--s must be positive");
  if (c.eps && !(*c.eps > 0.0)) throw UsageError("--eps must be positive");
  if (c.eps_policy != "fixed" && c.eps_policy != "n") throw UsageError("--eps-policy must be 'fixed' or 'n'");
  if (c.bins < 1) throw UsageError("--bins must be >= 1");
  if (!(c.t >= -1.0 && c.t <= 1.0)) throw UsageError("--t must lie in [-1, 1]");
  if (c.key) {
    try {
      AngleKey::parse(*c.key);
    } catch (const Error& e) {
      throw UsageError(std::string("--key: ") + e.what());
    }
  }
  try {
    if (c.fraction) Rational::parse(*c.fraction);
    if (c.scale) Rational::parse(*c.scale);
  } catch (const Error& e) {
    throw UsageError(std::string("--fraction/--scale: ") + e.what());
  }

  auto need = [&](bool ok, const std::string& flag) {
    if (!ok) throw UsageError(c.command + " " + c.target + " requires " + flag);
  };
  const auto& cmd = c.command;
  const auto& tgt = c.target;
  if (cmd == "generate" || cmd == "census") {
    if (tgt == "grid" || tgt == "block") need(c.side.has_value(), "--side");
    if (tgt == "sphere") need(c.r2.has_value(), "--r2");
    if (tgt == "schedule") need(c.s.has_value(), "--s");
    const int modes = int(c.right) + int(c.key.has_value()) + int(c.distinct) + int(c.lower_bound);
    if (modes > 1) throw UsageError("--right, --key, --distinct and --lower-bound are mutually exclusive");
    if (c.lower_bound && tgt != "grid") throw UsageError("--lower-bound applies to grid censuses only");
  } else if (cmd == "energy") {
    need(c.s.has_value() || tgt == "shells", "--s");
    if (tgt == "riesz") need(c.side.has_value() || c.r2.has_value(), "--side or --r2");
    else need(c.r2.has_value(), "--r2");
  } else if (cmd == "spectrum") {
    if (tgt == "angle-set") {
      need(c.side.has_value() || c.r2.has_value(), "--side or --r2");
      need(c.eps.has_value(), "--eps");
    } else {
      need(c.side.has_value(), "--side");
      need(c.s.has_value(), "--s");
      need(c.eps.has_value() || c.eps_policy == "n", "--eps or --eps-policy n");
    }
  } else if (cmd == "decay") {
    need(c.eps.has_value(), "--eps");
    need(c.ray.size() == static_cast<std::size_t>(2 * c.dim), "--ray with 2*dim components");
    need(c.lambdas.size() >= 4, "--lambdas with at least 4 values");
  } else if (cmd == "scaling") {
    if (tgt == "sphere-angles" || tgt == "shells")
      need(c.r2_ladder.size() >= 3, "--r2-ladder with at least 3 values");
    else
      need(c.sides.size() >= 3, "--sides with at least 3 values");
    if (tgt == "equitable" || tgt == "repetition") need(c.s.has_value(), "--s");
  }
}

}  // namespace

RunConfig parse_args(int argc, const char* const* argv) {
  RunConfig c;
  if (const char* env = std::getenv("ANGLESET_OUT"); env != nullptr && *env != '\0') c.out_dir = env;

  CLI::App app{"Exact angle counting, energies and scaling experiments on lattice point sets", "angleset"};
  app.require_subcommand(1);
  app.set_help_flag("--help", "print help");

  auto* generate = app.add_subcommand("generate", "write a point set or the nested-grid schedule");
  generate->add_option("target", c.target, "grid | block | sphere | schedule")->required();
  add_shared(generate, c);
  add_points(generate, c);
  generate->add_option("--fraction", c.fraction, "middle-block fraction (rational)");
  generate->add_option("--s", c.s, "dimension parameter s");
  generate->add_option("--K", c.first_index, "schedule starting index");
  generate->add_option("--depth", c.depth, "schedule levels");

  auto* census = app.add_subcommand("census", "count angles over a grid or sphere");
  census->add_option("target", c.target, "grid | sphere")->required();
  add_shared(census, c);
  add_points(census, c);
  census->add_flag("--right", c.right, "count right angles only");
  census->add_option("--key", c.key, "count one angle key, e.g. +:1/2");
  census->add_flag("--distinct", c.distinct, "distinct keys and dot products");
  census->add_flag("--lower-bound", c.lower_bound, "antipodal right-angle lower bound");
  census->add_option("--fraction", c.fraction, "middle-block fraction for --lower-bound");

  auto* energy = app.add_subcommand("energy", "Riesz energy, shell counts, cross term");
  energy->add_option("target", c.target, "riesz | shells | cross")->required();
  add_shared(energy, c);
  add_points(energy, c);
  energy->add_option("--s", c.s, "energy exponent");
  energy->add_option("--scale", c.scale, "coordinate scale (rational), default 1/side or 1");
  energy->add_option("--threshold", c.adaptability_threshold, "adaptability energy threshold");

  auto* spectrum = app.add_subcommand("spectrum", "angle distribution functional");
  spectrum->add_option("target", c.target, "nu | profile | sup | angle-set")->required();
  add_shared(spectrum, c);
  add_points(spectrum, c);
  spectrum->add_option("--s", c.s, "thickening exponent");
  spectrum->add_option("--eps", c.eps, "window half-width");
  spectrum->add_option("--eps-policy", c.eps_policy, "fixed | n (eps = n^(-1/s))");
  spectrum->add_option("--t", c.t, "cosine window center");
  spectrum->add_option("--bins", c.bins, "profile bins");

  auto* decay = app.add_subcommand("decay", "Fourier decay of the eps-shell measure");
  decay->add_option("target", c.target, "shell");
  add_shared(decay, c);
  decay->add_option("--t", c.t, "cosine t");
  decay->add_option("--eps", c.eps, "shell half-width");
  decay->add_option("--h", c.h, "grid spacing");
  decay->add_option("--ray", c.ray, "frequency direction (2d components)")->delimiter(',');
  decay->add_option("--lambdas", c.lambdas, "frequency magnitudes")->delimiter(',');

  auto* scaling = app.add_subcommand("scaling", "size-ladder experiments with exponent fits");
  scaling->add_option("target", c.target, "right-angles | equitable | repetition | sphere-angles | shells")->required();
  add_shared(scaling, c);
  scaling->add_option("--sides", c.sides, "grid sides")->delimiter(',');
  scaling->add_option("--r2-ladder", c.r2_ladder, "squared radii")->delimiter(',');
  scaling->add_option("--s", c.s, "dimension parameter s");
  scaling->add_option("--slack", c.slack, "exponent slack");
  scaling->add_option("--key", c.key, "right-angles: count this key instead (no verdict)");
  scaling->add_option("--fraction", c.fraction, "middle-block fraction for the antipodal cross-check");
  scaling->add_option("--threshold", c.adaptability_threshold, "adaptability energy threshold");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    throw UsageError(app.help());
  } catch (const CLI::CallForAllHelp&) {
    throw UsageError(app.help());
  } catch (const CLI::ParseError& e) {
    throw UsageError(e.what());
  }
  for (auto* sub : app.get_subcommands()) c.command = sub->get_name();
  validate(c);
  return c;
}

RunConfig parse_args(const std::vector<std::string>& args) {
  std::vector<const char*> argv{"angleset"};
  for (const auto& a : args) argv.push_back(a.c_str());
  return parse_args(static_cast<int>(argv.size()), argv.data());
}

namespace {

class Output {
 public:
  explicit Output(const RunConfig& c) : config_(c), dir_(c.out_dir) {
    std::error_code ec;
    std::filesystem::create_directories(dir_, ec);
    if (ec) throw Error("cannot create output directory " + dir_.string() + ": " + ec.message());
  }

  template <class Writer>
  void csv(const std::string& name, Writer&& write) {
    std::ostringstream buf;
    write(buf);
    put(name + ".csv", buf.str());
  }

  void json(const std::string& name, nlohmann::json body) {
    body["config"] = config_.to_json();
    put(name + ".json", body.dump(2) + "\n");
  }

 private:
  void put(const std::string& file, const std::string& text) {
    const auto path = dir_ / file;
    std::ofstream out(path, std::ios::binary);
    if (!out || !(out << text) || !out.flush()) throw Error("cannot write " + path.string());
    std::cout << path.string() << '\n';
  }

  const RunConfig& config_;
  std::filesystem::path dir_;
};

CensusOptions census_options(const RunConfig& c) {
  return {c.brute_force_cap, c.vertex_cap, c.workers};
}

Rational block_fraction(const RunConfig& c) {
  return Rational::parse(c.fraction.value_or(c.command == "scaling" ? "1/2" : "1/5"));
}

LatticePointSet source_points(const RunConfig& c) {
  if (c.side) return generate_grid(c.dim, *c.side);
  return sphere_lattice(c.dim, *c.r2);
}

int run_generate(const RunConfig& c, Output& out) {
  if (c.target == "schedule") {
    const auto sched = nested_grid_schedule(c.dim, *c.s, c.first_index, c.depth);
    nlohmann::json levels = nlohmann::json::array();
    for (const auto& l : sched.levels)
      levels.push_back({{"k", l.k}, {"side", l.side}, {"n", l.count}, {"radius", l.radius}});
    out.json("schedule", {{"dim", sched.dim}, {"s", sched.s}, {"K", sched.first_index}, {"levels", levels}});
    return 0;
  }
  if (c.target == "sphere") {
    const auto pts = sphere_lattice(c.dim, *c.r2);
    out.csv("points", [&](std::ostream& o) { write_point_csv(o, pts, *c.r2, "sphere"); });
    return 0;
  }
  const auto grid = generate_grid(c.dim, *c.side);
  if (c.target == "grid") {
    out.csv("points", [&](std::ostream& o) { write_point_csv(o, grid, *c.side, "grid"); });
  } else {
    const auto block = middle_block(grid, block_fraction(c));
    out.csv("points", [&](std::ostream& o) { write_point_csv(o, block, *c.side, "block"); });
  }
  return 0;
}

int run_census(const RunConfig& c, Output& out) {
  const auto pts = source_points(c);
  const auto opts = census_options(c);
  const std::string name = "census_" + c.target;
  if (c.right || c.key) {
    const auto key = c.key ? AngleKey::parse(*c.key) : right_angle_key();
    const auto count = c.right ? count_right(pts, opts) : count_key(pts, key, opts);
    out.json(name, {{"n_points", pts.size()}, {"key", key.str()}, {"count", count}});
  } else if (c.distinct) {
    const auto d = distinct_angles(pts, opts);
    out.json(name, {{"n_points", pts.size()}, {"distinct_keys", d.keys}, {"distinct_dot_products", d.dot_products}});
  } else if (c.lower_bound) {
    const auto block = middle_block(pts, block_fraction(c));
    const auto spheres = build_sphere_decomposition(pts, block);
    const auto bound = antipodal_lower_bound(spheres, pts);
    const auto exact = count_right(pts, opts);
    out.json(name, {{"n_points", pts.size()},
                    {"block_points", block.size()},
                    {"spheres", spheres.entries.size()},
                    {"sum_m_sigma", spheres.total_members()},
                    {"antipodal_lower_bound", bound},
                    {"count_right", exact}});
  } else {
    const auto report = brute_force_census(pts, opts);
    out.csv(name, [&](std::ostream& o) { write_census_csv(o, report); });
    out.json(name, census_summary_json(report));
  }
  return 0;
}

int run_energy(const RunConfig& c, Output& out) {
  if (c.target == "riesz") {
    const auto pts = source_points(c);
    const Rational scale = c.scale ? Rational::parse(*c.scale) : c.side ? Rational::make(1, *c.side) : Rational{};
    EnergyOptions eo;
    eo.adaptability_threshold = c.adaptability_threshold;
    eo.workers = c.workers;
    out.json("energy", energy_json(riesz_energy(pts, *c.s, scale, eo)));
    return 0;
  }
  const auto sphere = sphere_lattice(c.dim, *c.r2);
  if (c.target == "shells") {
    const auto report = shell_counts(sphere, *c.r2);
    out.csv("shells", [&](std::ostream& o) { write_shell_csv(o, report); });
    out.json("shells", {{"r2", report.r2}, {"points", sphere.size()}, {"max_ratio", report.max_ratio},
                        {"argmax_j", report.argmax_j}, {"argmax_k", report.argmax_k}});
    return 0;
  }
  out.json("cross_term", {{"r2", *c.r2}, {"s", *c.s}, {"points", sphere.size()}, {"value", cross_term(sphere, *c.r2, *c.s, c.workers)}});
  return 0;
}

int run_spectrum(const RunConfig& c, Output& out) {
  const auto opts = census_options(c);
  if (c.target == "angle-set") {
    out.json("angle_set", angle_set_json(angle_set_estimate(source_points(c), *c.eps, opts)));
    return 0;
  }
  const auto grid = generate_grid(c.dim, *c.side);
  const auto measure = thicken(grid, *c.s, Rational::make(1, *c.side));
  const double eps = c.eps_policy == "n" ? measure.radius : *c.eps;
  if (c.target == "nu") {
    out.json("nu", {{"t", c.t}, {"eps", eps}, {"nu", nu_epsilon(measure, c.t, eps, opts)}});
  } else if (c.target == "profile") {
    const auto hist = nu_profile(measure, eps, c.bins, opts);
    out.csv("profile", [&](std::ostream& o) { write_histogram_csv(o, hist); });
    out.json("profile", {{"eps", eps}, {"n", hist.n}, {"total_mass_check", hist.total_mass_check}});
  } else {
    const auto [t, nu] = equitable_sup(measure, eps, opts);
    out.json("sup", {{"eps", eps}, {"t_max", t}, {"nu_max", nu}});
  }
  return 0;
}

int run_decay(const RunConfig& c, Output& out) {
  const auto grid = build_shell_grid(c.dim, c.t, *c.eps, c.h);
  const auto fit = decay_fit(grid, c.ray, c.lambdas);
  out.json("decay", decay_json(fit, grid));
  return 0;
}

int run_scaling(const RunConfig& c, Output& out) {
  ExperimentOptions eo;
  eo.census = census_options(c);
  eo.slack = c.slack;
  eo.block_fraction = block_fraction(c);
  eo.adaptability_threshold = c.adaptability_threshold;
  if (c.key) eo.key = AngleKey::parse(*c.key);
  ScalingReport report;
  if (c.target == "right-angles")
    report = run_right_angle_scaling(c.dim, c.sides, eo);
  else if (c.target == "equitable")
    report = run_equitable_violation(c.dim, *c.s, c.sides, eo);
  else if (c.target == "repetition")
    report = run_repetition_bound(c.dim, *c.s, c.sides, eo);
  else if (c.target == "sphere-angles")
    report = run_sphere_angle_bound(c.dim, c.r2_ladder, eo);
  else
    report = run_shell_bound(c.dim, c.r2_ladder, eo);
  out.csv(report.name, [&](std::ostream& o) { write_scaling_csv(o, report); });
  out.json(report.name, scaling_json(report));
  std::cerr << report.name << ": slope " << format_double(report.fit.slope) << (report.pass ? " PASS" : " FAIL") << '\n';
  return report.pass ? 0 : 2;
}

}  // namespace

int dispatch(const RunConfig& config) {
  try {
    Output out(config);
    const auto& cmd = config.command;
    if (cmd == "generate") return run_generate(config, out);
    if (cmd == "census") return run_census(config, out);
    if (cmd == "energy") return run_energy(config, out);
    if (cmd == "spectrum") return run_spectrum(config, out);
    if (cmd == "decay") return run_decay(config, out);
    if (cmd == "scaling") return run_scaling(config, out);
    throw UsageError("unknown command '" + cmd + "'");
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
}

}  // namespace angleset::cli
