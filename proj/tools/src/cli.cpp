#include "abelcycle/cli.hpp"

#include <CLI11.hpp>
#include <charconv>
#include <cmath>
#include <filesystem>
#include <numbers>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "abelcycle/abelian.hpp"
#include "abelcycle/dynamics.hpp"
#include "abelcycle/error.hpp"
#include "abelcycle/hamiltonian.hpp"
#include "abelcycle/verify.hpp"
#include "output.hpp"

namespace abelcycle::cli {

namespace {

using Json = nlohmann::ordered_json;

/// Thrown for argument combinations CLI11 cannot express.
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Common {
  std::string format = "csv";
  std::string out;
  double tol_quad = AbelianOptions{}.rel_tol;
  double tol_ode = ode::IntegratorOptions{}.rtol;
};

struct Config {
  Common common;
  int n = 0;
  int grid = 200;
  double eps = 0.1;
  std::string c_text;
  std::pair<double, double> bracket{0.1, 0.9};
  std::pair<double, double> start{0.1, 0.0};
  double span = 0.0;
  double sample = 0.01;
  std::string levels_text;
  int portrait_samples = 400;
  int n_min = 1;
  int n_max = 10;
  int verify_grid = 64;
  int random_samples = 1000;
  std::uint64_t seed = verify::VerifyOptions{}.seed;
  bool skip_area = false;
};

/// Routes data to --out or stdout and diagnostics to whichever stream is free.
class Sink {
 public:
  Sink(const Common& c, std::ostream& out, std::ostream& err)
      : path_(c.out), out_(out), log_(c.out.empty() ? err : out) {}

  std::ostream& log() { return log_; }
  bool to_file() const { return !path_.empty(); }
  const std::string& path() const { return path_; }

  void emit(const std::string& payload) {
    if (path_.empty()) {
      out_ << payload;
      out_.flush();
    } else {
      write_atomic(path_, payload);
      log_ << "wrote " << path_ << '\n';
    }
  }

 private:
  std::string path_;
  std::ostream& out_;
  std::ostream& log_;
};

AbelianOptions quad_options(const Common& c) {
  AbelianOptions o;
  o.rel_tol = c.tol_quad;
  return o;
}

ode::IntegratorOptions ode_options(const Common& c) {
  ode::IntegratorOptions o;
  o.rtol = c.tol_ode;
  o.atol = c.tol_ode * 1e-2;
  return o;
}

void print_header(std::ostream& log, const std::string& command, const Json& settings) {
  log << "# abelcycle " << command << '\n';
  for (const auto& [key, value] : settings.items()) log << "#   " << key << " = " << value.dump() << '\n';
}

double parse_speed(const std::string& text) {
  const auto c = parse_rational(text);
  if (!c || !(*c > 0.0)) throw UsageError("--c must be a positive number or fraction a/b, got '" + text + "'");
  return *c;
}

const char* kind_name(FixedPointKind k) { return k == FixedPointKind::Saddle ? "saddle" : "center"; }

std::string verdict(bool ok) { return ok ? "PASS" : "FAIL"; }

// ---------------------------------------------------------------- curve

int cmd_curve(const Config& cfg, Sink& sink) {
  const ModelParams m(cfg.n);
  const AbelianOptions q = quad_options(cfg.common);
  Json settings;
  settings["n"] = cfg.n;
  settings["grid"] = cfg.grid;
  settings["h_range"] = Json::array({annulus_grid(m, 2).front(), annulus_grid(m, 2).back()});
  settings["tol_quad"] = q.rel_tol;
  settings["gauss_order"] = q.order;
  print_header(sink.log(), "curve", settings);

  const auto rows = c0_curve(m, cfg.grid, q);
  const EndpointLimits lim = extrapolated_endpoint_limits(m, q);
  const double want_p1 = ratio_upper_bound(cfg.n);
  const double want_zero = ratio_lower_bound(cfg.n);
  const double endpoint_tol = 1e-3;
  const bool p1_ok = std::abs(lim.ratio_at_p1 - want_p1) <= endpoint_tol;
  const bool zero_ok = std::abs(lim.ratio_at_zero - want_zero) <= endpoint_tol;

  bool monotone = true;
  bool bounded = true;
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (i > 0 && !(rows[i].ratio < rows[i - 1].ratio && rows[i].c0 > rows[i - 1].c0)) monotone = false;
    if (rows[i].ratio < want_zero || rows[i].ratio > want_p1) bounded = false;
  }

  if (cfg.common.format == "json") {
    Json j;
    j["command"] = "curve";
    j["settings"] = settings;
    Json arr = Json::array();
    for (const auto& r : rows)
      arr.push_back({{"h", r.h}, {"A0", r.A0}, {"An", r.An}, {"ratio", r.ratio}, {"c0", r.c0}, {"err", r.err}});
    j["rows"] = std::move(arr);
    j["checks"] = {{"ratio_at_p1", lim.ratio_at_p1},
                   {"expected_ratio_at_p1", want_p1},
                   {"ratio_at_zero", lim.ratio_at_zero},
                   {"expected_ratio_at_zero", want_zero},
                   {"endpoint_tolerance", endpoint_tol},
                   {"monotone", monotone},
                   {"within_bounds", bounded}};
    sink.emit(j.dump(2) + '\n');
  } else {
    std::string csv = "h,A0,An,ratio,c0,err\n";
    for (const auto& r : rows) {
      const double v[] = {r.h, r.A0, r.An, r.ratio, r.c0, r.err};
      csv += csv_row(v);
    }
    sink.emit(csv);
  }

  auto& log = sink.log();
  log << verdict(p1_ok) << " ratio -> n+1 at p1: " << fmt(lim.ratio_at_p1) << " (expected " << fmt(want_p1)
      << ")\n";
  log << verdict(zero_ok) << " ratio at h -> 0: " << fmt(lim.ratio_at_zero) << " (expected " << fmt(want_zero)
      << ")\n";
  log << verdict(monotone) << " ratio strictly decreasing and c0 strictly increasing over " << rows.size()
      << " points\n";
  log << verdict(bounded) << " ratio within (" << fmt(want_zero) << ", " << fmt(want_p1) << ")\n";
  return p1_ok && zero_ok && monotone && bounded ? kOk : kCheckFailed;
}

// ---------------------------------------------------------------- cycle

int cmd_cycle(const Config& cfg, Sink& sink) {
  if (!(cfg.eps > 0.0)) throw UsageError("cycle needs --eps > 0");
  if (!(cfg.bracket.first < cfg.bracket.second)) throw UsageError("--bracket needs lo < hi");
  const ModelParams m(cfg.n);
  const PerturbedParams p(m, cfg.eps, parse_speed(cfg.c_text));
  LimitCycleOptions opt;
  opt.return_map.ode = ode_options(cfg.common);

  Json settings;
  settings["n"] = cfg.n;
  settings["epsilon"] = p.epsilon;
  settings["c"] = p.c;
  settings["bracket"] = Json::array({cfg.bracket.first, cfg.bracket.second});
  settings["tol_ode"] = opt.return_map.ode.rtol;
  settings["tol_quad"] = cfg.common.tol_quad;
  settings["fixed_point_tol"] = opt.fixed_point_tol;
  settings["return_horizon"] = opt.return_map.horizon;
  print_header(sink.log(), "cycle", settings);
  if (p.epsilon_warning())
    sink.log() << "warning: epsilon = " << fmt(p.epsilon) << " is outside the small-perturbation regime\n";

  LimitCycleReport r;
  try {
    r = find_limit_cycle(p, cfg.bracket, opt);
  } catch (const Error& e) {
    if (e.code() != Errc::NoFixedPointInBracket && e.code() != Errc::UnboundedOrbit) throw;
    sink.log() << "no cycle: " << e.what() << '\n';
    return kNumerical;
  }

  Json predicted = nullptr;
  Json delta = nullptr;
  try {
    const double h_pred = level_for_speed(m, p.c, quad_options(cfg.common));
    predicted = h_pred;
    delta = std::abs(r.energy_estimate_h - h_pred);
  } catch (const Error& e) {
    if (e.code() != Errc::NoLevelForSpeed) throw;
  }
  const bool stable = std::abs(r.stability_multiplier) < 1.0;

  if (cfg.common.format == "csv") {
    std::string csv = "u_star,h_estimate,stability_multiplier,period,displacement_residual,predicted_h,agreement_delta\n";
    const double v[] = {r.section_fixed_point_u,
                        r.energy_estimate_h,
                        r.stability_multiplier,
                        r.period,
                        r.displacement_residual,
                        predicted.is_null() ? std::nan("") : predicted.get<double>(),
                        delta.is_null() ? std::nan("") : delta.get<double>()};
    csv += csv_row(v);
    sink.emit(csv);
  } else {
    Json j;
    j["command"] = "cycle";
    j["settings"] = settings;
    j["u_star"] = r.section_fixed_point_u;
    j["h_estimate"] = r.energy_estimate_h;
    j["stability_multiplier"] = r.stability_multiplier;
    j["stable"] = stable;
    j["period"] = r.period;
    j["displacement_residual"] = r.displacement_residual;
    j["converged"] = r.converged;
    j["predicted_h"] = predicted;
    j["agreement_delta"] = delta;
    j["epsilon_warning"] = p.epsilon_warning();
    sink.emit(j.dump(2) + '\n');
  }
  sink.log() << "u* = " << fmt(r.section_fixed_point_u) << ", multiplier = " << fmt(r.stability_multiplier)
             << (stable ? " (stable)" : " (unstable)") << '\n';
  return r.converged ? kOk : kNumerical;
}

// ---------------------------------------------------------------- simulate

int cmd_simulate(const Config& cfg, Sink& sink) {
  if (!sink.to_file()) throw UsageError("simulate needs --out (a crossings sidecar is written next to it)");
  if (!(cfg.span > 0.0)) throw UsageError("--span must be positive");
  if (!(cfg.sample > 0.0)) throw UsageError("--sample must be positive");
  const ModelParams m(cfg.n);
  const PerturbedParams p(m, cfg.eps, parse_speed(cfg.c_text));
  IntegrateOptions opt;
  opt.ode = ode_options(cfg.common);
  opt.sample_interval = cfg.sample;

  Json settings;
  settings["n"] = cfg.n;
  settings["epsilon"] = p.epsilon;
  settings["c"] = p.c;
  settings["start"] = Json::array({cfg.start.first, cfg.start.second});
  settings["span"] = cfg.span;
  settings["sample_interval"] = cfg.sample;
  settings["tol_ode"] = opt.ode.rtol;
  print_header(sink.log(), "simulate", settings);
  if (p.epsilon_warning())
    sink.log() << "warning: epsilon = " << fmt(p.epsilon) << " is outside the small-perturbation regime\n";

  const Trajectory t = integrate(p, {cfg.start.first, cfg.start.second}, cfg.span, opt);

  std::string sidecar_path = sink.path();
  if (cfg.common.format == "json") {
    Json j;
    j["command"] = "simulate";
    j["settings"] = settings;
    Json states = Json::array();
    for (const auto& s : t.states) states.push_back(Json::array({s.eta, s.u, s.y}));
    Json crossings = Json::array();
    for (const auto& c : t.crossings) crossings.push_back({{"eta", c.eta}, {"u", c.u}, {"y_residual", c.y_residual}});
    j["states"] = std::move(states);
    j["crossings"] = std::move(crossings);
    j["steps_accepted"] = t.step_stats.accepted;
    j["steps_rejected"] = t.step_stats.rejected;
    sink.emit(j.dump(2) + '\n');
  } else {
    std::string csv = "eta,u,y\n";
    for (const auto& s : t.states) {
      const double v[] = {s.eta, s.u, s.y};
      csv += csv_row(v);
    }
    sink.emit(csv);
    std::string cross = "eta,u,y_residual\n";
    for (const auto& c : t.crossings) {
      const double v[] = {c.eta, c.u, c.y_residual};
      cross += csv_row(v);
    }
    sidecar_path += ".crossings.csv";
    write_atomic(sidecar_path, cross);
    sink.log() << "wrote " << sidecar_path << '\n';
  }
  sink.log() << t.states.size() << " samples, " << t.crossings.size() << " section crossings";
  if (!t.crossings.empty()) sink.log() << ", last u = " << fmt(t.crossings.back().u);
  sink.log() << '\n';
  return kOk;
}

// ---------------------------------------------------------------- verify

int cmd_verify(const Config& cfg, Sink& sink) {
  if (cfg.n_min < 1 || cfg.n_max < cfg.n_min)
    throw UsageError("malformed n range: need 1 <= --n-min <= --n-max");
  verify::VerifyOptions opt;
  opt.n_min = cfg.n_min;
  opt.n_max = cfg.n_max;
  opt.grid = cfg.verify_grid;
  opt.random_samples = cfg.random_samples;
  opt.seed = cfg.seed;
  opt.quadrature = quad_options(cfg.common);
  opt.ode = ode_options(cfg.common);
  opt.include_area_check = !cfg.skip_area;

  Json settings;
  settings["n_min"] = opt.n_min;
  settings["n_max"] = opt.n_max;
  settings["grid"] = opt.grid;
  settings["random_samples"] = opt.random_samples;
  settings["seed"] = opt.seed;
  settings["tol_quad"] = opt.quadrature.rel_tol;
  settings["tol_ode"] = opt.ode.rtol;
  settings["area_check"] = opt.include_area_check;
  print_header(sink.log(), "verify", settings);

  const auto results = verify::run_all(opt);
  bool all = true;
  for (const auto& r : results) all = all && r.passed;

  if (cfg.common.format == "json") {
    Json j;
    j["command"] = "verify";
    j["settings"] = settings;
    Json props = Json::array();
    for (const auto& r : results)
      props.push_back({{"name", r.name},
                       {"passed", r.passed},
                       {"worst", r.worst},
                       {"tolerance", r.tolerance},
                       {"detail", r.detail}});
    j["properties"] = std::move(props);
    j["all_passed"] = all;
    sink.emit(j.dump(2) + '\n');
  } else if (sink.to_file()) {
    // Without --out the summary table below already carries the results.
    std::string csv = "property,passed,worst,tolerance,detail\n";
    for (const auto& r : results) {
      csv += r.name + ',' + (r.passed ? "1" : "0") + ',' + fmt(r.worst) + ',' + fmt(r.tolerance) + ",\"" +
             r.detail + "\"\n";
    }
    sink.emit(csv);
  }
  for (const auto& r : results) {
    sink.log() << verdict(r.passed) << ' ' << r.name << " worst=" << fmt(r.worst) << " tol=" << fmt(r.tolerance);
    if (!r.detail.empty()) sink.log() << "  [" << r.detail << ']';
    sink.log() << '\n';
  }
  sink.log() << (all ? "all properties passed" : "some properties FAILED") << '\n';
  return all ? kOk : kCheckFailed;
}

// ---------------------------------------------------------------- portrait

struct CurvePoints {
  std::string kind;
  double h;
  std::vector<PhasePoint> points;
};

/// Closed polyline of the level set H = h on the right of the saddle: upper
/// branch left to right, then lower branch back. sin^2 spacing clusters
/// points at the turning points where y has square-root behaviour.
std::vector<PhasePoint> level_polyline(const ModelParams& m, double lo, double hi, double h, int samples) {
  std::vector<PhasePoint> pts;
  pts.reserve(2 * static_cast<std::size_t>(samples));
  const auto y_at = [&](double u) { return std::sqrt(std::max(0.0, 2.0 * (h - potential(m, u)))); };
  for (int j = 0; j < samples; ++j) {
    const double s = std::sin(0.5 * std::numbers::pi * j / (samples - 1));
    const double u = lo + (hi - lo) * s * s;
    pts.push_back({u, y_at(u)});
  }
  for (int j = samples - 2; j > 0; --j) pts.push_back({pts[j].u, -pts[j].y});
  return pts;
}

std::vector<double> parse_levels(const std::string& text) {
  std::vector<double> levels;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const std::size_t comma = std::min(text.find(',', pos), text.size());
    const std::string item = text.substr(pos, comma - pos);
    const auto h = parse_rational(item);
    if (!h) throw UsageError("--levels: malformed entry '" + item + "'");
    levels.push_back(*h);
    pos = comma + 1;
  }
  return levels;
}

int cmd_portrait(const Config& cfg, Sink& sink) {
  if (cfg.levels_text.empty()) throw UsageError("--levels needs at least one value");
  const std::vector<double> levels = parse_levels(cfg.levels_text);
  const ModelParams m(cfg.n);
  for (double h : levels)
    if (!(h >= m.p1() && h <= 0.0))
      throw UsageError("level " + fmt(h) + " outside [p1, 0] = [" + fmt(m.p1()) + ", 0]");
  const bool mirror = cfg.n % 2 == 0;

  Json settings;
  settings["n"] = cfg.n;
  settings["levels"] = levels;
  settings["samples_per_branch"] = cfg.portrait_samples;
  settings["p1"] = m.p1();
  settings["B"] = m.right_extent_B();
  settings["mirrored"] = mirror;
  print_header(sink.log(), "portrait", settings);

  std::vector<CurvePoints> curves;
  for (double h : levels) {
    CurvePoints c{"", h, {}};
    if (h == 0.0) {
      c.kind = "homoclinic";
      c.points = level_polyline(m, 0.0, m.right_extent_B(), h, cfg.portrait_samples);
    } else {
      const LevelCurveGeometry g = turning_points(m, h);
      if (g.degenerate) {
        c.kind = "center_level";
        c.points = {{m.center_u(), 0.0}};
      } else {
        c.kind = "oval";
        c.points = level_polyline(m, g.alpha, g.beta, h, cfg.portrait_samples);
      }
    }
    if (mirror) {
      CurvePoints mc{c.kind + "_mirror", h, {}};
      for (const auto& pt : c.points) mc.points.push_back({-pt.u, pt.y});
      curves.push_back(std::move(c));
      curves.push_back(std::move(mc));
    } else {
      curves.push_back(std::move(c));
    }
  }
  const auto fps = fixed_points(m);

  if (cfg.common.format == "json") {
    Json j;
    j["command"] = "portrait";
    j["settings"] = settings;
    Json fp = Json::array();
    for (const auto& f : fps) fp.push_back({{"u", f.u}, {"y", f.y}, {"kind", kind_name(f.kind)}});
    j["fixed_points"] = std::move(fp);
    Json cs = Json::array();
    for (const auto& c : curves) {
      Json pts = Json::array();
      for (const auto& pt : c.points) pts.push_back(Json::array({pt.u, pt.y}));
      cs.push_back({{"kind", c.kind}, {"h", c.h}, {"points", std::move(pts)}});
    }
    j["curves"] = std::move(cs);
    sink.emit(j.dump(2) + '\n');
  } else {
    std::string csv = "kind,h,u,y\n";
    for (const auto& f : fps) {
      const double v[] = {hamiltonian(m, f.u, f.y), f.u, f.y};
      csv += std::string(kind_name(f.kind)) + ',' + csv_row(v);
    }
    for (const auto& c : curves)
      for (const auto& pt : c.points) {
        const double v[] = {c.h, pt.u, pt.y};
        csv += c.kind + ',' + csv_row(v);
      }
    sink.emit(csv);
  }
  sink.log() << curves.size() << " curves, " << fps.size() << " fixed points\n";
  return kOk;
}

int exit_for(const Error& e) {
  switch (e.code()) {
    case Errc::InvalidArgument:
    case Errc::EnergyOutsideAnnulus:
    case Errc::OutsideInvolutionDomain:
      return kUsage;
    default:
      return kNumerical;
  }
}

}  // namespace

std::optional<double> parse_rational(std::string_view text) {
  const auto parse = [](std::string_view s) -> std::optional<double> {
    if (s.empty()) return std::nullopt;
    double v = 0.0;
    const auto res = std::from_chars(s.data(), s.data() + s.size(), v);
    if (res.ec != std::errc() || res.ptr != s.data() + s.size() || !std::isfinite(v)) return std::nullopt;
    return v;
  };
  const auto slash = text.find('/');
  if (slash == std::string_view::npos) return parse(text);
  const auto num = parse(text.substr(0, slash));
  const auto den = parse(text.substr(slash + 1));
  if (!num || !den || *den == 0.0) return std::nullopt;
  return *num / *den;
}

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Abelian integrals, limit wave speeds and limit cycles of the perturbed gKdV traveling-wave system",
               "abelcycle"};
  app.require_subcommand(1);
  Config cfg;

  const auto add_common = [&](CLI::App* sub) {
    sub->add_option("--format", cfg.common.format, "Output format")
        ->check(CLI::IsMember({"csv", "json"}))
        ->capture_default_str();
    sub->add_option("--out", cfg.common.out, "Output path (written atomically); stdout when omitted");
    sub->add_option("--tol-quad", cfg.common.tol_quad, "Relative quadrature tolerance")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
    sub->add_option("--tol-ode", cfg.common.tol_ode, "Relative ODE tolerance (absolute is 1e-2 of it)")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
  };
  const auto add_n = [&](CLI::App* sub) {
    sub->add_option("--n", cfg.n, "Nonlinearity exponent n >= 1")->required()->check(CLI::Range(1, 64));
  };
  const auto add_perturbation = [&](CLI::App* sub) {
    sub->add_option("--eps", cfg.eps, "Perturbation size epsilon")->check(CLI::NonNegativeNumber)->capture_default_str();
    sub->add_option("--c", cfg.c_text, "Wave speed c > 0, decimal or fraction a/b")->required();
  };

  auto* curve = app.add_subcommand("curve", "Tabulate A0, An, ratio and c0 over the period annulus");
  add_n(curve);
  curve->add_option("--grid", cfg.grid, "Number of h grid points")->check(CLI::Range(2, 1000000))->capture_default_str();
  add_common(curve);

  auto* cycle = app.add_subcommand("cycle", "Locate the limit cycle via the return map (JSON report)");
  add_n(cycle);
  add_perturbation(cycle);
  cycle->add_option("--bracket", cfg.bracket, "Section bracket lo hi in (0, center)")->capture_default_str();
  add_common(cycle);

  auto* simulate = app.add_subcommand("simulate", "Integrate one trajectory of the reduced system");
  add_n(simulate);
  add_perturbation(simulate);
  simulate->add_option("--start", cfg.start, "Initial point u y")->required();
  simulate->add_option("--span", cfg.span, "Integration span in eta")->required()->check(CLI::PositiveNumber);
  simulate->add_option("--sample", cfg.sample, "Output sampling interval")->capture_default_str();
  add_common(simulate);

  auto* verify_cmd = app.add_subcommand("verify", "Run the numerical property suite");
  verify_cmd->add_option("--n-min", cfg.n_min, "Smallest n")->capture_default_str();
  verify_cmd->add_option("--n-max", cfg.n_max, "Largest n")->capture_default_str();
  verify_cmd->add_option("--grid", cfg.verify_grid, "h grid size for monotonicity sweeps")
      ->check(CLI::Range(4, 100000))
      ->capture_default_str();
  verify_cmd->add_option("--samples", cfg.random_samples, "Random (u, v) samples per n")
      ->check(CLI::Range(1, 10000000))
      ->capture_default_str();
  verify_cmd->add_option("--seed", cfg.seed, "Seed for randomized sampling")->capture_default_str();
  verify_cmd->add_flag("--skip-area", cfg.skip_area, "Skip the Green's-theorem orbit-area check");
  add_common(verify_cmd);

  auto* portrait = app.add_subcommand("portrait", "Sample level curves and fixed points of H");
  add_n(portrait);
  portrait->add_option("--levels", cfg.levels_text, "Comma-separated h values in [p1, 0]")->required();
  portrait->add_option("--samples", cfg.portrait_samples, "Points per half branch")
      ->check(CLI::Range(3, 10000000))
      ->capture_default_str();
  add_common(portrait);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsage;
  }
  // The cycle report defaults to JSON unless --format was given.
  if (cycle->parsed() && cycle->get_option("--format")->count() == 0) cfg.common.format = "json";

  Sink sink(cfg.common, out, err);
  try {
    if (curve->parsed()) return cmd_curve(cfg, sink);
    if (cycle->parsed()) return cmd_cycle(cfg, sink);
    if (simulate->parsed()) return cmd_simulate(cfg, sink);
    if (verify_cmd->parsed()) return cmd_verify(cfg, sink);
    return cmd_portrait(cfg, sink);
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << '\n';
    return kUsage;
  } catch (const Error& e) {
    err << "error (" << to_string(e.code()) << "): " << e.what() << '\n';
    return exit_for(e);
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kIo;
  }
}

}  // namespace abelcycle::cli
