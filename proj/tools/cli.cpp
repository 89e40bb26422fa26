#include "cli.hpp"

#include <cmath>
#include <filesystem>
#include <fstream>
#include <functional>
#include <numbers>
#include <ostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "econthermo/carnot.hpp"
#include "econthermo/catastrophe.hpp"
#include "econthermo/errors.hpp"
#include "econthermo/export.hpp"
#include "econthermo/format.hpp"
#include "econthermo/ideal_income.hpp"
#include "econthermo/serialization.hpp"
#include "econthermo/vdw.hpp"

namespace econthermo::cli {

namespace fs = std::filesystem;

namespace {

// Files are rendered in memory first so that a failing command writes nothing.
struct OutputFile {
  std::string name;
  std::string content;
};

void write_files(const std::string& dir, const std::vector<OutputFile>& files) {
  fs::create_directories(dir);
  for (const auto& f : files) {
    std::ofstream stream(fs::path(dir) / f.name, std::ios::binary | std::ios::trunc);
    if (!stream) throw std::runtime_error("cannot open " + f.name + " for writing");
    stream << f.content;
  }
}

template <class Fn>
std::string render(Fn&& fn) {
  std::ostringstream s;
  fn(s);
  return s.str();
}

void kv(std::ostream& out, const std::string& key, double value) {
  out << key << " = " << format_double(value) << '\n';
}

struct CarnotOptions {
  double n = 1.0;
  double R = 1.0;
  int f = 3;
  double Q_ref = 1.0;
  double I_ref = 1.0;
  double I_H = 2.0;
  double I_C = 1.0;
  double Q_1 = 1.0;
  double Q_2 = std::numbers::e;
  std::size_t samples = 1000;
  bool reverse = false;
  bool svg = false;
};

struct VdWOptions {
  double a = 27.0;
  double b = 1.0;
  double R = 8.0;
  double n = 1.0;
};

// Absolute I, or I/I_c when only the reduced value is given.
struct StabilityOption {
  double absolute = NAN;
  double reduced = 0.9;

  double resolve(const CriticalPoint& c) const {
    return std::isnan(absolute) ? reduced * c.I_c : absolute;
  }
};

struct IsothermOptions {
  StabilityOption I;
  double Q_min = NAN;  // defaults: 0.45 Q_c and 5 Q_c
  double Q_max = NAN;
  std::size_t points = 400;
};

struct SurfaceOptions {
  double Q_min = NAN;
  double Q_max = NAN;
  std::size_t nQ = 60;
  double I_min_reduced = 0.85;
  double I_max_reduced = 1.15;
  std::size_t nI = 13;
};

struct CatastropheOptions {
  VdWOptions model;
  double P = NAN;
  double Q = NAN;
  double I = NAN;
  bool grid = false;
  double alpha_min = -1.0;
  double alpha_max = 1.0;
  double beta_min = -1.0;
  double beta_max = 1.0;
  std::size_t grid_points = 41;
  bool check = false;
  std::size_t samples = 1000;
  std::uint64_t seed = 42;
};

void add_vdw_model(CLI::App* app, VdWOptions& o) {
  app->add_option("--a", o.a, "cohesion parameter a")->capture_default_str();
  app->add_option("--b", o.b, "excluded-volume parameter b")->capture_default_str();
  app->add_option("--R", o.R, "universal income constant R")->capture_default_str();
  app->add_option("--n", o.n, "mole count")->capture_default_str();
}

void add_stability(CLI::App* app, StabilityOption& o) {
  auto* abs = app->add_option("--I", o.absolute, "internal politics stability I");
  auto* red = app->add_option("--I-reduced,--I_reduced", o.reduced, "I / I_c")
                  ->capture_default_str();
  abs->excludes(red);
}

int cmd_carnot(const CarnotOptions& o, const std::string& out_dir, std::ostream& out) {
  CarnotSpec spec{IdealIncomeModel::make(o.n, o.R, o.f, o.Q_ref, o.I_ref), o.I_H, o.I_C, o.Q_1,
                  o.Q_2, o.samples};
  CycleReport report = build_cycle(spec);
  if (o.reverse) report = reverse_cycle(report);
  const CycleDiagnostics diag = validate_cycle(report);

  nlohmann::json summary_json = report;
  summary_json.erase("legs");
  summary_json["model"] = spec.model;
  summary_json["diagnostics"] = diag;

  std::vector<OutputFile> files{
      {"cycle_qp.csv", render([&](std::ostream& s) { write_cycle_trace_csv(s, report); })},
      {"cycle_ei.csv", render([&](std::ostream& s) { write_cycle_ei_csv(s, report); })},
      {"cycle.json", summary_json.dump(2) + "\n"},
  };
  if (o.svg) {
    files.push_back(
        {"cycle_qp.svg", render([&](std::ostream& s) { write_cycle_svg(s, report, Diagram::QP); })});
    files.push_back(
        {"cycle_ei.svg", render([&](std::ostream& s) { write_cycle_svg(s, report, Diagram::EI); })});
  }
  write_files(out_dir, files);

  out << "economic Carnot cycle (" << to_string(report.orientation) << ")\n";
  kv(out, "W", report.W);
  kv(out, "q_H", report.q_H);
  kv(out, "q_C", report.q_C);
  kv(out, "eta", report.eta);
  kv(out, "E_A", report.E_A);
  kv(out, "E_B", report.E_B);
  kv(out, "residual_dG", diag.closure_dG);
  kv(out, "residual_W", diag.first_law);
  kv(out, "residual_area", diag.area_mismatch);
  kv(out, "residual_eta", diag.eta_residual);
  kv(out, "continuity", diag.continuity);
  out << "validation = " << (diag.pass ? "pass" : "FAIL") << '\n';
  return diag.pass ? kOk : kValidationFailure;
}

int cmd_vdw_critical(const VdWOptions& o, std::ostream& out) {
  const VdWModel m = VdWModel::make(o.a, o.b, o.R, o.n);
  const CriticalDiagnostics d = verify_critical(m);
  kv(out, "P_c", d.point.P_c);
  kv(out, "Q_c", d.point.Q_c);
  kv(out, "I_c", d.point.I_c);
  kv(out, "dP/dQ", d.dP_dQ);
  kv(out, "d2P/dQ2", d.d2P_dQ2);
  kv(out, "scaled_dP/dQ", d.scaled_dP_dQ);
  kv(out, "scaled_d2P/dQ2", d.scaled_d2P_dQ2);
  out << "stationary_inflection = " << (d.pass ? "pass" : "FAIL") << '\n';
  return d.pass ? kOk : kValidationFailure;
}

int cmd_vdw_isotherm(const VdWOptions& o, const IsothermOptions& iso, const std::string& out_dir,
                     std::ostream& out) {
  const VdWModel m = VdWModel::make(o.a, o.b, o.R, o.n);
  const CriticalPoint c = critical_point(m);
  const double I = iso.I.resolve(c);
  const double Q_min = std::isnan(iso.Q_min) ? 0.45 * c.Q_c : iso.Q_min;
  const double Q_max = std::isnan(iso.Q_max) ? 5.0 * c.Q_c : iso.Q_max;
  const ProcessPath raw = vdw_isotherm_path(m, I, Q_min, Q_max, iso.points, false);
  const ProcessPath corrected = vdw_isotherm_path(m, I, Q_min, Q_max, iso.points, true);
  write_files(out_dir,
              {{"vdw_isotherm_raw.csv", render([&](std::ostream& s) { write_isotherm_csv(s, raw); })},
               {"vdw_isotherm_corrected.csv",
                render([&](std::ostream& s) { write_isotherm_csv(s, corrected); })}});
  kv(out, "I", I);
  kv(out, "I/I_c", I / c.I_c);
  out << "regime = " << (I < c.I_c ? "subcritical" : "supercritical") << '\n';
  out << "samples = " << iso.points << '\n';
  return kOk;
}

int cmd_vdw_maxwell(const VdWOptions& o, const StabilityOption& opt, std::ostream& out,
                    std::ostream& err) {
  const VdWModel m = VdWModel::make(o.a, o.b, o.R, o.n);
  const CriticalPoint c = critical_point(m);
  const double I = opt.resolve(c);
  if (!(I < c.I_c)) {
    err << "error: I = " << format_double(I) << " is supercritical (I_c = " << format_double(c.I_c)
        << "); no coexistence\n";
    return kInputError;
  }
  const CoexistenceResult r = maxwell_construction(m, I);
  nlohmann::json j = r;
  j["I"] = I;
  j["P_sat_reduced"] = r.P_sat / c.P_c;
  out << j.dump(2) << '\n';
  return kOk;
}

int cmd_vdw_surface(const VdWOptions& o, const SurfaceOptions& s, const std::string& out_dir,
                    std::ostream& out) {
  const VdWModel m = VdWModel::make(o.a, o.b, o.R, o.n);
  const CriticalPoint c = critical_point(m);
  const double Q_min = std::isnan(s.Q_min) ? 0.45 * c.Q_c : s.Q_min;
  const double Q_max = std::isnan(s.Q_max) ? 5.0 * c.Q_c : s.Q_max;
  const auto grid = vdw_surface_grid(m, Q_min, Q_max, s.nQ, s.I_min_reduced * c.I_c,
                                     s.I_max_reduced * c.I_c, s.nI);
  write_files(out_dir,
              {{"vdw_surface.csv", render([&](std::ostream& os) { write_surface_csv(os, grid); })}});
  out << "surface points = " << grid.size() << '\n';
  return kOk;
}

int cmd_catastrophe(const CatastropheOptions& o, const std::string& out_dir, std::ostream& out) {
  const VdWModel m = VdWModel::make(o.model.a, o.model.b, o.model.R, o.model.n);
  const CriticalPoint c = critical_point(m);
  int code = kOk;

  std::vector<OutputFile> files;
  if (o.grid) {
    const auto grid =
        bifurcation_grid(o.alpha_min, o.alpha_max, o.beta_min, o.beta_max, o.grid_points);
    files.push_back(
        {"cusp_bifurcation.csv", render([&](std::ostream& s) { write_bifurcation_csv(s, grid); })});
  }

  const bool has_state = !std::isnan(o.P) || !std::isnan(o.Q) || !std::isnan(o.I);
  if (has_state && (std::isnan(o.P) || std::isnan(o.Q) || std::isnan(o.I))) {
    throw DomainError("a state needs all of --P, --Q and --I");
  }
  const StatePoint s = has_state ? make_state(o.P, o.Q, o.I) : make_state(c.P_c, c.Q_c, c.I_c);
  const CuspCoords cc = phi(m, s);

  std::ostringstream report;
  kv(report, "P", s.price());
  kv(report, "Q", s.volume());
  kv(report, "I", s.stability());
  kv(report, "x", cc.x);
  kv(report, "alpha", cc.alpha);
  kv(report, "beta", cc.beta);
  kv(report, "surface_residual", surface_residual(cc));

  if (o.check) {
    if (o.samples == 0) throw DomainError("--samples must be positive");
    std::mt19937_64 rng(o.seed);
    std::uniform_real_distribution<double> log_q(std::log(1.05 * m.excluded_volume()),
                                                 std::log(30.0 * m.excluded_volume()));
    std::uniform_real_distribution<double> i_red(0.5, 2.0);
    double worst = 0.0;
    std::size_t accepted = 0;
    while (accepted < o.samples) {
      const double Q = std::exp(log_q(rng));
      const double I = i_red(rng) * c.I_c;
      const double P = vdw_pressure(m, Q, I);
      if (!(P > 0.0)) continue;
      worst = std::max(worst, scaled_surface_residual(phi(m, make_state(P, Q, I))));
      ++accepted;
    }
    report << "check_samples = " << accepted << '\n';
    kv(report, "max_scaled_residual", worst);
    const bool pass = worst <= 1e-9;
    report << "surface_check = " << (pass ? "pass" : "FAIL") << '\n';
    if (!pass) code = kValidationFailure;
  }

  write_files(out_dir, files);
  out << report.str();
  if (o.grid) out << "bifurcation grid = " << o.grid_points * o.grid_points << " points\n";
  return code;
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Economic thermodynamics: Carnot cycles, Van der Waals, cusp catastrophe"};
  app.name("econthermo");
  app.set_config("--config", "", "INI/TOML scenario file; sections per command");
  app.allow_config_extras(CLI::config_extras_mode::error);
  app.fallthrough();
  app.require_subcommand(1);

  std::string out_dir = ".";
  app.add_option("--out", out_dir, "output directory")->capture_default_str();

  CarnotOptions carnot;
  auto* carnot_cmd = app.add_subcommand("carnot", "economic Carnot cycle on the ideal income law");
  carnot_cmd->fallthrough();
  carnot_cmd->add_option("--n", carnot.n, "mole count")->capture_default_str();
  carnot_cmd->add_option("--R", carnot.R, "molar income constant")->capture_default_str();
  carnot_cmd->add_option("--f", carnot.f, "degrees of freedom (3, 5 or 6)")->capture_default_str();
  carnot_cmd->add_option("--Q-ref,--Q_ref", carnot.Q_ref, "entropy reference volume");
  carnot_cmd->add_option("--I-ref,--I_ref", carnot.I_ref, "entropy reference stability");
  carnot_cmd->add_option("--I-hot,--I_H", carnot.I_H, "hot iso-ips stability")->capture_default_str();
  carnot_cmd->add_option("--I-cold,--I_C", carnot.I_C, "cold iso-ips stability")->capture_default_str();
  carnot_cmd->add_option("--Q1,--Q_1", carnot.Q_1, "volume at vertex 1")->capture_default_str();
  carnot_cmd->add_option("--Q2,--Q_2", carnot.Q_2, "volume at vertex 2")->capture_default_str();
  carnot_cmd->add_option("--samples-per-leg,--samples_per_leg", carnot.samples)->capture_default_str();
  carnot_cmd->add_flag("--reverse", carnot.reverse, "traverse as the consumption cycle");
  carnot_cmd->add_flag("--svg", carnot.svg, "also write cycle_qp.svg and cycle_ei.svg");

  VdWOptions vdw;
  auto* vdw_cmd = app.add_subcommand("vdw", "economic Van der Waals equation");
  vdw_cmd->fallthrough();
  vdw_cmd->require_subcommand(1);
  add_vdw_model(vdw_cmd, vdw);
  auto* critical_cmd = vdw_cmd->add_subcommand("critical", "critical point and derivative check");
  critical_cmd->fallthrough();

  IsothermOptions iso;
  auto* iso_cmd = vdw_cmd->add_subcommand("isotherm", "raw and Maxwell-corrected isotherm CSV");
  iso_cmd->fallthrough();
  add_stability(iso_cmd, iso.I);
  iso_cmd->add_option("--Q-min,--Q_min", iso.Q_min, "smallest molar volume (default 0.45 Q_c)");
  iso_cmd->add_option("--Q-max,--Q_max", iso.Q_max, "largest molar volume (default 5 Q_c)");
  iso_cmd->add_option("--points", iso.points)->capture_default_str();

  StabilityOption maxwell;
  auto* maxwell_cmd = vdw_cmd->add_subcommand("maxwell", "equal-area coexistence at a subcritical I");
  maxwell_cmd->fallthrough();
  add_stability(maxwell_cmd, maxwell);

  SurfaceOptions surface;
  auto* surface_cmd = vdw_cmd->add_subcommand("surface", "(Q, I) grid of pressures");
  surface_cmd->fallthrough();
  surface_cmd->add_option("--Q-min,--Q_min", surface.Q_min);
  surface_cmd->add_option("--Q-max,--Q_max", surface.Q_max);
  surface_cmd->add_option("--nq", surface.nQ)->capture_default_str();
  surface_cmd->add_option("--I-min-reduced", surface.I_min_reduced)->capture_default_str();
  surface_cmd->add_option("--I-max-reduced", surface.I_max_reduced)->capture_default_str();
  surface_cmd->add_option("--ni", surface.nI)->capture_default_str();

  CatastropheOptions cat;
  auto* cat_cmd = app.add_subcommand("catastrophe", "map onto cusp catastrophe coordinates");
  cat_cmd->fallthrough();
  add_vdw_model(cat_cmd, cat.model);
  cat_cmd->add_option("--P", cat.P, "price level of the state (default: critical point)");
  cat_cmd->add_option("--Q", cat.Q, "molar volume of the state");
  cat_cmd->add_option("--I", cat.I, "stability of the state");
  cat_cmd->add_flag("--grid", cat.grid, "write cusp_bifurcation.csv");
  cat_cmd->add_option("--alpha-min", cat.alpha_min)->capture_default_str();
  cat_cmd->add_option("--alpha-max", cat.alpha_max)->capture_default_str();
  cat_cmd->add_option("--beta-min", cat.beta_min)->capture_default_str();
  cat_cmd->add_option("--beta-max", cat.beta_max)->capture_default_str();
  cat_cmd->add_option("--grid-points", cat.grid_points)->capture_default_str();
  cat_cmd->add_flag("--check", cat.check, "verify the surface identity on random VdW states");
  cat_cmd->add_option("--samples", cat.samples)->capture_default_str();
  cat_cmd->add_option("--seed", cat.seed)->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kInputError;
  }

  try {
    if (carnot_cmd->parsed()) return cmd_carnot(carnot, out_dir, out);
    if (critical_cmd->parsed()) return cmd_vdw_critical(vdw, out);
    if (iso_cmd->parsed()) return cmd_vdw_isotherm(vdw, iso, out_dir, out);
    if (maxwell_cmd->parsed()) return cmd_vdw_maxwell(vdw, maxwell, out, err);
    if (surface_cmd->parsed()) return cmd_vdw_surface(vdw, surface, out_dir, out);
    if (cat_cmd->parsed()) return cmd_catastrophe(cat, out_dir, out);
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kInputError;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kInputError;
  }
  err << "error: no command given\n";
  return kInputError;
}

}  // namespace econthermo::cli
