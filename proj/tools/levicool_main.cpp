// Command-line driver: table reproduction, heating/cooling ensembles,
// steady-state sweeps, and analytic cooling curves.

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "levicool/analytics.hpp"
#include "levicool/config.hpp"
#include "levicool/constants.hpp"
#include "levicool/output.hpp"
#include "levicool/single_dof.hpp"

using namespace levicool;
using namespace levicool::constants;

namespace {

constexpr int kExitConfig = 1;
constexpr int kExitInstability = 2;
constexpr int kExitNoConvergence = 3;

const char* kDofNames[5] = {"x", "y", "z", "b1", "b2"};

struct GlobalOpts {
  std::string config_path;
  std::string out_dir = "out";
  std::string format = "csv";
  std::optional<std::uint64_t> seed;
  std::optional<int> trajectories;
};

RunConfig effective_config(const GlobalOpts& g) {
  RunConfig c = g.config_path.empty() ? RunConfig{} : load_config(g.config_path);
  if (g.seed) c.integrator.seed = *g.seed;
  if (g.trajectories) c.integrator.trajectories = *g.trajectories;
  return c;
}

IntegratorConfig make_integrator(const RunConfig& c, int default_traj) {
  IntegratorConfig ic;
  ic.steps_per_period = c.integrator.steps_per_period;
  ic.master_seed = c.integrator.seed;
  ic.trajectories =
      c.integrator.trajectories > 0 ? c.integrator.trajectories : default_traj;
  ic.record_interval = c.integrator.record_interval_ms * 1e-3;
  ic.threads = c.integrator.threads;
  try {
    ic.validate();
  } catch (const std::exception& e) {
    throw ConfigError(std::string("bad integrator configuration: ") + e.what());
  }
  return ic;
}

std::vector<double> parse_list(const std::string& key, const std::string& s) {
  std::vector<double> out;
  std::istringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ',')) {
    const auto b = item.find_first_not_of(" \t");
    if (b == std::string::npos) continue;
    const auto e = item.find_last_not_of(" \t");
    item = item.substr(b, e - b + 1);
    try {
      std::size_t pos = 0;
      out.push_back(std::stod(item, &pos));
      if (pos != item.size()) throw std::invalid_argument(item);
    } catch (const std::exception&) {
      throw ConfigError("bad list entry for " + key + ": '" + item + "'");
    }
  }
  if (out.empty()) throw ConfigError("empty list for " + key);
  return out;
}

std::vector<double> grid(double lo, double hi, int points, bool log_spaced) {
  if (points < 1 || lo <= 0.0 || hi < lo)
    throw ConfigError("bad sweep range: need 0 < min <= max and points >= 1");
  std::vector<double> g(points);
  for (int i = 0; i < points; ++i) {
    const double f = points == 1 ? 0.0 : double(i) / (points - 1);
    g[i] = log_spaced ? lo * std::pow(hi / lo, f) : lo + f * (hi - lo);
  }
  return g;
}

void emit(const OutputTable& t, const GlobalOpts& g, const std::string& stem) {
  if (g.format == "csv") {
    std::cout << "wrote " << write_table(t, g.out_dir, stem, "csv") << "\n";
    write_table(t, g.out_dir, stem, "json");  // machine-readable mirror
  } else {
    std::cout << "wrote " << write_table(t, g.out_dir, stem, "json") << "\n";
  }
}

// ---------------------------------------------------------------- table

int cmd_table(const GlobalOpts& g) {
  const RunConfig base = effective_config(g);
  struct Row {
    std::string material;
    double a_nm, b_nm;
  };
  std::vector<Row> rows;
  if (g.config_path.empty()) {
    // the four built-in three-row scans: fixed size / fixed ellipticity,
    // diamond and silica
    for (const char* mat : {"diamond", "silica"})
      for (auto [a, b] : {std::pair{15.0, 70.0}, {38.0, 60.0}, {48.0, 53.0},
                          {27.0, 42.0}, {38.0, 60.0}, {49.0, 78.0}})
        rows.push_back({mat, a, b});
  } else {
    rows.push_back({base.particle.material, base.particle.a_nm,
                    base.particle.b_nm});
  }

  OutputTable t;
  t.columns = {"a",      "b",        "anisotropy", "f_beta1", "f_x",
               "f_y",    "Edot_R",   "Edot_T",     "ratio_E", "ratio_omega",
               "ratio_ndot", "ratio_dn"};
  t.units = {"nm",   "nm",   "-",    "kHz", "kHz", "kHz",
             "mK/s", "mK/s", "-",    "-",   "-",   "-"};
  t.config_hash = config_hash(base);
  t.master_seed = base.integrator.seed;

  std::printf("%-8s %5s %5s %6s %9s %8s %8s %10s %10s %8s %8s %8s %8s\n",
              "material", "a/nm", "b/nm", "aniso", "fb1/kHz", "fx/kHz",
              "fy/kHz", "ER mK/s", "ET mK/s", "ER/ET", "wb/wx", "ndot", "dn");
  for (const auto& r : rows) {
    RunConfig rc = base;
    rc.particle.material = r.material;
    rc.particle.a_nm = r.a_nm;
    rc.particle.b_nm = r.b_nm;
    const auto c = characterize(make_particle(rc), make_beam(rc));
    const double to_mK = 1e3 / k_B;
    t.rows.push_back({r.a_nm, r.b_nm, c.alpha.anisotropy(),
                      c.freq.omega_beta1 / (2 * pi) * 1e-3,
                      c.freq.omega_x / (2 * pi) * 1e-3,
                      c.freq.omega_y / (2 * pi) * 1e-3, c.Edot_R * to_mK,
                      c.Edot_T * to_mK, c.ratios.energy, c.ratios.omega,
                      c.ratios.ndot, c.ratios.dn});
    std::printf(
        "%-8s %5.0f %5.0f %6.2f %9.3g %8.3g %8.3g %10.3g %10.3g %8.3g "
        "%8.3g %8.3g %8.3g\n",
        r.material.c_str(), r.a_nm, r.b_nm, c.alpha.anisotropy(),
        c.freq.omega_beta1 / (2 * pi) * 1e-3, c.freq.omega_x / (2 * pi) * 1e-3,
        c.freq.omega_y / (2 * pi) * 1e-3, c.Edot_R * to_mK, c.Edot_T * to_mK,
        c.ratios.energy, c.ratios.omega, c.ratios.ndot, c.ratios.dn);
  }
  emit(t, g, "table");
  return 0;
}

// ----------------------------------------------------------- heat / cool

int ensemble_command(const GlobalOpts& g, bool with_feedback) {
  const RunConfig rc = effective_config(g);
  const auto c = characterize(make_particle(rc), make_beam(rc));
  const FeedbackConfig fb = with_feedback ? make_feedback(rc) : FeedbackConfig{};
  const MeasurementModel mm = make_measurement(rc);
  IntegratorConfig ic = make_integrator(rc, with_feedback ? 30 : 100);
  if (with_feedback && mm.enabled) ic.delta_abort = 1e9;  // noise spikes
  const double duration =
      (rc.integrator.duration_ms > 0 ? rc.integrator.duration_ms
                                     : (with_feedback ? 20.0 : 10.0)) *
      1e-3;

  EnsembleSeries es;
  try {
    es = run_ensemble(c, fb, mm, ic, rc.run.initial_temperature_K, duration);
  } catch (const InstabilityError& e) {
    std::cerr << "instability: " << e.what() << "\n";
    return kExitInstability;
  }
  for (const auto& f : es.failures) std::cerr << "trajectory failed: " << f << "\n";

  const DofParams dofs = dof_params(c);
  const std::string stem = with_feedback ? "cool" : "heat";
  for (int d = 0; d < 5; ++d) {
    OutputTable t;
    t.config_hash = config_hash(rc);
    t.master_seed = ic.master_seed;
    if (with_feedback) {
      t.columns = {"t", "n_mean", "n_se", "E_mean", "E_se"};
      t.units = {"s", "-", "-", "J", "J"};
      for (std::size_t i = 0; i < es.t.size(); ++i)
        t.rows.push_back({es.t[i], es.mean_occupation[d][i],
                          es.se_occupation[d][i], es.mean_energy[d][i],
                          es.se_energy[d][i]});
    } else {
      t.columns = {"t", "T_mean", "T_se", "T_analytic"};
      t.units = {"s", "K", "K", "K"};
      for (std::size_t i = 0; i < es.t.size(); ++i)
        t.rows.push_back({es.t[i], es.mean_energy[d][i] / k_B,
                          es.se_energy[d][i] / k_B,
                          rc.run.initial_temperature_K +
                              dofs.heating[d] * es.t[i] / k_B});
    }
    emit(t, g, stem + "_" + kDofNames[d]);
  }
  return 0;
}

// ------------------------------------------------------------------ sweep

int cmd_sweep(const GlobalOpts& g) {
  const RunConfig rc = effective_config(g);
  const auto c = characterize(make_particle(rc), make_beam(rc));
  const auto n_values = parse_list("sweep.n_values", rc.sweep.n_values);

  SteadyStateOptions opt;
  opt.steps_per_period = rc.integrator.steps_per_period;
  if (rc.integrator.trajectories > 0)
    opt.trajectories = rc.integrator.trajectories;

  OutputTable t;
  t.config_hash = config_hash(rc);
  t.master_seed = rc.integrator.seed;
  int converged_points = 0, total_points = 0;

  if (rc.sweep.parameter == "eta") {
    const auto etas =
        grid(rc.sweep.min, rc.sweep.max, rc.sweep.points, rc.sweep.log);
    t.columns = {"eta", "N", "n_ss", "n_se", "converged", "unstable"};
    t.units = {"s/m^2", "-", "-", "-", "bool", "count"};
    int point = 0;
    for (double n_val : n_values)
      for (double eta : etas) {
        opt.master_seed = trajectory_seed(rc.integrator.seed, point);
        ++point;
        const auto res = steady_state_occupation(
            dimensionful_x_system(c, eta, n_val,
                                  parse_velocity_mode(rc.measurement.velocity_mode)),
            opt);
        t.rows.push_back({eta, n_val, res.n_mean, res.n_se,
                          double(res.converged), double(res.unstable)});
        ++total_points;
        converged_points += res.converged;
        std::printf("N=%-4g eta=%-10.3g n_ss=%-10.4g %s\n", n_val, eta,
                    res.n_mean, res.converged ? "" : "(not converged)");
      }
    emit(t, g, "sweep_eta");
  } else {  // dn: optimal limit over gain, per N
    // Delta n scales as the waist squared at fixed particle, so each dn
    // point reports the waist that would realize it with this beam.
    const double dn_ref = delta_n(c.Edot_T, c.freq.omega_x);
    const double w0_ref = focus(make_beam(rc)).w0;
    const auto dns = parse_list("sweep.dn_values", rc.sweep.dn_values);
    const auto eta_tildes = grid(1e-5, 1.0, 13, true);  // scaled-gain scan
    t.columns = {"dn", "N", "w0_implied", "n_min", "n_se", "eta_tilde_argmin",
                 "converged"};
    t.units = {"-", "-", "nm", "-", "-", "-", "bool"};
    int point = 0;
    for (double n_val : n_values)
      for (double dn : dns) {
        double best_n = std::numeric_limits<double>::infinity();
        double best_se = 0.0, best_eta = 0.0;
        bool best_conv = false;
        for (double et : eta_tildes) {
          opt.master_seed = trajectory_seed(rc.integrator.seed, point);
          ++point;
          const auto res = steady_state_occupation(
              scaled_system(dn, et, n_val,
                            parse_velocity_mode(rc.measurement.velocity_mode)),
              opt);
          if (res.converged && res.n_mean < best_n) {
            best_n = res.n_mean;
            best_se = res.n_se;
            best_eta = et;
            best_conv = true;
          }
        }
        const double w0_nm = w0_ref * std::sqrt(dn / dn_ref) * 1e9;
        t.rows.push_back({dn, n_val, w0_nm, best_n, best_se, best_eta,
                          double(best_conv)});
        ++total_points;
        converged_points += best_conv;
        std::printf("N=%-4g dn=%-7g n_min=%-10.4g at eta_tilde=%-8.3g %s\n",
                    n_val, dn, best_n, best_eta,
                    best_conv ? "" : "(not converged)");
      }
    emit(t, g, "sweep_dn");
  }
  if (converged_points == 0 && total_points > 0) {
    std::cerr << "no sweep point converged\n";
    return kExitNoConvergence;
  }
  return 0;
}

// --------------------------------------------------------------- analytic

int cmd_analytic(const GlobalOpts& g) {
  const RunConfig rc = effective_config(g);
  const auto c = characterize(make_particle(rc), make_beam(rc));
  const double eta = rc.feedback.eta_x;
  if (eta <= 0.0) throw ConfigError("analytic requires feedback.eta_x > 0");
  const double duration =
      (rc.integrator.duration_ms > 0 ? rc.integrator.duration_ms : 10.0) * 1e-3;
  const double dt = rc.integrator.record_interval_ms * 1e-3;
  const double E_i = k_B * rc.run.initial_temperature_K;
  const auto sol = cooling_limit(c.Edot_T, eta, c.mass, c.freq.omega_x);

  OutputTable t;
  t.config_hash = config_hash(rc);
  t.master_seed = rc.integrator.seed;
  t.columns = {"t", "E", "T", "n", "E_limit"};
  t.units = {"s", "J", "K", "-", "J"};
  for (double time = 0.0; time <= duration + 0.5 * dt; time += dt) {
    const double e = energy_trajectory(E_i, time, c.Edot_T, eta, c.mass);
    t.rows.push_back({time, e, e / k_B, occupation(e, c.freq.omega_x),
                      sol.E_limit});
  }
  emit(t, g, "analytic");
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "shot-noise heating and parametric feedback cooling of a levitated "
      "ellipsoidal nanoparticle"};
  app.require_subcommand(1);
  app.fallthrough();  // accept the global flags after the subcommand too

  GlobalOpts g;
  app.add_option("--config", g.config_path, "key=value run configuration file");
  app.add_option("--out", g.out_dir, "output directory (default: out)");
  app.add_option("--format", g.format, "csv (with json mirror) or json")
      ->check(CLI::IsMember({"csv", "json"}));
  app.add_option("--seed", g.seed, "master RNG seed override");
  app.add_option("--trajectories", g.trajectories,
                 "ensemble size override");

  auto* tab = app.add_subcommand(
      "table", "frequencies, heating rates, and comparison ratios");
  auto* heat = app.add_subcommand("heat", "zero-feedback heating ensemble");
  auto* cool = app.add_subcommand("cool", "feedback cooling ensemble");
  auto* sweep = app.add_subcommand(
      "sweep", "steady-state occupation vs gain, or optimal limit vs dn");
  auto* ana = app.add_subcommand("analytic", "closed-form cooling curve");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? 0 : kExitConfig;
  }

  try {
    if (tab->parsed()) return cmd_table(g);
    if (heat->parsed()) return ensemble_command(g, false);
    if (cool->parsed()) return ensemble_command(g, true);
    if (sweep->parsed()) return cmd_sweep(g);
    if (ana->parsed()) return cmd_analytic(g);
  } catch (const ConfigError& e) {
    std::cerr << "config error: " << e.what() << "\n";
    return kExitConfig;
  } catch (const InstabilityError& e) {
    std::cerr << "instability: " << e.what() << "\n";
    return kExitInstability;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitConfig;
  }
  return 0;
}
