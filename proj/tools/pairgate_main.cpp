// Command-line frontend: every computation in the library behind one binary,
// emitting versioned CSV/JSON tables that carry their own inputs so each file
// can be recomputed from its header alone.
//
// Exit codes: 0 success, 2 usage, 3 physics-forbidden, 4 I/O.

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "pairgate/exponent.hpp"
#include "pairgate/fields.hpp"
#include "pairgate/io.hpp"
#include "pairgate/maxprob.hpp"
#include "pairgate/oracle.hpp"
#include "pairgate/planewave.hpp"
#include "pairgate/sweep.hpp"

namespace {

using namespace pairgate;

constexpr int exit_ok = 0, exit_usage = 2, exit_physics = 3, exit_io = 4;

std::string fd(double v) { return format_double(v); }

struct OutputOpts {
  std::string format = "csv";
  std::string path;             // empty: stdout
  std::string units = "natural";  // label only; values are never rescaled
};

void add_output_opts(CLI::App* cmd, OutputOpts& o) {
  cmd->add_option("--format", o.format, "output format [csv]")
      ->check(CLI::IsMember({"csv", "json"}));
  cmd->add_option("--out", o.path, "output file (default: stdout)");
  cmd->add_option("--units", o.units,
                  "unit-system label recorded in the output meta; never "
                  "rescales any value [natural]");
}

int emit(Table table, const OutputOpts& o) {
  table.meta["units"] = o.units;
  std::ostringstream body;
  if (o.format == "json")
    write_json(body, table);
  else
    write_csv(body, table);
  if (o.path.empty()) {
    std::cout << body.str();
    return exit_ok;
  }
  std::ofstream file(o.path);
  if (!file) {
    std::cerr << "error: cannot open '" << o.path << "' for writing\n";
    return exit_io;
  }
  file << body.str();
  file.flush();
  if (!file.good()) {
    std::cerr << "error: short write to '" << o.path << "'\n";
    return exit_io;
  }
  return exit_ok;
}

void emit_error(const std::string& label, const OutputOpts& o) {
  if (o.format == "json")
    std::cout << nlohmann::json{{"schema", 1}, {"error", label}}.dump() << "\n";
  else
    std::cout << "# schema: 1\n# error: " << label << "\n";
  std::cerr << "error: " << label << "\n";
}

// default tolerance override from the environment; flags still win
double env_tol(double fallback) {
  const char* env = std::getenv("PAIRGATE_TOL");
  if (!env || !*env) return fallback;
  try {
    return std::stod(env);
  } catch (const std::exception&) {
    throw std::invalid_argument("PAIRGATE_TOL is not a number");
  }
}

// ---------------------------------------------------------------------------
// exponent / picture: one explicit configuration, optionally boosted

struct SetupOpts {
  double E = 0.0, B = 0.0;
  double k0 = 0.0;
  int kz = 1;
  double p_y = 0.0, p_z = 0.0;
  double boost = 0.0;  // velocity v along z, applied to the assembled setup
};

void add_setup_opts(CLI::App* cmd, SetupOpts& s) {
  cmd->add_option("--E", s.E, "electric field along x (units of m^2/e)");
  cmd->add_option("--B", s.B, "magnetic field along y");
  cmd->add_option("--k0", s.k0, "photon energy (photon along z)")
      ->check(CLI::NonNegativeNumber);
  cmd->add_option("--kz", s.kz, "photon direction along z [+1]")
      ->check(CLI::IsMember({-1, 1}));
  cmd->add_option("--py", s.p_y, "electron exit momentum along y [0]");
  cmd->add_option("--pz", s.p_z, "electron exit momentum along z [0]");
  cmd->add_option("--boost", s.boost,
                  "boost velocity v along z applied to the whole setup")
      ->check(CLI::Range(-0.99, 0.99));
}

struct Solved {
  FieldConfig config;
  PhotonState photon;
  TunnelingSolution solution;
  ExponentResult result;
};

Solved solve_setup(const SetupOpts& o) {
  Solved s;
  s.config.E = o.E;
  s.config.B = o.B;
  s.photon.k0 = o.k0;
  s.photon.kz_sign = o.kz;
  ExitState electron = make_exit_state(o.p_y, o.p_z, s.config);
  ExitState positron = solve_positron_exit(electron, s.photon, s.config);
  if (o.boost != 0.0) {
    const BoostedSetup b = boost_z(s.config, s.photon, electron, positron,
                                   std::atanh(o.boost));
    s.config = b.config;
    s.photon = b.photon;
    electron = b.electron;
    positron = b.positron;
  }
  s.solution = assemble_solution(electron, positron, s.photon, s.config);
  s.result = probability_exponent(s.solution, s.config, s.photon);
  return s;
}

std::map<std::string, std::string> setup_meta(const Solved& s) {
  return {{"E", fd(s.config.E)},
          {"B", fd(s.config.B)},
          {"k0", fd(s.photon.k0)},
          {"kz_sign", std::to_string(s.photon.kz_sign)},
          {"p_y", fd(s.solution.electron.p_y)},
          {"p_z", fd(s.solution.electron.p_z)}};
}

int run_exponent(const SetupOpts& so, const OutputOpts& oo) {
  try {
    const Solved s = solve_setup(so);
    Table t;
    t.meta = setup_meta(s);
    t.columns = {"regime",      "im_w_minus",   "im_w_plus",
                 "total_im",    "probability_exponent", "gamma_minus",
                 "gamma_plus",  "q_z",          "x_exit_minus",
                 "x_creation",  "x_exit_plus"};
    t.add_row({to_string(s.result.regime), fd(s.result.w_minus.imag()),
               fd(s.result.w_plus.imag()), fd(s.result.total_im),
               fd(s.result.probability_exponent), fd(s.result.gamma_minus),
               fd(s.result.gamma_plus), fd(s.solution.positron.p_z),
               fd(s.solution.electron.x), fd(s.solution.creation.x_s),
               fd(s.solution.positron.x)});
    return emit(t, oo);
  } catch (const physics_error& err) {
    emit_error(err.label(), oo);
    return exit_physics;
  }
}

int run_picture(const SetupOpts& so, int samples, const OutputOpts& oo) {
  try {
    const Solved s = solve_setup(so);
    const PictureData d = emit_picture(s.solution, s.config, samples);
    Table t;
    t.meta = setup_meta(s);
    t.meta["samples"] = std::to_string(samples);
    t.meta["x_exit_minus"] = fd(d.x_exit_minus);
    t.meta["x_exit_plus"] = fd(d.x_exit_plus);
    t.meta["x_creation"] = fd(d.x_creation);
    t.columns = {"x",
                 "kinetic_minus", "pseudo_minus", "measure_minus", "im_z_minus",
                 "kinetic_plus",  "pseudo_plus",  "measure_plus",  "im_z_plus"};
    for (std::size_t i = 0; i < d.x.size(); ++i)
      t.add_row({fd(d.x[i]), fd(d.electron_kinetic[i]), fd(d.electron_pseudo[i]),
                 fd(d.electron_measure[i]), fd(d.electron_im_z[i]),
                 fd(d.positron_kinetic[i]), fd(d.positron_pseudo[i]),
                 fd(d.positron_measure[i]), fd(d.positron_im_z[i])});
    return emit(t, oo);
  } catch (const physics_error& err) {
    emit_error(err.label(), oo);
    return exit_physics;
  }
}

// ---------------------------------------------------------------------------
// maxprob: most probable symmetric exits, single config or beta sweep

struct MaxProbOpts {
  double E = 0.0, B = 0.0, k0 = 0.0;
  int kz = 1;
  double beta = 0.0;
  double beta_min = 0.0, beta_max = 1.0;
  int beta_count = 0;
  bool serial = false;
};

void maxprob_row(Table& t, const MaxProbResult& r, bool with_beta) {
  std::vector<std::string> cells;
  if (with_beta) cells.push_back(fd(r.beta));
  cells.push_back(r.feasible ? "true" : "false");
  cells.push_back(fd(r.feasible ? r.p_z
                                : std::numeric_limits<double>::quiet_NaN()));
  cells.push_back(fd(r.exponent));
  cells.push_back(r.feasible ? "ok" : reason_text(r.fail));
  t.rows.push_back(std::move(cells));
}

int run_maxprob(const MaxProbOpts& mo, bool sweep_mode, const OutputOpts& oo) {
  try {
    Table t;
    t.meta["k0"] = fd(mo.k0);
    if (sweep_mode) {
      std::vector<double> betas;
      if (mo.beta_count > 0)
        for (int i = 0; i < mo.beta_count; ++i)
          betas.push_back(mo.beta_count == 1
                              ? mo.beta_min
                              : mo.beta_min + (mo.beta_max - mo.beta_min) * i /
                                                  (mo.beta_count - 1));
      else
        betas.push_back(mo.beta);
      const auto results = mo.serial
                               ? sweep_beta_serial(mo.E, mo.k0, betas)
                               : sweep_beta(mo.E, mo.k0, betas);
      t.meta["E"] = fd(mo.E);
      t.meta["mode"] = "sweep";
      t.columns = {"beta", "feasible", "p_z", "exponent", "status"};
      for (const auto& r : results) maxprob_row(t, r, true);
    } else {
      FieldConfig config;
      config.E = mo.E;
      config.B = mo.B;
      PhotonState photon;
      photon.k0 = mo.k0;
      photon.kz_sign = mo.kz;
      const MaxProbResult r = most_probable_exit(config, photon);
      t.meta["E"] = fd(mo.E);
      t.meta["B"] = fd(mo.B);
      t.meta["kz_sign"] = std::to_string(mo.kz);
      t.meta["mode"] = "direct";
      t.columns = {"feasible", "p_z", "exponent", "status"};
      maxprob_row(t, r, false);
    }
    return emit(t, oo);
  } catch (const physics_error& err) {
    emit_error(err.label(), oo);
    return exit_physics;
  }
}

// ---------------------------------------------------------------------------
// optimal-beta / critical-k

struct OptimalBetaOpts {
  double E = 0.0, k0 = 0.0;
  double k0_min = 0.0, k0_max = 1.0;
  int k0_count = 0;
  double beta_tol = 1e-6;
};

int run_optimal_beta(const OptimalBetaOpts& bo, const OutputOpts& oo) {
  try {
    std::vector<double> grid;
    if (bo.k0_count > 0)
      for (int i = 0; i < bo.k0_count; ++i)
        grid.push_back(bo.k0_count == 1
                           ? bo.k0_min
                           : bo.k0_min + (bo.k0_max - bo.k0_min) * i /
                                             (bo.k0_count - 1));
    else
      grid.push_back(bo.k0);

    std::vector<OptimalBeta> results(grid.size());
    parallel_for_index(grid.size(), [&](std::size_t i) {
      results[i] = optimal_beta(bo.E, grid[i], bo.beta_tol);
    });

    Table t;
    t.meta = {{"E", fd(bo.E)}, {"beta_tol", fd(bo.beta_tol)}};
    t.columns = {"k0", "beta_opt", "exponent", "planewave_exponent"};
    const FieldConfig defaults;
    for (std::size_t i = 0; i < grid.size(); ++i) {
      const double m = defaults.m, e = defaults.e;
      const double pw = grid[i] > 0.0 && bo.E != 0.0
                            ? 4.0 * m * m * m / (3.0 * e * grid[i] * bo.E)
                            : std::numeric_limits<double>::infinity();
      t.add_row({fd(grid[i]), fd(results[i].beta), fd(results[i].exponent),
                 fd(pw)});
    }
    return emit(t, oo);
  } catch (const physics_error& err) {
    emit_error(err.label(), oo);
    return exit_physics;
  }
}

int run_critical_k(double E, double tol, const OutputOpts& oo) {
  try {
    const double k0_star = critical_photon_momentum(E, tol);
    Table t;
    t.meta = {{"E", fd(E)}, {"tol", fd(tol)}};
    t.columns = {"k0_star"};
    t.add_row({fd(k0_star)});
    return emit(t, oo);
  } catch (const physics_error& err) {
    emit_error(err.label(), oo);
    return exit_physics;
  }
}

// ---------------------------------------------------------------------------
// planewave: perturbative vs contour exponent for a pulse shape

struct PlaneWaveOpts {
  std::string shape = "sin";
  double E0 = 0.0;
  double omega = 0.0;  // 0: auto-pick xi = 100
  double k0 = 0.0;
};

int run_planewave(const PlaneWaveOpts& po, const OutputOpts& oo) {
  try {
    const FieldConfig defaults;
    const double omega =
        po.omega > 0.0
            ? po.omega
            : defaults.e * std::abs(po.E0) / (100.0 * defaults.m);
    const PlaneWaveSetup setup = make_symmetric_setup(
        po.E0, omega, po.k0,
        po.shape == "linear" ? PulseShape::linear() : PulseShape::sinusoid());
    const double xi = xi_parameter(setup);
    if (xi < 10.0)
      std::cerr << "warning: xi = " << xi
                << " below 10; the first-order saddle expansion is rough\n";
    const std::complex<double> pert = sigma_w_perturbative(setup);
    const ContourResult cont = sigma_w_contour(setup);
    const double rel = std::abs(cont.sigma_w - pert) / std::abs(cont.sigma_w);

    Table t;
    t.meta = {{"E0", fd(po.E0)},          {"omega_L", fd(omega)},
              {"k0", fd(po.k0)},          {"shape", setup.pulse.name},
              {"lambda_p", fd(setup.electron.lambda)},
              {"lambda_q", fd(setup.positron.lambda)}};
    t.columns = {"shape",
                 "xi",
                 "im_sigma_w_perturbative",
                 "im_sigma_w_contour",
                 "relative_deviation",
                 "probability_exponent",
                 "eta_s_re",
                 "eta_s_im"};
    t.add_row({setup.pulse.name, fd(xi), fd(pert.imag()),
               fd(cont.sigma_w.imag()), fd(rel), fd(2.0 * cont.sigma_w.imag()),
               fd(cont.eta_s.real()), fd(cont.eta_s.imag())});
    return emit(t, oo);
  } catch (const physics_error& err) {
    emit_error(err.label(), oo);
    return exit_physics;
  }
}

// ---------------------------------------------------------------------------
// validate: closed form vs quadrature oracle across all regimes

struct ValidateCase {
  double E, B, k0;
  int kz;
  double p_y, p_z;
};

std::vector<ValidateCase> validate_grid() {
  std::vector<ValidateCase> grid;
  // electric-dominated, with and without photon and transverse momentum
  for (const double E : {0.05, 0.1, 0.3})
    for (const double br : {0.0, 0.5, -0.5, 0.9})
      for (const double k0 : {0.0, 0.5, 1.0})
        for (const double pz : {0.0, -0.3})
          grid.push_back({E, br * E, k0, -1, pz == 0.0 ? 0.0 : 0.2, pz});
  // light-like, photon forced to counterpropagate the field's motion
  for (const double E : {0.05, 0.2})
    for (const double k0 : {0.5, 1.0})
      for (const double pz : {0.0, 0.3}) {
        grid.push_back({E, E, k0, -1, 0.0, pz});
        grid.push_back({E, -E, k0, 1, 0.1, pz});
      }
  // magnetic-dominated, photon above threshold
  for (const double B : {0.1, 0.3})
    for (const double er : {0.0, 0.4, -0.4})
      for (const double k0 : {2.2, 3.0})
        grid.push_back({er * B, B, k0, -1, 0.0, 0.1});
  return grid;
}

int run_validate(double threshold_flag, bool threshold_given,
                 const OutputOpts& oo) {
  double threshold = threshold_given ? threshold_flag : env_tol(1e-6);
  const auto grid = validate_grid();

  struct Outcome {
    bool evaluated = false;
    ValidateCase c{};
    double closed = 0.0, oracle = 0.0, rel = 0.0;
    bool pass = false;
  };
  std::vector<Outcome> outcomes(grid.size());
  const FieldConfig defaults;
  const double abs_tol = threshold * 1e-3 * defaults.m * defaults.m;

  parallel_for_index(grid.size(), [&](std::size_t i) {
    const ValidateCase& c = grid[i];
    Outcome& o = outcomes[i];
    o.c = c;
    FieldConfig config;
    config.E = c.E;
    config.B = c.B;
    PhotonState photon;
    photon.k0 = c.k0;
    photon.kz_sign = c.k0 > 0.0 ? c.kz : 0;
    try {
      const ExitState electron = make_exit_state(c.p_y, c.p_z, config);
      TunnelingSolution sol = assemble_solution(electron, photon, config);
      const ExponentResult closed = probability_exponent(sol, config, photon);
      const OracleResult oracle = integrate_w(sol, config, abs_tol);
      o.closed = closed.total_im;
      o.oracle = oracle.w_minus_im + oracle.w_plus_im;
      o.rel = std::abs(o.closed - o.oracle) /
              std::max(std::abs(o.closed), 1e-300);
      o.pass = o.rel <= threshold;
      o.evaluated = true;
    } catch (const physics_error&) {
      // genuinely forbidden corner of the grid: skipped, not failed
    }
  });

  Table t;
  t.meta = {{"threshold", fd(threshold)}, {"oracle_abs_tol", fd(abs_tol)}};
  t.columns = {"E",  "B",   "k0",     "kz_sign", "p_y",  "p_z",
               "closed_im", "oracle_im", "rel_err", "pass"};
  int evaluated = 0, passed = 0;
  for (const Outcome& o : outcomes) {
    if (!o.evaluated) continue;
    ++evaluated;
    passed += o.pass;
    t.add_row({fd(o.c.E), fd(o.c.B), fd(o.c.k0), std::to_string(o.c.kz),
               fd(o.c.p_y), fd(o.c.p_z), fd(o.closed), fd(o.oracle),
               fd(o.rel), o.pass ? "true" : "false"});
  }
  const int rc = emit(t, oo);
  std::cerr << "validate: " << passed << "/" << evaluated
            << " evaluated tuples within " << fd(threshold) << "\n";
  if (rc != exit_ok) return rc;
  return passed == evaluated && evaluated >= 50 ? exit_ok : 1;
}

// ---------------------------------------------------------------------------
// --config: JSON object injected as flag tokens right after the subcommand,
// so explicit command-line flags override it (TakeLast policy).

int splice_config(std::vector<std::string>& args) {
  std::string path;
  for (auto it = args.begin(); it != args.end();) {
    if (*it == "--config") {
      if (std::next(it) == args.end()) {
        std::cerr << "error: --config needs a file argument\n";
        return exit_usage;
      }
      path = *std::next(it);
      it = args.erase(it, std::next(it, 2));
    } else if (it->rfind("--config=", 0) == 0) {
      path = it->substr(9);
      it = args.erase(it);
    } else {
      ++it;
    }
  }
  if (path.empty()) return exit_ok;
  if (args.empty()) {
    std::cerr << "error: --config needs a subcommand\n";
    return exit_usage;
  }
  std::ifstream file(path);
  if (!file) {
    std::cerr << "error: cannot open config '" << path << "'\n";
    return exit_io;
  }
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(file);
    if (!j.is_object()) throw std::runtime_error("top level must be an object");
  } catch (const std::exception& err) {
    std::cerr << "error: malformed config '" << path << "': " << err.what()
              << "\n";
    return exit_usage;
  }
  std::vector<std::string> tokens;
  for (const auto& [key, value] : j.items()) {
    if (value.is_boolean()) {
      if (value.get<bool>()) tokens.push_back("--" + key);
    } else {
      tokens.push_back("--" + key);
      tokens.push_back(value.is_string() ? value.get<std::string>()
                                         : value.dump());
    }
  }
  args.insert(args.begin() + 1, tokens.begin(), tokens.end());
  return exit_ok;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"semiclassical pair-creation suppression exponents in constant "
               "crossed fields"};
  app.option_defaults()->multi_option_policy(CLI::MultiOptionPolicy::TakeLast);
  app.require_subcommand(1);
  std::string config_doc;
  app.add_option("--config", config_doc,
                 "JSON file with default flag values for the subcommand "
                 "(explicit flags win)");

  SetupOpts exp_setup;
  OutputOpts exp_out;
  auto* cmd_exp = app.add_subcommand(
      "exponent", "suppression exponent for one explicit configuration");
  add_setup_opts(cmd_exp, exp_setup);
  add_output_opts(cmd_exp, exp_out);

  SetupOpts pic_setup;
  OutputOpts pic_out;
  int pic_samples = 201;
  auto* cmd_pic = app.add_subcommand(
      "picture", "energy picture and Im z sampled along the barrier");
  add_setup_opts(cmd_pic, pic_setup);
  cmd_pic->add_option("--samples", pic_samples, "grid samples [201]");
  add_output_opts(cmd_pic, pic_out);

  MaxProbOpts mp;
  OutputOpts mp_out;
  auto* cmd_mp = app.add_subcommand(
      "maxprob", "most probable symmetric exit momenta (direct or beta sweep)");
  cmd_mp->add_option("--E", mp.E, "electric field (sweep: fixed E)");
  cmd_mp->add_option("--B", mp.B, "magnetic field (direct mode only)");
  cmd_mp->add_option("--k0", mp.k0, "photon energy")
      ->check(CLI::NonNegativeNumber);
  cmd_mp->add_option("--kz", mp.kz, "photon direction (direct mode) [+1]")
      ->check(CLI::IsMember({-1, 1}));
  auto* opt_beta = cmd_mp->add_option(
      "--beta", mp.beta, "field ratio B = -beta E, photon along +z");
  cmd_mp->add_option("--beta-min", mp.beta_min, "sweep start [0]");
  cmd_mp->add_option("--beta-max", mp.beta_max, "sweep end [1]");
  auto* opt_beta_count =
      cmd_mp->add_option("--beta-count", mp.beta_count, "sweep grid points")
          ->check(CLI::PositiveNumber);
  cmd_mp->add_flag("--serial", mp.serial, "use the serial reference sweep");
  add_output_opts(cmd_mp, mp_out);

  OptimalBetaOpts ob;
  OutputOpts ob_out;
  auto* cmd_ob = app.add_subcommand(
      "optimal-beta", "beta in [0,1] minimizing the exponent at fixed E, k0");
  cmd_ob->add_option("--E", ob.E, "fixed electric field");
  cmd_ob->add_option("--k0", ob.k0, "photon energy")
      ->check(CLI::NonNegativeNumber);
  cmd_ob->add_option("--k0-min", ob.k0_min, "grid start [0]");
  cmd_ob->add_option("--k0-max", ob.k0_max, "grid end [1]");
  cmd_ob->add_option("--k0-count", ob.k0_count, "grid points")
      ->check(CLI::PositiveNumber);
  cmd_ob->add_option("--beta-tol", ob.beta_tol, "golden-section tol [1e-6]");
  add_output_opts(cmd_ob, ob_out);

  double ck_E = 0.0, ck_tol = 1e-5;
  OutputOpts ck_out;
  auto* cmd_ck = app.add_subcommand(
      "critical-k", "photon energy above which beta = 1 is optimal");
  cmd_ck->add_option("--E", ck_E, "fixed electric field");
  cmd_ck->add_option("--tol", ck_tol, "bisection tolerance on k0 [1e-5]");
  add_output_opts(cmd_ck, ck_out);

  PlaneWaveOpts pw;
  OutputOpts pw_out;
  auto* cmd_pw = app.add_subcommand(
      "planewave", "perturbative vs contour exponent in a plane-wave pulse");
  cmd_pw->add_option("--shape", pw.shape, "pulse shape [sin]")
      ->check(CLI::IsMember({"sin", "linear"}));
  cmd_pw->add_option("--E", pw.E0, "peak field E0");
  cmd_pw->add_option("--omega", pw.omega,
                     "laser frequency (default: auto, xi = 100)");
  cmd_pw->add_option("--k0", pw.k0, "photon energy (counterpropagating)")
      ->check(CLI::NonNegativeNumber);
  add_output_opts(cmd_pw, pw_out);

  double val_tol = 1e-6;
  OutputOpts val_out;
  auto* cmd_val = app.add_subcommand(
      "validate", "closed form vs quadrature oracle across all regimes");
  auto* opt_val_tol =
      cmd_val->add_option("--tol", val_tol, "relative pass threshold [1e-6]");
  add_output_opts(cmd_val, val_out);

  std::vector<std::string> args(argv + 1, argv + argc);
  const int spliced = splice_config(args);
  if (spliced != exit_ok) return spliced;
  std::reverse(args.begin(), args.end());

  try {
    app.parse(args);
    if (*cmd_exp) return run_exponent(exp_setup, exp_out);
    if (*cmd_pic) return run_picture(pic_setup, pic_samples, pic_out);
    if (*cmd_mp) {
      const bool sweep_mode =
          opt_beta->count() > 0 || opt_beta_count->count() > 0;
      return run_maxprob(mp, sweep_mode, mp_out);
    }
    if (*cmd_ob) return run_optimal_beta(ob, ob_out);
    if (*cmd_ck) return run_critical_k(ck_E, ck_tol, ck_out);
    if (*cmd_pw) return run_planewave(pw, pw_out);
    if (*cmd_val)
      return run_validate(val_tol, opt_val_tol->count() > 0, val_out);
    return exit_usage;
  } catch (const CLI::ParseError& e) {
    if (e.get_name() == "CallForHelp" || e.get_name() == "CallForAllHelp" ||
        e.get_name() == "CallForVersion")
      return app.exit(e);
    std::cerr << "error: " << e.what() << "\n";
    return exit_usage;
  } catch (const physics_error& err) {
    std::cerr << "error: " << err.what() << "\n";
    return exit_physics;
  } catch (const std::invalid_argument& err) {
    std::cerr << "error: " << err.what() << "\n";
    return exit_usage;
  } catch (const std::exception& err) {
    std::cerr << "error: " << err.what() << "\n";
    return exit_io;
  }
}
