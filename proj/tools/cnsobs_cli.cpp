// cnsobs command line front end.  Talks to the shared library exclusively
// through the C interface in cnsobs.h.
//
//   cnsobs run <scenario-config> [--set key=value]... [--out dir] [--workers n]
//   cnsobs design --rate D --cutoff K [--observe velocity|density] [params...]
//   cnsobs theory --phi-u X --phi-rho Y --mode k [params...]
//
// Exit code 0 on success; on failure a single machine-parsable line
// "error: <context>: <message>" goes to stderr and the exit code is nonzero.

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <memory>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "cnsobs.h"

namespace {

int fail(const std::string& context) {
  std::fprintf(stderr, "error: %s: %s\n", context.c_str(), cnsobs_last_error());
  return 1;
}

struct ParamFlags {
  double gamma = 1.4;
  double mu = 0.025;
  double lambda = 0.0;
  double rho0 = 1.0;
  int dim = 1;

  void attach(CLI::App* app) {
    app->add_option("--gamma", gamma, "adiabatic exponent");
    app->add_option("--mu", mu, "first Lame parameter");
    app->add_option("--lambda", lambda, "second Lame parameter");
    app->add_option("--rho0", rho0, "equilibrium density");
    app->add_option("--dim", dim, "spatial dimension");
  }
};

using ParamsPtr = std::unique_ptr<cnsobs_params, decltype(&cnsobs_params_destroy)>;
using KernelsPtr =
    std::unique_ptr<cnsobs_kernels, decltype(&cnsobs_kernels_destroy)>;

std::string cell_str(double v) {
  if (std::isnan(v)) return "-";
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.3f", v);
  return buf;
}

int cmd_run(const std::string& config, const std::vector<std::string>& sets,
            const std::string& out_dir, int workers) {
  cnsobs_scenario* scen = nullptr;
  if (cnsobs_scenario_create(config.c_str(), &scen) != CNSOBS_OK)
    return fail("run: " + config);
  std::unique_ptr<cnsobs_scenario, decltype(&cnsobs_scenario_destroy)> guard(
      scen, cnsobs_scenario_destroy);

  for (const std::string& kv : sets) {
    const size_t eq = kv.find('=');
    if (eq == std::string::npos) {
      std::fprintf(stderr, "error: --set: expected key=value, got '%s'\n",
                   kv.c_str());
      return 1;
    }
    if (cnsobs_scenario_set(scen, kv.substr(0, eq).c_str(),
                            kv.substr(eq + 1).c_str()) != CNSOBS_OK)
      return fail("--set " + kv);
  }

  cnsobs_table* table = nullptr;
  if (cnsobs_scenario_run(scen, out_dir.empty() ? nullptr : out_dir.c_str(),
                          workers, &table) != CNSOBS_OK)
    return fail("run");
  std::unique_ptr<cnsobs_table, decltype(&cnsobs_table_destroy)> tguard(
      table, cnsobs_table_destroy);

  int rows = 0, cols = 0;
  cnsobs_table_shape(table, &rows, &cols);
  for (int c = 0; c < cols; ++c)
    std::printf("%s%s", c ? "  " : "", cnsobs_table_column(table, c));
  std::printf("  status\n");
  bool any_row_failed = false;
  for (int r = 0; r < rows; ++r) {
    for (int c = 0; c < cols; ++c) {
      double v = 0;
      cnsobs_table_cell(table, r, c, &v);
      std::printf("%s%s", c ? "  " : "", cell_str(v).c_str());
    }
    const char* status = cnsobs_table_row_status(table, r);
    std::printf("  %s\n", status);
    if (std::string(status) != "ok") any_row_failed = true;
  }
  if (!out_dir.empty()) std::printf("# results written under %s\n", out_dir.c_str());
  if (any_row_failed) {
    std::fprintf(stderr, "error: run: one or more sweep rows failed\n");
    return 1;
  }
  return 0;
}

int cmd_design(const ParamFlags& pf, double rate, double cutoff,
               const std::string& observe) {
  cnsobs_params* p = nullptr;
  if (cnsobs_params_create(pf.gamma, pf.mu, pf.lambda, pf.rho0, pf.dim, &p) !=
      CNSOBS_OK)
    return fail("design: params");
  ParamsPtr pguard(p, cnsobs_params_destroy);

  const cnsobs_observed target = observe == "density" ? CNSOBS_OBSERVE_DENSITY
                                                      : CNSOBS_OBSERVE_VELOCITY;
  cnsobs_kernels* k = nullptr;
  if (cnsobs_kernels_design(p, target, rate, cutoff, &k) != CNSOBS_OK)
    return fail("design");
  KernelsPtr kguard(k, cnsobs_kernels_destroy);

  const char* name_rho = target == CNSOBS_OBSERVE_DENSITY ? "psi_rho" : "phi_rho";
  const char* name_u = target == CNSOBS_OBSERVE_DENSITY ? "psi_u" : "phi_u";
  std::printf("k  %s  %s  decay_rate  period\n", name_rho, name_u);

  // print every mode with a nonzero coefficient, plus one beyond the cutoff
  double consts[8];
  if (cnsobs_constants(p, consts) != CNSOBS_OK) return fail("design: constants");
  const double c1 = consts[0], c2 = consts[1];
  double qmax = std::max(cutoff * cutoff, 2.0 * rate / (c1 + c2));
  if (pf.dim >= 2) qmax = std::max(qmax, rate / c1);
  const int last_mode = static_cast<int>(std::ceil(std::sqrt(qmax))) + 1;
  for (int mode = 1; mode <= last_mode; ++mode) {
    int wave = mode;
    double cr = 0, cu = 0;
    if (cnsobs_kernels_get(k, &wave, 1, &cr, &cu) != CNSOBS_OK)
      return fail("design: kernels_get");
    cnsobs_mode_eigen eig{};
    if (cnsobs_eigen_closed_form(p, k, &wave, 1, &eig) != CNSOBS_OK)
      return fail("design: eigen");
    std::printf("%d  %.3f  %.3f  %.3f  %s\n", mode, cr, cu, eig.decay_rate,
                eig.has_period ? cell_str(eig.period).c_str() : "-");
    if (cr == 0 && cu == 0 && mode > static_cast<int>(cutoff)) break;
  }
  return 0;
}

int cmd_theory(const ParamFlags& pf, double phi_u, double phi_rho, int mode,
               const std::string& observe) {
  cnsobs_params* p = nullptr;
  if (cnsobs_params_create(pf.gamma, pf.mu, pf.lambda, pf.rho0, pf.dim, &p) !=
      CNSOBS_OK)
    return fail("theory: params");
  ParamsPtr pguard(p, cnsobs_params_destroy);

  const cnsobs_observed target = observe == "density" ? CNSOBS_OBSERVE_DENSITY
                                                      : CNSOBS_OBSERVE_VELOCITY;
  cnsobs_kernels* k = nullptr;
  if (cnsobs_kernels_flat(target, phi_rho, phi_u, std::max(std::abs(mode), 1), 1,
                          &k) != CNSOBS_OK)
    return fail("theory: kernels");
  KernelsPtr kguard(k, cnsobs_kernels_destroy);

  std::vector<int> wave(static_cast<size_t>(pf.dim), 0);
  wave[0] = mode;
  cnsobs_mode_eigen eig{};
  if (cnsobs_eigen_closed_form(p, k, wave.data(), pf.dim, &eig) != CNSOBS_OK)
    return fail("theory");

  std::printf("mode k=%d\n", mode);
  if (eig.has_diff) std::printf("lambda_d      %.3f\n", eig.lambda_diff);
  std::printf("lambda_plus   %.3f %+.3fi\n", eig.lambda_plus_re,
              eig.lambda_plus_im);
  std::printf("lambda_minus  %.3f %+.3fi\n", eig.lambda_minus_re,
              eig.lambda_minus_im);
  std::printf("discriminant  %.3f\n", eig.discriminant);
  std::printf("decay_rate    %.3f\n", eig.decay_rate);
  std::printf("period        %s\n",
              eig.has_period ? cell_str(eig.period).c_str() : "-");
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"observer design and validation for 1D compressible Navier-Stokes"};
  app.require_subcommand(1);

  // run
  auto* run = app.add_subcommand("run", "run a scenario sweep");
  std::string config, out_dir;
  std::vector<std::string> sets;
  int workers = 1;
  run->add_option("scenario-config", config,
                  "scenario id or path to a config file")
      ->required();
  run->add_option("--set", sets, "override a config key (key=value)");
  run->add_option("--out", out_dir, "output directory for CSV files");
  run->add_option("--workers", workers, "parallel sweep workers");

  // design
  auto* design = app.add_subcommand("design", "print designed kernel coefficients");
  double rate = 0, cutoff = 0;
  std::string observe = "velocity";
  ParamFlags design_params;
  design->add_option("--rate", rate, "target decay rate")->required();
  design->add_option("--cutoff", cutoff, "mode cutoff K")->required();
  design->add_option("--observe", observe, "velocity|density");
  design_params.attach(design);

  // theory
  auto* theory = app.add_subcommand("theory", "print closed-form mode eigenvalues");
  double phi_u = 0, phi_rho = 0;
  int mode = 1;
  std::string theory_observe = "velocity";
  ParamFlags theory_params;
  theory->add_option("--phi-u", phi_u, "velocity feedback coefficient")->required();
  theory->add_option("--phi-rho", phi_rho, "density feedback coefficient")
      ->required();
  theory->add_option("--mode", mode, "Fourier mode k")->required();
  theory->add_option("--observe", theory_observe, "velocity|density");
  theory_params.attach(theory);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);  // --help
    std::fprintf(stderr, "error: arguments: %s\n", e.what());
    return 1;
  }

  if (run->parsed()) return cmd_run(config, sets, out_dir, workers);
  if (design->parsed()) return cmd_design(design_params, rate, cutoff, observe);
  if (theory->parsed())
    return cmd_theory(theory_params, phi_u, phi_rho, mode, theory_observe);
  return 1;
}
