#ifndef CNSOBS_SCENARIO_HPP
#define CNSOBS_SCENARIO_HPP

#include <string>
#include <vector>

#include "cnsobs/observer.hpp"

namespace cnsobs {

enum class ScenarioId {
  table1,
  table2,
  partial_obs,
  partial_obs_mean_fix,
  forced,
  nonlinear,
  density_obs,
  kernel_design_demo,
};

const char* to_string(ScenarioId id);
ScenarioId scenario_from_string(const std::string& s);

// One experiment = one key-value config.  Every field has a scenario default
// reproducing the reference configuration (100 cells, dt 1e-3, gamma 1.4,
// nu 0.05, T 5, perturbation 5e-2 quasi-linear / 5e-1 nonlinear); individual
// keys can be overridden from the file or --set flags.
struct ScenarioConfig {
  ScenarioId id = ScenarioId::table1;
  FluidParams params;
  GridSpec grid;
  TimeStepper stepper;

  double final_time = 5.0;
  int mode_k = 1;
  double amplitude = 0.05;
  double mean_offset = 0.0;

  bool nonlinear_model = true;
  ObservedVar observed = ObservedVar::velocity;
  double obs_length = 1.0;
  bool mean_correction = false;
  double mean_gain = 1.0;
  bool forcing_known = false;
  FluxScheme flux = FluxScheme::vfroe;

  // flat kernels unless designed_kernels is set
  double phi_u = 0.0;
  double phi_rho = 0.0;
  int kernel_kmax = 50;
  bool designed_kernels = false;
  double design_rate = 10.0;
  double design_cutoff = 3.0;
  bool unsafe_negative_kernels = false;

  double forcing_c = 1.0;
  double forcing_omega = 1.0;

  // fit window; negative start/end mean the default [0.1 T, T]
  double fit_t_start = -1.0;
  double fit_t_end = -1.0;
  double steady_t_min = -1.0;  // default 0.75 T

  std::string sweep_param;
  std::vector<double> sweep_values;

  void set(const std::string& key, const std::string& value);
  std::string serialize() const;
  void validate() const;

  ObserverConfig observer_config() const;  // with the row kernels built in
  KernelCoeffs build_kernels() const;
};

ScenarioConfig default_scenario(ScenarioId id);
// Text is `key = value` lines with # comments; the scenario key selects the
// defaults, every other key overrides them.
ScenarioConfig parse_scenario(const std::string& text);
ScenarioConfig load_scenario_file(const std::string& path);

struct ResultTable {
  std::vector<std::string> columns;
  std::vector<std::vector<double>> rows;
  std::vector<std::string> status;  // "ok" or the per-row failure
};

struct ScenarioResult {
  ScenarioConfig config;
  ResultTable summary;
  std::vector<PairedRun> traces;      // one per sweep row
  std::vector<std::string> trace_names;
};

// Runs one paired simulation per sweep value (in parallel up to `workers`,
// results kept in sweep order), pairs fitted rates with the closed-form
// references, and collects the summary table.  Per-row solver failures land
// in the row status; the sweep continues.
ScenarioResult run_scenario(const ScenarioConfig& config, int workers = 1);

// Writes <out_dir>/<scenario>/<param>=<value>.csv traces and a summary.csv,
// deterministic names and full double precision.
void emit_plot_data(const ScenarioResult& result, const std::string& out_dir);

}  // namespace cnsobs

#endif
