#include "cnsobs/scenario.hpp"

#include <atomic>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <limits>
#include <sstream>
#include <stdexcept>
#include <thread>

#include "cnsobs/analysis.hpp"

namespace cnsobs {

namespace {

constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();

std::string format_full(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

std::string format_short(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%g", v);
  return buf;
}

double parse_double(const std::string& key, const std::string& value) {
  try {
    size_t pos = 0;
    const double v = std::stod(value, &pos);
    if (pos != value.size()) throw std::invalid_argument("");
    return v;
  } catch (...) {
    throw std::invalid_argument(key + ": cannot parse number '" + value + "'");
  }
}

int parse_int(const std::string& key, const std::string& value) {
  try {
    size_t pos = 0;
    const int v = std::stoi(value, &pos);
    if (pos != value.size()) throw std::invalid_argument("");
    return v;
  } catch (...) {
    throw std::invalid_argument(key + ": cannot parse integer '" + value + "'");
  }
}

bool parse_bool(const std::string& key, const std::string& value) {
  if (value == "on" || value == "true" || value == "1") return true;
  if (value == "off" || value == "false" || value == "0") return false;
  throw std::invalid_argument(key + ": expected on/off, got '" + value + "'");
}

std::string trim(const std::string& s) {
  size_t a = s.find_first_not_of(" \t\r\n");
  if (a == std::string::npos) return "";
  size_t b = s.find_last_not_of(" \t\r\n");
  return s.substr(a, b - a + 1);
}

}  // namespace

const char* to_string(ScenarioId id) {
  switch (id) {
    case ScenarioId::table1: return "table1";
    case ScenarioId::table2: return "table2";
    case ScenarioId::partial_obs: return "partial_obs";
    case ScenarioId::partial_obs_mean_fix: return "partial_obs_mean_fix";
    case ScenarioId::forced: return "forced";
    case ScenarioId::nonlinear: return "nonlinear";
    case ScenarioId::density_obs: return "density_obs";
    case ScenarioId::kernel_design_demo: return "kernel_design_demo";
  }
  return "?";
}

ScenarioId scenario_from_string(const std::string& s) {
  for (ScenarioId id :
       {ScenarioId::table1, ScenarioId::table2, ScenarioId::partial_obs,
        ScenarioId::partial_obs_mean_fix, ScenarioId::forced,
        ScenarioId::nonlinear, ScenarioId::density_obs,
        ScenarioId::kernel_design_demo})
    if (s == to_string(id)) return id;
  throw std::invalid_argument("scenario: unknown id '" + s + "'");
}

ScenarioConfig default_scenario(ScenarioId id) {
  ScenarioConfig c;
  c.id = id;
  c.params = FluidParams{};  // gamma 1.4, mu 0.025, lam 0 (nu 0.05), rho0 1, 1D
  c.grid.n_cells = 100;
  c.stepper.cfl = 0.9;
  c.stepper.dt_max = 1e-3;
  c.stepper.strict = true;

  switch (id) {
    case ScenarioId::table1:
      c.sweep_param = "phi_u";
      c.sweep_values = {0, 0.1, 0.5, 1, 5, 10, 12.895, 15, 20};
      break;
    case ScenarioId::table2:
      c.phi_u = 20.0;
      c.sweep_param = "phi_rho";
      c.sweep_values = {0, 0.5, 1.184, 1.5, 5, 10};
      break;
    case ScenarioId::partial_obs:
      c.phi_u = 10.0;
      c.phi_rho = 0.5;
      c.sweep_param = "obs_length";
      c.sweep_values = {0.1, 0.2, 0.3, 0.4, 0.5, 0.6, 0.7, 0.8, 0.9, 1.0};
      break;
    case ScenarioId::partial_obs_mean_fix:
      c.phi_u = 10.0;
      c.phi_rho = 0.5;
      c.mean_correction = true;
      c.mean_offset = 0.02;
      c.sweep_param = "obs_length";
      c.sweep_values = {0.1, 0.2, 0.3, 0.4, 0.5, 0.6, 0.7, 0.8, 0.9, 1.0};
      break;
    case ScenarioId::forced:
      c.nonlinear_model = false;
      c.amplitude = 0.0;
      c.final_time = 8.0;
      c.sweep_param = "phi_u";
      c.sweep_values = {0, 2, 4};
      break;
    case ScenarioId::nonlinear:
      c.amplitude = 0.5;
      c.phi_u = 10.0;
      c.phi_rho = 0.2;
      c.fit_t_start = 0.5;
      c.fit_t_end = 3.5;
      c.sweep_param = "mode_k";
      c.sweep_values = {1, 3};
      break;
    case ScenarioId::density_obs:
      c.observed = ObservedVar::density;
      c.designed_kernels = true;
      c.design_rate = 5.0;
      c.design_cutoff = 3.0;
      c.sweep_param = "mode_k";
      c.sweep_values = {1, 2, 3};
      break;
    case ScenarioId::kernel_design_demo:
      c.nonlinear_model = false;
      c.designed_kernels = true;
      c.design_rate = 10.0;
      c.design_cutoff = 3.0;
      c.fit_t_start = 1.5;
      c.fit_t_end = 4.5;
      c.sweep_param = "mode_k";
      c.sweep_values = {1, 2, 3};
      break;
  }
  return c;
}

void ScenarioConfig::set(const std::string& key, const std::string& value) {
  if (key == "scenario") {
    id = scenario_from_string(value);
  } else if (key == "gamma") {
    params.gamma = parse_double(key, value);
  } else if (key == "mu") {
    params.mu = parse_double(key, value);
  } else if (key == "lambda") {
    params.lam = parse_double(key, value);
  } else if (key == "rho0") {
    params.rho0 = parse_double(key, value);
  } else if (key == "n_cells") {
    grid.n_cells = parse_int(key, value);
  } else if (key == "cfl") {
    stepper.cfl = parse_double(key, value);
  } else if (key == "dt_max") {
    stepper.dt_max = parse_double(key, value);
  } else if (key == "strict_cfl") {
    stepper.strict = parse_bool(key, value);
  } else if (key == "T") {
    final_time = parse_double(key, value);
  } else if (key == "mode_k") {
    mode_k = parse_int(key, value);
  } else if (key == "amplitude") {
    amplitude = parse_double(key, value);
  } else if (key == "mean_offset") {
    mean_offset = parse_double(key, value);
  } else if (key == "model") {
    if (value == "nonlinear") nonlinear_model = true;
    else if (value == "linear") nonlinear_model = false;
    else throw std::invalid_argument("model: expected linear|nonlinear");
  } else if (key == "observed") {
    if (value == "velocity") observed = ObservedVar::velocity;
    else if (value == "density") observed = ObservedVar::density;
    else throw std::invalid_argument("observed: expected velocity|density");
  } else if (key == "obs_length") {
    obs_length = parse_double(key, value);
  } else if (key == "mean_correction") {
    mean_correction = parse_bool(key, value);
  } else if (key == "mean_gain") {
    mean_gain = parse_double(key, value);
  } else if (key == "forcing_known") {
    forcing_known = parse_bool(key, value);
  } else if (key == "flux") {
    if (value == "vfroe") flux = FluxScheme::vfroe;
    else if (value == "llf") flux = FluxScheme::llf;
    else throw std::invalid_argument("flux: expected vfroe|llf");
  } else if (key == "phi_u") {
    phi_u = parse_double(key, value);
  } else if (key == "phi_rho") {
    phi_rho = parse_double(key, value);
  } else if (key == "kernel_kmax") {
    kernel_kmax = parse_int(key, value);
  } else if (key == "designed_kernels") {
    designed_kernels = parse_bool(key, value);
  } else if (key == "design_rate") {
    design_rate = parse_double(key, value);
  } else if (key == "design_cutoff") {
    design_cutoff = parse_double(key, value);
  } else if (key == "unsafe_negative_kernels") {
    unsafe_negative_kernels = parse_bool(key, value);
  } else if (key == "forcing_c") {
    forcing_c = parse_double(key, value);
  } else if (key == "forcing_omega") {
    forcing_omega = parse_double(key, value);
  } else if (key == "fit_t_start") {
    fit_t_start = parse_double(key, value);
  } else if (key == "fit_t_end") {
    fit_t_end = parse_double(key, value);
  } else if (key == "steady_t_min") {
    steady_t_min = parse_double(key, value);
  } else if (key == "sweep_param") {
    sweep_param = value;
  } else if (key == "sweep_values") {
    sweep_values.clear();
    std::stringstream ss(value);
    std::string item;
    while (std::getline(ss, item, ',')) {
      item = trim(item);
      if (!item.empty()) sweep_values.push_back(parse_double(key, item));
    }
    if (sweep_values.empty())
      throw std::invalid_argument("sweep_values: empty list");
  } else {
    throw std::invalid_argument("unknown key '" + key + "'");
  }
}

std::string ScenarioConfig::serialize() const {
  std::ostringstream os;
  os << "scenario = " << to_string(id) << "\n";
  os << "gamma = " << format_full(params.gamma) << "\n";
  os << "mu = " << format_full(params.mu) << "\n";
  os << "lambda = " << format_full(params.lam) << "\n";
  os << "rho0 = " << format_full(params.rho0) << "\n";
  os << "n_cells = " << grid.n_cells << "\n";
  os << "cfl = " << format_full(stepper.cfl) << "\n";
  os << "dt_max = " << format_full(stepper.dt_max) << "\n";
  os << "strict_cfl = " << (stepper.strict ? "on" : "off") << "\n";
  os << "T = " << format_full(final_time) << "\n";
  os << "mode_k = " << mode_k << "\n";
  os << "amplitude = " << format_full(amplitude) << "\n";
  os << "mean_offset = " << format_full(mean_offset) << "\n";
  os << "model = " << (nonlinear_model ? "nonlinear" : "linear") << "\n";
  os << "observed = "
     << (observed == ObservedVar::velocity ? "velocity" : "density") << "\n";
  os << "obs_length = " << format_full(obs_length) << "\n";
  os << "mean_correction = " << (mean_correction ? "on" : "off") << "\n";
  os << "mean_gain = " << format_full(mean_gain) << "\n";
  os << "forcing_known = " << (forcing_known ? "on" : "off") << "\n";
  os << "flux = " << (flux == FluxScheme::vfroe ? "vfroe" : "llf") << "\n";
  os << "phi_u = " << format_full(phi_u) << "\n";
  os << "phi_rho = " << format_full(phi_rho) << "\n";
  os << "kernel_kmax = " << kernel_kmax << "\n";
  os << "designed_kernels = " << (designed_kernels ? "on" : "off") << "\n";
  os << "design_rate = " << format_full(design_rate) << "\n";
  os << "design_cutoff = " << format_full(design_cutoff) << "\n";
  os << "unsafe_negative_kernels = " << (unsafe_negative_kernels ? "on" : "off")
     << "\n";
  os << "forcing_c = " << format_full(forcing_c) << "\n";
  os << "forcing_omega = " << format_full(forcing_omega) << "\n";
  os << "fit_t_start = " << format_full(fit_t_start) << "\n";
  os << "fit_t_end = " << format_full(fit_t_end) << "\n";
  os << "steady_t_min = " << format_full(steady_t_min) << "\n";
  os << "sweep_param = " << sweep_param << "\n";
  os << "sweep_values = ";
  for (size_t i = 0; i < sweep_values.size(); ++i)
    os << (i ? "," : "") << format_full(sweep_values[i]);
  os << "\n";
  return os.str();
}

void ScenarioConfig::validate() const {
  params.validate();
  grid.validate();
  if (!(final_time > 0)) throw std::invalid_argument("T: must be positive");
  if (mode_k < 1 || mode_k > grid.n_cells / 2)
    throw std::invalid_argument("mode_k: must be in 1..n_cells/2");
  if (kernel_kmax < 1 || kernel_kmax > grid.n_cells / 2)
    throw std::invalid_argument("kernel_kmax: must be in 1..n_cells/2");
  if (!(stepper.dt_max > 0)) throw std::invalid_argument("dt_max: must be positive");
  if (!(stepper.cfl > 0)) throw std::invalid_argument("cfl: must be positive");
  if (!std::isfinite(amplitude))
    throw std::invalid_argument("amplitude: must be finite");
  if (sweep_param != "phi_u" && sweep_param != "phi_rho" &&
      sweep_param != "obs_length" && sweep_param != "mode_k")
    throw std::invalid_argument(
        "sweep_param: expected phi_u|phi_rho|obs_length|mode_k");
  if (sweep_values.empty())
    throw std::invalid_argument("sweep_values: empty list");
}

KernelCoeffs ScenarioConfig::build_kernels() const {
  if (designed_kernels)
    return observed == ObservedVar::velocity
               ? design_kernels_velocity(design_rate, design_cutoff, params)
               : design_kernels_density(design_rate, design_cutoff, params);
  return KernelCoeffs::flat(observed, phi_rho, phi_u, kernel_kmax,
                            unsafe_negative_kernels);
}

ObserverConfig ScenarioConfig::observer_config() const {
  ObserverConfig oc;
  oc.kernels = build_kernels();
  oc.nonlinear_model = nonlinear_model;
  oc.observed = observed;
  oc.obs_length = obs_length;
  oc.mean_correction = mean_correction;
  oc.mean_gain = mean_gain;
  oc.forcing_known = forcing_known;
  oc.flux = flux;
  return oc;
}

ScenarioConfig parse_scenario(const std::string& text) {
  std::vector<std::pair<std::string, std::string>> kv;
  std::istringstream is(text);
  std::string line;
  int lineno = 0;
  while (std::getline(is, line)) {
    ++lineno;
    const size_t hash = line.find('#');
    if (hash != std::string::npos) line = line.substr(0, hash);
    line = trim(line);
    if (line.empty()) continue;
    const size_t eq = line.find('=');
    if (eq == std::string::npos)
      throw std::invalid_argument("line " + std::to_string(lineno) +
                                  ": expected key = value");
    kv.emplace_back(trim(line.substr(0, eq)), trim(line.substr(eq + 1)));
  }

  std::string scenario_name;
  for (const auto& [k, v] : kv)
    if (k == "scenario") scenario_name = v;
  if (scenario_name.empty())
    throw std::invalid_argument("scenario: key is required");

  ScenarioConfig c = default_scenario(scenario_from_string(scenario_name));
  for (const auto& [k, v] : kv)
    if (k != "scenario") c.set(k, v);
  return c;
}

ScenarioConfig load_scenario_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open config file: " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_scenario(ss.str());
}

namespace {

struct RowOutcome {
  std::vector<double> cells;
  std::string status = "ok";
  PairedRun trace;
};

ScenarioConfig with_sweep_value(const ScenarioConfig& base, double value) {
  ScenarioConfig c = base;
  if (base.sweep_param == "phi_u") c.phi_u = value;
  else if (base.sweep_param == "phi_rho") c.phi_rho = value;
  else if (base.sweep_param == "obs_length") c.obs_length = value;
  else if (base.sweep_param == "mode_k") c.mode_k = static_cast<int>(value);
  return c;
}

std::vector<std::string> summary_columns(ScenarioId id) {
  switch (id) {
    case ScenarioId::table1:
      return {"phi_u", "theory_rate", "theory_period", "num_rate",
              "num_rate_base10", "num_period", "r_squared"};
    case ScenarioId::table2:
      return {"phi_rho", "theory_rate", "theory_period", "num_rate",
              "num_rate_base10", "num_period", "r_squared"};
    case ScenarioId::partial_obs:
    case ScenarioId::partial_obs_mean_fix:
      return {"L",          "approx_rate", "num_rate_u", "num_rate_rho",
              "num_period", "r_squared",   "final_err_rho", "slope",
              "intercept",  "fit_r_squared"};
    case ScenarioId::forced:
      return {"phi_u", "theory_amplitude", "measured_amplitude", "drift"};
    case ScenarioId::nonlinear:
      return {"mode_k", "linear_rate_k", "linear_rate_k1", "num_rate",
              "num_period", "r_squared"};
    case ScenarioId::density_obs:
      return {"mode_k", "theory_rate", "num_rate", "num_period", "r_squared"};
    case ScenarioId::kernel_design_demo:
      return {"mode_k", "design_rate", "theory_rate", "num_rate", "num_period",
              "r_squared"};
  }
  return {};
}

RowOutcome run_row(const ScenarioConfig& base, double value) {
  RowOutcome out;
  const ScenarioConfig c = with_sweep_value(base, value);
  const size_t ncols = summary_columns(base.id).size();
  out.cells.assign(ncols, kNaN);
  out.cells[0] = value;

  try {
    const ObserverConfig oc = c.observer_config();
    const bool nl = c.nonlinear_model;

    FieldState truth = equilibrium_state(c.grid, nl ? c.params.rho0 : 0.0);
    FieldState obs = perturbed_state(c.grid, c.params.rho0, c.amplitude,
                                     c.mode_k, c.mean_offset, nl);

    ForcingSpec forcing;
    const bool forced = c.id == ScenarioId::forced;
    if (forced)
      forcing.entries.push_back({c.mode_k, c.forcing_c, c.forcing_omega});

    const int probe = forced ? c.mode_k : 0;
    out.trace = run_pair(truth, obs, oc, c.params, c.grid, c.stepper,
                         c.final_time, forced ? &forcing : nullptr, probe);

    const double fit_a = c.fit_t_start >= 0 ? c.fit_t_start : 0.1 * c.final_time;
    const double fit_b = c.fit_t_end >= 0 ? c.fit_t_end : c.final_time;
    std::vector<double> ts, eu, er;
    ts.reserve(out.trace.series.size());
    for (const auto& s : out.trace.series) {
      ts.push_back(s.t);
      eu.push_back(s.err_u);
      er.push_back(s.err_rho);
    }

    const WaveNumber k(c.mode_k);
    switch (base.id) {
      case ScenarioId::table1:
      case ScenarioId::table2: {
        const ModeEigen me = eigenvalues_closed_form(c.params, oc.kernels, k);
        const DecayEstimate de = estimate_decay(ts, eu, fit_a, fit_b);
        out.cells[1] = me.decay_rate;
        out.cells[2] = me.period.value_or(kNaN);
        out.cells[3] = de.rate;
        out.cells[4] = de.rate_base10;
        out.cells[5] = de.period.value_or(kNaN);
        out.cells[6] = de.r_squared;
        break;
      }
      case ScenarioId::partial_obs:
      case ScenarioId::partial_obs_mean_fix: {
        out.cells[1] = partial_obs_rate(c.params, c.phi_u, c.obs_length, c.mode_k);
        const DecayEstimate du = estimate_decay(ts, eu, fit_a, fit_b);
        out.cells[2] = du.rate;
        try {
          const DecayEstimate dr = estimate_decay(ts, er, fit_a, fit_b);
          out.cells[3] = dr.rate;
        } catch (const std::exception&) {
          // a plateaued density error has no meaningful decay fit
        }
        out.cells[4] = du.period.value_or(kNaN);
        out.cells[5] = du.r_squared;
        out.cells[6] = out.trace.series.back().err_rho;
        // slope/intercept columns are filled after the sweep completes
        break;
      }
      case ScenarioId::forced: {
        const ForcedAmplitude fa = forced_amplitude(
            c.params, oc.kernels, {c.mode_k, c.forcing_c, c.forcing_omega});
        std::vector<double> probe_re;
        probe_re.reserve(out.trace.probe.size());
        for (const auto& z : out.trace.probe) probe_re.push_back(z.real());
        const double t_min =
            c.steady_t_min >= 0 ? c.steady_t_min : 0.75 * c.final_time;
        const AmplitudeEstimate ae = steady_amplitude(ts, probe_re, t_min);
        out.cells[1] = fa.velocity_amplitude;
        out.cells[2] = ae.amplitude;
        out.cells[3] = ae.drift;
        break;
      }
      case ScenarioId::nonlinear: {
        const ModeEigen lin_k = eigenvalues_closed_form(c.params, oc.kernels, k);
        const ModeEigen lin_1 =
            eigenvalues_closed_form(c.params, oc.kernels, WaveNumber(1));
        const DecayEstimate de = estimate_decay(ts, eu, fit_a, fit_b);
        out.cells[1] = lin_k.decay_rate;
        out.cells[2] = lin_1.decay_rate;
        out.cells[3] = de.rate;
        out.cells[4] = de.period.value_or(kNaN);
        out.cells[5] = de.r_squared;
        break;
      }
      case ScenarioId::density_obs: {
        const ModeEigen me = eigenvalues_closed_form(c.params, oc.kernels, k);
        const DecayEstimate de = estimate_decay(ts, er, fit_a, fit_b);
        out.cells[1] = me.decay_rate;
        out.cells[2] = de.rate;
        out.cells[3] = de.period.value_or(kNaN);
        out.cells[4] = de.r_squared;
        break;
      }
      case ScenarioId::kernel_design_demo: {
        const ModeEigen me = eigenvalues_closed_form(c.params, oc.kernels, k);
        const DecayEstimate de = estimate_decay(ts, eu, fit_a, fit_b);
        out.cells[1] = c.design_rate;
        out.cells[2] = me.decay_rate;
        out.cells[3] = de.rate;
        out.cells[4] = de.period.value_or(kNaN);
        out.cells[5] = de.r_squared;
        break;
      }
    }
  } catch (const std::exception& e) {
    out.status = e.what();
  }
  return out;
}

}  // namespace

ScenarioResult run_scenario(const ScenarioConfig& config, int workers) {
  config.validate();
  const size_t n = config.sweep_values.size();

  std::vector<RowOutcome> outcomes(n);
  if (workers <= 1 || n <= 1) {
    for (size_t i = 0; i < n; ++i)
      outcomes[i] = run_row(config, config.sweep_values[i]);
  } else {
    std::atomic<size_t> next{0};
    auto worker = [&]() {
      for (;;) {
        const size_t i = next.fetch_add(1);
        if (i >= n) return;
        outcomes[i] = run_row(config, config.sweep_values[i]);
      }
    };
    std::vector<std::thread> pool;
    const int count = std::min<int>(workers, static_cast<int>(n));
    pool.reserve(static_cast<size_t>(count));
    for (int i = 0; i < count; ++i) pool.emplace_back(worker);
    for (auto& th : pool) th.join();
  }

  ScenarioResult result;
  result.config = config;
  result.summary.columns = summary_columns(config.id);
  for (size_t i = 0; i < n; ++i) {
    result.summary.rows.push_back(std::move(outcomes[i].cells));
    result.summary.status.push_back(std::move(outcomes[i].status));
    result.traces.push_back(std::move(outcomes[i].trace));
    result.trace_names.push_back(config.sweep_param + "=" +
                                 format_short(config.sweep_values[i]));
  }

  // rate-vs-L fit across the sweep for the partial-observation scenarios
  if (config.id == ScenarioId::partial_obs ||
      config.id == ScenarioId::partial_obs_mean_fix) {
    std::vector<std::pair<double, double>> pts;
    for (size_t i = 0; i < n; ++i)
      if (result.summary.status[i] == "ok" &&
          std::isfinite(result.summary.rows[i][2]))
        pts.emplace_back(result.summary.rows[i][0], result.summary.rows[i][2]);
    if (pts.size() >= 3) {
      const LineFit f = fit_rate_vs_length(pts);
      for (auto& row : result.summary.rows) {
        row[7] = f.slope;
        row[8] = f.intercept;
        row[9] = f.r_squared;
      }
    }
  }
  return result;
}

void emit_plot_data(const ScenarioResult& result, const std::string& out_dir) {
  namespace fs = std::filesystem;
  const fs::path dir = fs::path(out_dir) / to_string(result.config.id);
  std::error_code ec;
  fs::create_directories(dir, ec);
  if (ec)
    throw std::runtime_error("cannot create output directory " + dir.string() +
                             ": " + ec.message());

  for (size_t i = 0; i < result.traces.size(); ++i) {
    const fs::path p = dir / (result.trace_names[i] + ".csv");
    std::ofstream os(p);
    if (!os) throw std::runtime_error("cannot write " + p.string());
    write_error_series_csv(os, result.traces[i]);
    if (!os) throw std::runtime_error("write failed: " + p.string());
  }

  const fs::path sp = dir / "summary.csv";
  std::ofstream os(sp);
  if (!os) throw std::runtime_error("cannot write " + sp.string());
  for (size_t c = 0; c < result.summary.columns.size(); ++c)
    os << (c ? "," : "") << result.summary.columns[c];
  os << ",status\n";
  for (size_t r = 0; r < result.summary.rows.size(); ++r) {
    for (size_t c = 0; c < result.summary.rows[r].size(); ++c)
      os << (c ? "," : "") << format_full(result.summary.rows[r][c]);
    os << "," << result.summary.status[r] << "\n";
  }
  if (!os) throw std::runtime_error("write failed: " + sp.string());
}

}  // namespace cnsobs
