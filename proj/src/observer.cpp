#include "cnsobs/observer.hpp"

#include <cmath>
#include <cstdio>
#include <numbers>
#include <ostream>
#include <stdexcept>

namespace cnsobs {

namespace {
constexpr double kTwoPi = 2.0 * std::numbers::pi;

double window_mean(const std::vector<double>& f, const std::vector<double>& mask) {
  double s = 0, cnt = 0;
  for (size_t j = 0; j < f.size(); ++j) {
    s += mask[j] * f[j];
    cnt += mask[j];
  }
  return cnt > 0 ? s / cnt : 0.0;
}
}  // namespace

void ObserverConfig::validate() const {
  if (!(obs_length > 0.0) || obs_length > 1.0)
    throw std::invalid_argument("obs_length: must lie in (0,1]");
  if (mean_gain < 0)
    throw std::invalid_argument("mean_gain: must be >= 0");
  if (mean_correction && observed != ObservedVar::velocity)
    throw std::invalid_argument(
        "mean_correction: defined for velocity observations only");
}

std::vector<double> observation_mask(const GridSpec& grid, double L) {
  std::vector<double> mask(static_cast<size_t>(grid.n_cells), 0.0);
  for (int j = 0; j < grid.n_cells; ++j)
    if (grid.center(j) <= L) mask[static_cast<size_t>(j)] = 1.0;
  return mask;
}

FeedbackFields apply_feedback(const std::vector<double>& w,
                              const ObserverConfig& config,
                              const FluidParams& params, const GridSpec& grid,
                              const FourierWorkspace& workspace) {
  config.validate();
  if (config.kernels.target() != config.observed)
    throw std::invalid_argument(
        "apply_feedback: kernel target does not match observed variable");
  if (w.size() != static_cast<size_t>(grid.n_cells))
    throw std::invalid_argument("apply_feedback: field size mismatch");

  const size_t n = w.size();
  FeedbackFields out;
  out.f_rho.assign(n, 0.0);
  out.f_u.assign(n, 0.0);

  const std::vector<double> mask = observation_mask(grid, config.obs_length);
  std::vector<double> masked(n);
  for (size_t j = 0; j < n; ++j) masked[j] = mask[j] * w[j];

  const int kact = std::min(workspace.kmax(), config.kernels.max_active_mode());
  const double pgrad =
      params.gamma * std::pow(params.rho0, params.gamma - 1.0);
  for (int k = 1; k <= kact; ++k) {
    const std::int64_t q = static_cast<std::int64_t>(k) * k;
    const double coef_rho = config.kernels.rho_coeff(q);
    const double coef_u = config.kernels.u_coeff(q);
    if (coef_rho == 0.0 && coef_u == 0.0) continue;

    const std::complex<double> c = workspace.coefficient(masked, k);
    // spectral derivative: coefficient of d(masked)/dx at mode k
    const std::complex<double> dc = std::complex<double>(0.0, kTwoPi * k) * c;

    if (config.observed == ObservedVar::velocity) {
      if (coef_u != 0.0)
        workspace.add_mode(out.f_u, k, params.rho0 * coef_u * c);
      if (coef_rho != 0.0)
        workspace.add_mode(out.f_rho, k, params.rho0 * coef_rho * dc);
    } else {
      if (coef_rho != 0.0) workspace.add_mode(out.f_rho, k, coef_rho * c);
      if (coef_u != 0.0) workspace.add_mode(out.f_u, k, pgrad * coef_u * dc);
    }
  }

  if (config.mean_correction && config.mean_gain != 0.0) {
    const double shift =
        params.rho0 * config.mean_gain * window_mean(w, mask);
    for (size_t j = 0; j < n; ++j) out.f_rho[j] -= shift;
  }
  return out;
}

namespace {

struct PairContext {
  const ObserverConfig* config;
  const FluidParams* params;
  const GridSpec* grid;
  const FourierWorkspace* workspace;
  const ForcingSpec* forcing;
  std::vector<double> mask;

  std::vector<double> w;        // observation mismatch
  std::vector<double> src_mom;  // observer momentum source (nonlinear)
  std::vector<double> force;    // forcing field at stage time
  Tendency tend_truth, tend_obs;

  void forcing_field(double t) {
    const size_t n = static_cast<size_t>(grid->n_cells);
    force.assign(n, 0.0);
    if (!forcing) return;
    for (const auto& e : forcing->entries) {
      const double amp = 2.0 * e.amplitude * std::sin(kTwoPi * e.frequency * t);
      for (size_t j = 0; j < n; ++j)
        force[j] += amp * std::cos(kTwoPi * e.k * grid->center(static_cast<int>(j)));
    }
  }

  // tendencies of the coupled (truth, observer) pair at one RK stage
  void rhs(const FieldState& truth, const FieldState& obs) {
    const size_t n = static_cast<size_t>(grid->n_cells);
    const bool nl = config->nonlinear_model;

    forcing_field(truth.time);
    const bool forced = forcing && !forcing->entries.empty();
    std::vector<double>* truth_vsrc = nullptr;
    if (forced) {
      for (size_t j = 0; j < n; ++j) force[j] = -params->rho0 * force[j];
      truth_vsrc = &force;
    }

    if (nl)
      rhs_nonlinear(truth, *params, *grid, config->flux, tend_truth, nullptr,
                    truth_vsrc);
    else
      rhs_linear(truth, *params, *grid, tend_truth, nullptr, truth_vsrc);

    // observation mismatch w = observed - estimated
    w.resize(n);
    if (config->observed == ObservedVar::velocity) {
      if (nl)
        for (size_t j = 0; j < n; ++j)
          w[j] = truth.mom[j] / truth.rho[j] - obs.mom[j] / obs.rho[j];
      else
        for (size_t j = 0; j < n; ++j) w[j] = truth.mom[j] - obs.mom[j];
    } else {
      for (size_t j = 0; j < n; ++j) w[j] = truth.rho[j] - obs.rho[j];
    }

    FeedbackFields fb = apply_feedback(w, *config, *params, *grid, *workspace);

    if (config->mean_correction && config->mean_gain != 0.0 &&
        config->observed == ObservedVar::velocity) {
      // relax the observer's density mean toward the equilibrium mean
      const double anchor = nl ? params->rho0 : 0.0;
      const double pull =
          config->mean_gain * (window_mean(obs.rho, mask) - anchor);
      for (size_t j = 0; j < n; ++j) fb.f_rho[j] -= pull;
    }

    if (nl) {
      // velocity-equation feedback in conservative form: (rho u)_t picks up
      // F_u + u F_rho
      src_mom.resize(n);
      for (size_t j = 0; j < n; ++j)
        src_mom[j] = fb.f_u[j] + (obs.mom[j] / obs.rho[j]) * fb.f_rho[j];
      if (forced && config->forcing_known)
        for (size_t j = 0; j < n; ++j) src_mom[j] += force[j];
      rhs_nonlinear(obs, *params, *grid, config->flux, tend_obs, &fb.f_rho,
                    &src_mom);
    } else {
      if (forced && config->forcing_known)
        for (size_t j = 0; j < n; ++j) fb.f_u[j] += force[j];
      rhs_linear(obs, *params, *grid, tend_obs, &fb.f_rho, &fb.f_u);
    }
  }
};

void axpy_state(FieldState& out, const FieldState& base, const Tendency& k,
                double dt) {
  const size_t n = base.size();
  out.rho.resize(n);
  out.mom.resize(n);
  for (size_t j = 0; j < n; ++j) {
    out.rho[j] = base.rho[j] + dt * k.rho[j];
    out.mom[j] = base.mom[j] + dt * k.mom[j];
  }
}

}  // namespace

PairedRun run_pair(const FieldState& truth0, const FieldState& observer0,
                   const ObserverConfig& config, const FluidParams& params,
                   const GridSpec& grid, const TimeStepper& stepper, double T,
                   const ForcingSpec* forcing, int probe_k) {
  config.validate();
  params.validate();
  grid.validate();
  if (!(T > 0)) throw std::invalid_argument("T: must be positive");
  if (truth0.size() != static_cast<size_t>(grid.n_cells) ||
      observer0.size() != static_cast<size_t>(grid.n_cells))
    throw std::invalid_argument("state size does not match grid");
  if (forcing) {
    forcing->validate();
    if (config.nonlinear_model)
      throw std::invalid_argument("forcing: supported for the linear model only");
    if (params.rho0 != 1.0)
      throw std::invalid_argument("forcing: requires rho0 = 1");
  }

  const int grid_kmax = grid.n_cells / 2;
  probe_k = std::min(probe_k, grid_kmax);
  const int kact = std::min(std::max(config.kernels.max_active_mode(), 1),
                            grid_kmax);
  FourierWorkspace workspace(grid, std::max(kact, probe_k));

  PairContext ctx;
  ctx.config = &config;
  ctx.params = &params;
  ctx.grid = &grid;
  ctx.workspace = &workspace;
  ctx.forcing = forcing;
  ctx.mask = observation_mask(grid, config.obs_length);

  PairedRun run;
  run.truth = truth0;
  run.observer = observer0;
  run.observer.time = run.truth.time;

  const size_t n = static_cast<size_t>(grid.n_cells);
  std::vector<double> diff(n);
  auto record = [&]() {
    ErrorSample s;
    s.t = run.truth.time;
    for (size_t j = 0; j < n; ++j) diff[j] = run.observer.rho[j] - run.truth.rho[j];
    s.err_rho = l2_norm(diff, grid);
    if (config.nonlinear_model)
      for (size_t j = 0; j < n; ++j)
        diff[j] = run.observer.mom[j] / run.observer.rho[j] -
                  run.truth.mom[j] / run.truth.rho[j];
    else
      for (size_t j = 0; j < n; ++j) diff[j] = run.observer.mom[j] - run.truth.mom[j];
    s.err_u = l2_norm(diff, grid);
    run.series.push_back(s);
    if (probe_k > 0) run.probe.push_back(workspace.coefficient(diff, probe_k));
  };

  record();

  FieldState t1, t2, o1, o2;
  const double t_end = run.truth.time + T;
  while (run.truth.time < t_end - 1e-12) {
    const double speed =
        config.nonlinear_model
            ? std::max(max_wave_speed_nonlinear(run.truth, params),
                       max_wave_speed_nonlinear(run.observer, params))
            : std::max(max_wave_speed_linear(run.truth, params),
                       max_wave_speed_linear(run.observer, params));
    double dt = stepper.effective_dt(speed, grid.dx(), run.truth.time);
    dt = std::min(dt, t_end - run.truth.time);

    // SSP-RK3 over the coupled pair
    ctx.rhs(run.truth, run.observer);
    axpy_state(t1, run.truth, ctx.tend_truth, dt);
    axpy_state(o1, run.observer, ctx.tend_obs, dt);
    t1.time = o1.time = run.truth.time + dt;

    ctx.rhs(t1, o1);
    for (size_t j = 0; j < n; ++j) {
      t1.rho[j] = 0.75 * run.truth.rho[j] + 0.25 * (t1.rho[j] + dt * ctx.tend_truth.rho[j]);
      t1.mom[j] = 0.75 * run.truth.mom[j] + 0.25 * (t1.mom[j] + dt * ctx.tend_truth.mom[j]);
      o1.rho[j] = 0.75 * run.observer.rho[j] + 0.25 * (o1.rho[j] + dt * ctx.tend_obs.rho[j]);
      o1.mom[j] = 0.75 * run.observer.mom[j] + 0.25 * (o1.mom[j] + dt * ctx.tend_obs.mom[j]);
    }
    t1.time = o1.time = run.truth.time + 0.5 * dt;

    ctx.rhs(t1, o1);
    for (size_t j = 0; j < n; ++j) {
      run.truth.rho[j] = run.truth.rho[j] / 3.0 +
                         2.0 / 3.0 * (t1.rho[j] + dt * ctx.tend_truth.rho[j]);
      run.truth.mom[j] = run.truth.mom[j] / 3.0 +
                         2.0 / 3.0 * (t1.mom[j] + dt * ctx.tend_truth.mom[j]);
      run.observer.rho[j] = run.observer.rho[j] / 3.0 +
                            2.0 / 3.0 * (o1.rho[j] + dt * ctx.tend_obs.rho[j]);
      run.observer.mom[j] = run.observer.mom[j] / 3.0 +
                            2.0 / 3.0 * (o1.mom[j] + dt * ctx.tend_obs.mom[j]);
    }
    run.truth.time += dt;
    run.observer.time = run.truth.time;
    record();
  }
  return run;
}

void write_error_series_csv(std::ostream& os, const PairedRun& run) {
  const bool with_probe = !run.probe.empty();
  os << (with_probe ? "t,err_rho,err_u,probe_re,probe_im\n" : "t,err_rho,err_u\n");
  char buf[200];
  for (size_t i = 0; i < run.series.size(); ++i) {
    const auto& s = run.series[i];
    if (with_probe)
      std::snprintf(buf, sizeof buf, "%.17g,%.17g,%.17g,%.17g,%.17g\n", s.t,
                    s.err_rho, s.err_u, run.probe[i].real(), run.probe[i].imag());
    else
      std::snprintf(buf, sizeof buf, "%.17g,%.17g,%.17g\n", s.t, s.err_rho,
                    s.err_u);
    os << buf;
  }
}

}  // namespace cnsobs
