#include "cnsobs/solver.hpp"

#include <algorithm>
#include <cmath>

namespace cnsobs {

namespace {

inline double pressure(double rho, double gamma) { return std::pow(rho, gamma); }
inline double sound_speed(double rho, double gamma) {
  return std::sqrt(gamma * std::pow(rho, gamma - 1.0));
}

struct Flux {
  double mass;
  double mom;
};

inline Flux physical_flux(double rho, double u, double gamma) {
  return {rho * u, rho * u * u + pressure(rho, gamma)};
}

// Linearized Riemann problem about the face-average primitive state
// (rho_bar, u_bar).  The interface state picks up the jump carried by
// left-going characteristics; the flux is the exact flux of that state.
Flux vfroe_flux(double rho_l, double u_l, double rho_r, double u_r,
                double gamma, double t) {
  const double rho_bar = 0.5 * (rho_l + rho_r);
  const double u_bar = 0.5 * (u_l + u_r);
  const double c_bar = sound_speed(rho_bar, gamma);

  double rho_s, u_s;
  if (u_bar - c_bar >= 0.0) {
    rho_s = rho_l;
    u_s = u_l;
  } else if (u_bar + c_bar <= 0.0) {
    rho_s = rho_r;
    u_s = u_r;
  } else {
    // subsonic: cross the u_bar - c_bar wave only
    const double alpha_minus =
        0.5 * ((rho_r - rho_l) / rho_bar - (u_r - u_l) / c_bar);
    rho_s = rho_l + alpha_minus * rho_bar;
    u_s = u_l - alpha_minus * c_bar;
  }
  if (!(rho_s > 0.0)) throw SolverError("vacuum interface state", t);
  return physical_flux(rho_s, u_s, gamma);
}

Flux llf_flux(double rho_l, double u_l, double rho_r, double u_r, double gamma) {
  const double s = std::max(std::abs(u_l) + sound_speed(rho_l, gamma),
                            std::abs(u_r) + sound_speed(rho_r, gamma));
  const Flux fl = physical_flux(rho_l, u_l, gamma);
  const Flux fr = physical_flux(rho_r, u_r, gamma);
  return {0.5 * (fl.mass + fr.mass) - 0.5 * s * (rho_r - rho_l),
          0.5 * (fl.mom + fr.mom) - 0.5 * s * (rho_r * u_r - rho_l * u_l)};
}

}  // namespace

double TimeStepper::effective_dt(double max_wave_speed, double dx, double t) const {
  const double dt_cfl =
      max_wave_speed > 0 ? cfl * dx / max_wave_speed
                         : dt_max;
  if (strict && dt_cfl < dt_max)
    throw SolverError("CFL violation: fixed step dt_max exceeds cfl*dx/speed", t);
  return std::min(dt_max, dt_cfl);
}

double max_wave_speed_nonlinear(const FieldState& state,
                                const FluidParams& params) {
  double s = 0;
  for (size_t j = 0; j < state.size(); ++j) {
    const double rho = state.rho[j];
    if (!(rho > 0.0)) throw SolverError("vacuum cell", state.time);
    s = std::max(s, std::abs(state.mom[j] / rho) + sound_speed(rho, params.gamma));
  }
  return s;
}

double max_wave_speed_linear(const FieldState& state, const FluidParams& params) {
  double vmax = 0;
  for (double v : state.mom) vmax = std::max(vmax, std::abs(v));
  return vmax + sound_speed(params.rho0, params.gamma);
}

void rhs_nonlinear(const FieldState& state, const FluidParams& params,
                   const GridSpec& grid, FluxScheme scheme, Tendency& out,
                   const std::vector<double>* src_rho,
                   const std::vector<double>* src_mom) {
  const int n = grid.n_cells;
  const double dx = grid.dx();
  out.rho.resize(static_cast<size_t>(n));
  out.mom.resize(static_cast<size_t>(n));

  // velocities, with the vacuum check
  static thread_local std::vector<double> u, fmass, fmom;
  u.resize(static_cast<size_t>(n));
  for (int j = 0; j < n; ++j) {
    const double rho = state.rho[static_cast<size_t>(j)];
    if (!(rho > 0.0) || !std::isfinite(rho))
      throw SolverError("vacuum or non-finite density", state.time);
    u[static_cast<size_t>(j)] = state.mom[static_cast<size_t>(j)] / rho;
  }

  // Piecewise-linear reconstruction of the primitives (Fromm slopes).  A
  // first-order flux carries upwind diffusion ~ c dx / 2, which at 100 cells
  // is a double-digit share of the physical decay rates the experiments
  // measure; with linear reconstruction the flux dissipation drops to
  // O(dx^3) and the viscous term dominates as it should.
  auto face_states = [&](int j, double& rl, double& ul, double& rr,
                         double& ur) {
    const int jl = (j + n - 1) % n;
    const int jr = (j + 1) % n;
    const int jrr = (j + 2) % n;
    const size_t sj = static_cast<size_t>(j), sjl = static_cast<size_t>(jl),
                 sjr = static_cast<size_t>(jr), sjrr = static_cast<size_t>(jrr);
    rl = state.rho[sj] + 0.25 * (state.rho[sjr] - state.rho[sjl]);
    ul = u[sj] + 0.25 * (u[sjr] - u[sjl]);
    rr = state.rho[sjr] - 0.25 * (state.rho[sjrr] - state.rho[sj]);
    ur = u[sjr] - 0.25 * (u[sjrr] - u[sj]);
    if (!(rl > 0.0) || !(rr > 0.0))
      throw SolverError("vacuum reconstructed state", state.time);
  };

  // face j holds the flux between cells j and j+1 (periodic)
  fmass.resize(static_cast<size_t>(n));
  fmom.resize(static_cast<size_t>(n));
  for (int j = 0; j < n; ++j) {
    double rl, ul, rr, ur;
    face_states(j, rl, ul, rr, ur);
    const Flux f = scheme == FluxScheme::vfroe
                       ? vfroe_flux(rl, ul, rr, ur, params.gamma, state.time)
                       : llf_flux(rl, ul, rr, ur, params.gamma);
    fmass[static_cast<size_t>(j)] = f.mass;
    fmom[static_cast<size_t>(j)] = f.mom;
  }

  const double nu = params.nu();
  for (int j = 0; j < n; ++j) {
    const int jl = (j + n - 1) % n;
    const int jr = (j + 1) % n;
    const size_t sj = static_cast<size_t>(j);
    out.rho[sj] = -(fmass[sj] - fmass[static_cast<size_t>(jl)]) / dx;
    const double visc = nu *
                        (u[static_cast<size_t>(jr)] - 2.0 * u[sj] +
                         u[static_cast<size_t>(jl)]) /
                        (dx * dx);
    out.mom[sj] = -(fmom[sj] - fmom[static_cast<size_t>(jl)]) / dx + visc;
    if (src_rho) out.rho[sj] += (*src_rho)[sj];
    if (src_mom) out.mom[sj] += (*src_mom)[sj];
  }
}

void rhs_linear(const FieldState& state, const FluidParams& params,
                const GridSpec& grid, Tendency& out,
                const std::vector<double>* src_rho,
                const std::vector<double>* src_v) {
  const int n = grid.n_cells;
  const double dx = grid.dx();
  out.rho.resize(static_cast<size_t>(n));
  out.mom.resize(static_cast<size_t>(n));

  const double nu = params.nu();
  const double pgrad = params.gamma * std::pow(params.rho0, params.gamma - 1.0);
  for (int j = 0; j < n; ++j) {
    const int jl = (j + n - 1) % n;
    const int jr = (j + 1) % n;
    const size_t sj = static_cast<size_t>(j);
    const double vx = (state.mom[static_cast<size_t>(jr)] -
                       state.mom[static_cast<size_t>(jl)]) /
                      (2.0 * dx);
    const double rx = (state.rho[static_cast<size_t>(jr)] -
                       state.rho[static_cast<size_t>(jl)]) /
                      (2.0 * dx);
    const double vxx = (state.mom[static_cast<size_t>(jr)] - 2.0 * state.mom[sj] +
                        state.mom[static_cast<size_t>(jl)]) /
                       (dx * dx);
    out.rho[sj] = -params.rho0 * vx;
    out.mom[sj] = (nu * vxx - pgrad * rx) / params.rho0;
    if (src_rho) out.rho[sj] += (*src_rho)[sj];
    if (src_v) out.mom[sj] += (*src_v)[sj] / params.rho0;
  }
}

void step_rk3(FieldState& state, const RhsFn& rhs, double dt) {
  if (!(dt > 0)) throw SolverError("non-positive dt", state.time);
  const size_t n = state.size();
  static thread_local Tendency k;
  static thread_local FieldState s1, s2;

  // Shu-Osher stages
  rhs(state, k);
  s1.rho.resize(n);
  s1.mom.resize(n);
  for (size_t j = 0; j < n; ++j) {
    s1.rho[j] = state.rho[j] + dt * k.rho[j];
    s1.mom[j] = state.mom[j] + dt * k.mom[j];
  }
  s1.time = state.time + dt;

  rhs(s1, k);
  s2.rho.resize(n);
  s2.mom.resize(n);
  for (size_t j = 0; j < n; ++j) {
    s2.rho[j] = 0.75 * state.rho[j] + 0.25 * (s1.rho[j] + dt * k.rho[j]);
    s2.mom[j] = 0.75 * state.mom[j] + 0.25 * (s1.mom[j] + dt * k.mom[j]);
  }
  s2.time = state.time + 0.5 * dt;

  rhs(s2, k);
  for (size_t j = 0; j < n; ++j) {
    state.rho[j] =
        state.rho[j] / 3.0 + 2.0 / 3.0 * (s2.rho[j] + dt * k.rho[j]);
    state.mom[j] =
        state.mom[j] / 3.0 + 2.0 / 3.0 * (s2.mom[j] + dt * k.mom[j]);
  }
  state.time += dt;
}

}  // namespace cnsobs
