#ifndef CNSOBS_SOLVER_HPP
#define CNSOBS_SOLVER_HPP

#include <functional>
#include <stdexcept>
#include <string>

#include "cnsobs/fluid.hpp"
#include "cnsobs/grid.hpp"

namespace cnsobs {

// Raised on vacuum states, CFL violations in strict mode, and similar
// breakdowns; carries the simulation time at which it happened.
class SolverError : public std::runtime_error {
 public:
  SolverError(const std::string& what, double t)
      : std::runtime_error(what + " (t=" + std::to_string(t) + ")"), time_(t) {}
  double time() const { return time_; }

 private:
  double time_;
};

enum class FluxScheme {
  vfroe,  // linearized Riemann solver about the face-average primitive state
  llf,    // local Lax-Friedrichs
};

struct TimeStepper {
  double cfl = 0.9;
  double dt_max = 1e-3;
  // In strict mode the stepper refuses to shrink dt below dt_max: table
  // reproduction runs use a fixed step and must abort instead of silently
  // changing the configuration.
  bool strict = false;

  double effective_dt(double max_wave_speed, double dx, double t) const;
};

struct Tendency {
  std::vector<double> rho;
  std::vector<double> mom;
};

// max_j |u_j| + sqrt(gamma rho_j^(gamma-1))
double max_wave_speed_nonlinear(const FieldState& state,
                                const FluidParams& params);
double max_wave_speed_linear(const FieldState& state, const FluidParams& params);

// d/dt of (rho, rho u): finite-volume divergence of the convective flux with
// the pressure p = rho^gamma inside the Riemann flux (piecewise-linear
// reconstruction of the primitives at the faces), plus central-difference
// viscosity nu u_xx on u = mom/rho.  Optional source arrays are added to the
// tendencies (feedback, forcing).  Vacuum is reported as SolverError.
void rhs_nonlinear(const FieldState& state, const FluidParams& params,
                   const GridSpec& grid, FluxScheme scheme, Tendency& out,
                   const std::vector<double>* src_rho = nullptr,
                   const std::vector<double>* src_mom = nullptr);

// Linearized right-hand side for perturbation fields (r, v) about (rho0, 0):
//   r_t = -rho0 v_x,   rho0 v_t = nu v_xx - gamma rho0^(gamma-1) r_x
// with the same central stencils as the viscous/pressure parts of the
// nonlinear operator.  src_v is a velocity-equation source already divided
// through by nothing (it is added to rho0 v_t, i.e. out.mom += src_v / rho0).
void rhs_linear(const FieldState& state, const FluidParams& params,
                const GridSpec& grid, Tendency& out,
                const std::vector<double>* src_rho = nullptr,
                const std::vector<double>* src_v = nullptr);

using RhsFn = std::function<void(const FieldState&, Tendency&)>;

// One step of the three-stage strong-stability-preserving Runge-Kutta scheme.
void step_rk3(FieldState& state, const RhsFn& rhs, double dt);

}  // namespace cnsobs

#endif
