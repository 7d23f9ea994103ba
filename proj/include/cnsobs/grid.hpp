#ifndef CNSOBS_GRID_HPP
#define CNSOBS_GRID_HPP

#include <iosfwd>
#include <string>
#include <vector>

#include "cnsobs/fluid.hpp"

namespace cnsobs {

// Uniform periodic finite-volume grid on [0,1], cell centers at (j+1/2) dx.
struct GridSpec {
  int n_cells = 100;

  double dx() const { return 1.0 / n_cells; }
  double center(int j) const { return (j + 0.5) * dx(); }
  void validate() const;  // n_cells >= 8
};

// Cell-averaged state.  For the nonlinear model the arrays hold the
// conservative variables (rho, rho*u); for the linear model they hold the
// perturbation fields (r, v) about (rho0, 0).
struct FieldState {
  std::vector<double> rho;
  std::vector<double> mom;
  double time = 0;

  size_t size() const { return rho.size(); }
};

// sqrt(dx * sum f_j^2), the L2 norm on [0,1]
double l2_norm(const std::vector<double>& f, const GridSpec& grid);

FieldState equilibrium_state(const GridSpec& grid, double rho0);

// rho = rho0 + amplitude sin(2 pi k x) (+ mean offset), u likewise with zero
// offset; nonlinear flag fills momentum rho*u instead of bare velocity.
FieldState perturbed_state(const GridSpec& grid, double rho0, double amplitude,
                           int mode_k, double mean_offset, bool nonlinear);

// CSV snapshot: comment header with time and params, then x,rho,u rows.
void write_snapshot_csv(std::ostream& os, const FieldState& state,
                        const GridSpec& grid, const FluidParams& params,
                        bool nonlinear, const std::string& tag);

}  // namespace cnsobs

#endif
