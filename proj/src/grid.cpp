#include "cnsobs/grid.hpp"

#include <cmath>
#include <cstdio>
#include <numbers>
#include <ostream>
#include <stdexcept>

namespace cnsobs {

void GridSpec::validate() const {
  if (n_cells < 8) throw std::invalid_argument("n_cells: must be >= 8");
}

double l2_norm(const std::vector<double>& f, const GridSpec& grid) {
  double s = 0;
  for (double v : f) s += v * v;
  return std::sqrt(s * grid.dx());
}

FieldState equilibrium_state(const GridSpec& grid, double rho0) {
  FieldState s;
  s.rho.assign(static_cast<size_t>(grid.n_cells), rho0);
  s.mom.assign(static_cast<size_t>(grid.n_cells), 0.0);
  return s;
}

FieldState perturbed_state(const GridSpec& grid, double rho0, double amplitude,
                           int mode_k, double mean_offset, bool nonlinear) {
  FieldState s;
  const size_t n = static_cast<size_t>(grid.n_cells);
  s.rho.resize(n);
  s.mom.resize(n);
  for (size_t j = 0; j < n; ++j) {
    const double wave =
        amplitude * std::sin(2.0 * std::numbers::pi * mode_k * grid.center(static_cast<int>(j)));
    const double u = wave;
    if (nonlinear) {
      s.rho[j] = rho0 + mean_offset + wave;
      s.mom[j] = s.rho[j] * u;
    } else {
      s.rho[j] = mean_offset + wave;  // perturbation fields
      s.mom[j] = u;
    }
  }
  return s;
}

void write_snapshot_csv(std::ostream& os, const FieldState& state,
                        const GridSpec& grid, const FluidParams& params,
                        bool nonlinear, const std::string& tag) {
  char buf[256];
  std::snprintf(buf, sizeof buf,
                "# tag=%s time=%.17g gamma=%.17g mu=%.17g lambda=%.17g rho0=%.17g "
                "n_cells=%d model=%s\n",
                tag.c_str(), state.time, params.gamma, params.mu, params.lam,
                params.rho0, grid.n_cells, nonlinear ? "nonlinear" : "linear");
  os << buf << "x,rho,u\n";
  for (size_t j = 0; j < state.size(); ++j) {
    const double rho = state.rho[j];
    const double u = nonlinear ? state.mom[j] / rho : state.mom[j];
    std::snprintf(buf, sizeof buf, "%.17g,%.17g,%.17g\n",
                  grid.center(static_cast<int>(j)), rho, u);
    os << buf;
  }
}

}  // namespace cnsobs
