#ifndef CNSOBS_OBSERVER_HPP
#define CNSOBS_OBSERVER_HPP

#include <complex>
#include <optional>
#include <vector>

#include "cnsobs/fourier.hpp"
#include "cnsobs/grid.hpp"
#include "cnsobs/kernels.hpp"
#include "cnsobs/solver.hpp"
#include "cnsobs/spectral.hpp"

namespace cnsobs {

struct ObserverConfig {
  KernelCoeffs kernels;
  bool nonlinear_model = true;
  ObservedVar observed = ObservedVar::velocity;
  double obs_length = 1.0;  // observations live on [0, L]
  // Zero-mean feedback cannot move the observer's density mean, so a plain
  // feedback run keeps whatever mean offset the observer started with.  With
  // mean_correction on, the window average of the mismatch enters F_rho as a
  // spatial constant -rho0 g <w>, and the observer's density mean is relaxed
  // toward the equilibrium mean at the same gain (a constant placed under
  // the derivative operator would vanish identically).
  bool mean_correction = false;
  double mean_gain = 1.0;
  bool forcing_known = false;
  FluxScheme flux = FluxScheme::vfroe;

  void validate() const;
};

struct FeedbackFields {
  std::vector<double> f_rho;  // density-equation source
  std::vector<double> f_u;    // velocity-equation source (adds to rho0 u_t)
};

// Feedback from the observation mismatch w = observed - estimated on the grid.
// The mismatch is masked to [0, L], projected on the kernel's active Fourier
// modes, scaled by the kernel coefficients and synthesized back:
//   velocity observations:  F_u  = rho0 * (phi_u * m),
//                           F_rho = rho0 * (phi_rho * dm/dx)   (spectral d/dx)
//   density observations:   F_rho = psi_rho * m,
//                           F_u  = gamma rho0^(gamma-1) * (psi_u * dm/dx)
// where * is convolution evaluated in Fourier space.  With mean correction on
// (velocity case), F_rho additionally gets the constant -rho0 g <w>_[0,L].
FeedbackFields apply_feedback(const std::vector<double>& w,
                              const ObserverConfig& config,
                              const FluidParams& params, const GridSpec& grid,
                              const FourierWorkspace& workspace);

// Cells whose center lies in [0, L].
std::vector<double> observation_mask(const GridSpec& grid, double L);

struct ErrorSample {
  double t;
  double err_rho;  // L2 norm of rho_hat - rho
  double err_u;    // L2 norm of u_hat - u
};

struct PairedRun {
  std::vector<ErrorSample> series;
  // mode coefficient of the velocity error u_hat - u, recorded when probe_k > 0
  std::vector<std::complex<double>> probe;
  FieldState truth;
  FieldState observer;
};

// Advances the truth (no feedback) and the observer (with feedback) in
// lockstep to time T, integrating the coupled pair with the same SSP-RK3
// stages so the feedback sees stage-consistent states.  An unknown forcing
// acts on the truth only; forcing_known adds it to the observer as well.
// Forcing is supported for the linear model with rho0 = 1.
PairedRun run_pair(const FieldState& truth0, const FieldState& observer0,
                   const ObserverConfig& config, const FluidParams& params,
                   const GridSpec& grid, const TimeStepper& stepper, double T,
                   const ForcingSpec* forcing = nullptr, int probe_k = 0);

// Error-series CSV: t,err_rho,err_u rows at full precision.
void write_error_series_csv(std::ostream& os, const PairedRun& run);

}  // namespace cnsobs

#endif
