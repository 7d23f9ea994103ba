#ifndef CNSOBS_SPECTRAL_HPP
#define CNSOBS_SPECTRAL_HPP

#include <Eigen/Dense>
#include <complex>
#include <optional>
#include <vector>

#include "cnsobs/fluid.hpp"
#include "cnsobs/kernels.hpp"

namespace cnsobs {

// Spectrum of one Fourier mode of the observer error system.
//
// lambda_zero (always 0) only exists in the second-order damped-wave
// formulation and is an artifact of the added time derivative; it is
// excluded from the decay rate.  lambda_diff is the diffusion eigenvalue of
// multiplicity n-1 and therefore absent in 1D.  The decay rate is
// min{-Re lambda_diff (n>=2), -Re lambda_+, -Re lambda_-}; the period
// 4pi / sqrt(-Delta) is defined only for negative discriminant.
struct ModeEigen {
  std::optional<double> lambda_zero;
  std::optional<double> lambda_diff;
  std::complex<double> lambda_plus{0, 0};
  std::complex<double> lambda_minus{0, 0};
  double discriminant = 0;
  double decay_rate = 0;
  std::optional<double> period;
};

// 2n x 2n matrix of the damped-wave (velocity-only) formulation,
// z' = M z with z = (a, a').  Requires velocity-target kernels.
Eigen::MatrixXcd assemble_mode_matrix_wave(const FluidParams& params,
                                           const KernelCoeffs& kernels,
                                           const WaveNumber& k);

// (n+1) x (n+1) matrix of the first-order system in (density, velocity)
// coefficients, y' = N y.  Same spectrum as the wave form minus the
// artificial zero eigenvalue.
Eigen::MatrixXcd assemble_mode_matrix_system(const FluidParams& params,
                                             const KernelCoeffs& kernels,
                                             const WaveNumber& k);

// (n+1) x (n+1) matrix for density observations.  Requires density-target
// kernels.  The diffusion eigenvalue -c1|k|^2 is independent of the kernels.
Eigen::MatrixXcd assemble_mode_matrix_density_obs(const FluidParams& params,
                                                  const KernelCoeffs& kernels,
                                                  const WaveNumber& k);

// Closed-form eigenvalues of the mode system for either observation target.
//
// Velocity target:
//   lambda_diff = -(c1|k|^2 + phi_u), multiplicity n-1
//   lambda_+-   = (-((c1+c2)|k|^2 + phi_u) +- sqrt(Delta)) / 2,
//   Delta       = ((c1+c2)|k|^2 + phi_u)^2 - 4 c3 (1+phi_rho) |k|^2
// Density target:
//   lambda_diff = -c1|k|^2, multiplicity n-1
//   lambda_+-   = (-((c1+c2)|k|^2 + psi_rho) +- sqrt(Delta)) / 2,
//   Delta       = ((c1+c2)|k|^2 - psi_rho)^2 - 4 c3 (1+psi_u) |k|^2
// with sqrt(Delta) = i sqrt(-Delta) for negative discriminant.
ModeEigen eigenvalues_closed_form(const FluidParams& params,
                                  const KernelCoeffs& kernels,
                                  const WaveNumber& k);

// Best achievable decay with a single nonzero feedback coefficient
// (plain nudging).  With a = (c1+c2)|k|^2 and b = 2 sqrt(c3) |k|:
//   velocity observations: coefficient b-a and rate b/2 when a <= b,
//     otherwise 0 and the uncontrolled rate (a - sqrt(a^2-b^2))/2;
//   density observations: coefficient a+b and rate min{a + b/2, c1|k|^2}.
struct OptimalNudging {
  double coefficient = 0;
  double rate = 0;
};
OptimalNudging optimal_nudging(const FluidParams& params, const WaveNumber& k,
                               ObservedVar observed);

// One entry of a zero-mean oscillatory forcing c_k sin(2 pi omega_k t) on
// Fourier mode k of the velocity equation.
struct ForcingEntry {
  int k = 1;
  double amplitude = 0;  // c_k
  double frequency = 1;  // omega_k, cycles per unit time
};

struct ForcingSpec {
  std::vector<ForcingEntry> entries;
  void validate() const;  // rejects k == 0 entries (forcing mean must be 0)
};

// Steady response of mode k to an unknown forcing entry, 1D with rho0 = 1.
// With alpha = phi_u + 4 nu k^2 pi^2 and beta = 4 k^2 pi^2 gamma (1+phi_rho),
// the particular solution A cos(2 omega pi t) + B sin(2 omega pi t) has
// velocity amplitude D = sqrt(A^2+B^2) and density amplitude
// E = (k/omega)(1+phi_rho) D.  A vanishing denominator (beta = 4 omega^2 pi^2
// together with alpha = 0) is resonance and is reported as an error.
struct ForcedAmplitude {
  double a_coef = 0;  // A_k
  double b_coef = 0;  // B_k
  double velocity_amplitude = 0;  // D_k
  double density_amplitude = 0;   // E_k
};
ForcedAmplitude forced_amplitude(const FluidParams& params,
                                 const KernelCoeffs& kernels,
                                 const ForcingEntry& entry);

// Approximate decay rate (phi_u L + 4 nu k^2 pi^2) / 2 for observations
// restricted to [0,L], 1D.  Valid while the error energy stays in mode k;
// the indicator mask actually mixes modes, so this is an estimate, not a
// bound.
double partial_obs_rate(const FluidParams& params, double phi_u, double L,
                        int k);

// Real Fourier series of the indicator of [0,L] in [0,1]:
//   1_[0,L](x) = L + sum_k [ cos_coef_k cos(2 pi k x) + sin_coef_k sin(2 pi k x) ]
// with cos_coef_k = sin(2 pi k L)/(pi k) and sin_coef_k = (1-cos(2 pi k L))/(pi k).
// The coefficients are fixed by direct integration of cos/sin over [0,L]
// (partial sums converge to the indicator in L^2).
struct IndicatorSeries {
  double mean = 0;
  std::vector<double> cos_coef;  // index k-1
  std::vector<double> sin_coef;
  double evaluate(double x) const;
};
IndicatorSeries indicator_fourier(double L, int kmax);

}  // namespace cnsobs

#endif
