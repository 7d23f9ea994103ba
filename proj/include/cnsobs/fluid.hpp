#ifndef CNSOBS_FLUID_HPP
#define CNSOBS_FLUID_HPP

#include <complex>
#include <cstdint>
#include <vector>

namespace cnsobs {

// Physical constants of the compressible barotropic fluid model
// p(rho) = rho^gamma on the periodic box [0,1]^n.
struct FluidParams {
  double gamma = 1.4;   // adiabatic exponent, > 1
  double mu = 0.025;    // first Lame (shear viscosity), > 0
  double lam = 0.0;     // second Lame parameter
  double rho0 = 1.0;    // equilibrium density, > 0
  int dim = 1;          // spatial dimension n, 1..8

  // combined 1D viscosity
  double nu() const { return 2.0 * mu + lam; }

  // throws std::invalid_argument naming the offending field
  void validate() const;
};

// Constants of the Fourier-mode systems.  c1..c3 are real and positive,
// c4/c5 are purely imaginary with c4*c5 == c3.
struct SpectralConstants {
  double c1 = 0;                  // mu 4pi^2 / rho0
  double c2 = 0;                  // (lam+mu) 4pi^2 / rho0
  double c3 = 0;                  // gamma rho0^(gamma-1) 4pi^2
  std::complex<double> c4{0, 0};  // -rho0 i 2pi
  std::complex<double> c5{0, 0};  // gamma rho0^(gamma-2) i 2pi
};

SpectralConstants compute_constants(const FluidParams& params);

// Integer wave vector k != 0 of length params.dim.
class WaveNumber {
 public:
  explicit WaveNumber(std::vector<int> components);
  // 1D convenience
  explicit WaveNumber(int k) : WaveNumber(std::vector<int>{k}) {}

  int dim() const { return static_cast<int>(k_.size()); }
  int component(int i) const { return k_[static_cast<size_t>(i)]; }
  const std::vector<int>& components() const { return k_; }

  // |k|^2 = sum k_j^2
  std::int64_t norm2() const;
  double norm() const;

 private:
  std::vector<int> k_;
};

}  // namespace cnsobs

#endif
