#ifndef CNSOBS_KERNELS_HPP
#define CNSOBS_KERNELS_HPP

#include <cstdint>
#include <map>

#include "cnsobs/fluid.hpp"

namespace cnsobs {

enum class ObservedVar { velocity, density };

// Fourier coefficients of the isotropic feedback convolution kernels.
// Coefficients depend on |k|^2 only and are stored keyed by |k|^2;
// wave numbers without an entry have coefficient 0.  For velocity
// observations the pair is (phi_rho, phi_u), for density observations
// (psi_rho, psi_u).
class KernelCoeffs {
 public:
  KernelCoeffs() = default;
  KernelCoeffs(ObservedVar target, double cutoff)
      : target_(target), cutoff_(cutoff) {}

  // Constant coefficients on every mode 1 <= |k| <= kmax (a truncated
  // delta-like kernel; this is what plain nudging with strength coeff_u
  // corresponds to).  Negative coefficients are rejected unless
  // allow_negative is set; they are not numerically stable.
  static KernelCoeffs flat(ObservedVar target, double coeff_rho, double coeff_u,
                           int kmax, bool allow_negative = false);

  ObservedVar target() const { return target_; }
  double cutoff() const { return cutoff_; }

  double rho_coeff(std::int64_t norm2) const { return lookup(rho_, norm2); }
  double u_coeff(std::int64_t norm2) const { return lookup(u_, norm2); }
  double rho_coeff(const WaveNumber& k) const { return rho_coeff(k.norm2()); }
  double u_coeff(const WaveNumber& k) const { return u_coeff(k.norm2()); }

  void set(std::int64_t norm2, double rho_c, double u_c);

  // largest |k| with a nonzero coefficient of either kind (0 if none)
  int max_active_mode() const;

  const std::map<std::int64_t, double>& rho_map() const { return rho_; }
  const std::map<std::int64_t, double>& u_map() const { return u_; }

 private:
  static double lookup(const std::map<std::int64_t, double>& m, std::int64_t q);

  ObservedVar target_ = ObservedVar::velocity;
  double cutoff_ = 0.0;
  std::map<std::int64_t, double> rho_;
  std::map<std::int64_t, double> u_;
};

// Kernel coefficients guaranteeing error decay rate >= rate for every mode
// |k| <= cutoff under velocity observations:
//   phi_u(k)   = max{0; rate - c1|k|^2; 2 rate - (c1+c2)|k|^2}   (n >= 2)
//              = max{0; 2 rate - (c1+c2)k^2}                     (n == 1)
//   phi_rho(k) = max{0; ((c1+c2)|k|^2 + phi_u(k))^2 / (4 c3 |k|^2) - 1}
// phi_rho is truncated to 0 beyond the cutoff (it grows like |k|^2 and its
// Fourier series would not converge); phi_u follows its formula for all
// modes and vanishes once diffusion alone is fast enough.
KernelCoeffs design_kernels_velocity(double rate, double cutoff,
                                     const FluidParams& params);

// Density-observation analogue:
//   psi_rho(k) = max{0; 2 rate - (c1+c2)|k|^2}
//   psi_u(k)   = max{0; ((c1+c2)|k|^2 - psi_rho(k))^2 / (4 c3 |k|^2) - 1}
// The controlled eigenvalue pair decays at >= rate; for n >= 2 the
// diffusion eigenvalue -c1|k|^2 is not controllable, so the overall
// guarantee is min{rate, c1|k|^2}.  In 1D it is rate itself.
KernelCoeffs design_kernels_density(double rate, double cutoff,
                                    const FluidParams& params);

}  // namespace cnsobs

#endif
