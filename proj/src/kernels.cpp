#include "cnsobs/kernels.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "cnsobs/fluid.hpp"

namespace cnsobs {

KernelCoeffs KernelCoeffs::flat(ObservedVar target, double coeff_rho,
                                double coeff_u, int kmax, bool allow_negative) {
  if (kmax < 1) throw std::invalid_argument("kmax: must be >= 1");
  if (!allow_negative && (coeff_rho < 0 || coeff_u < 0))
    throw std::invalid_argument(
        "kernel coefficient: negative values require the unsafe flag");
  KernelCoeffs out(target, static_cast<double>(kmax));
  for (std::int64_t q = 1; q <= static_cast<std::int64_t>(kmax) * kmax; ++q)
    out.set(q, coeff_rho, coeff_u);
  return out;
}

void KernelCoeffs::set(std::int64_t norm2, double rho_c, double u_c) {
  if (norm2 <= 0) throw std::invalid_argument("|k|^2 must be positive");
  rho_[norm2] = rho_c;
  u_[norm2] = u_c;
}

double KernelCoeffs::lookup(const std::map<std::int64_t, double>& m,
                            std::int64_t q) {
  auto it = m.find(q);
  return it == m.end() ? 0.0 : it->second;
}

int KernelCoeffs::max_active_mode() const {
  std::int64_t qmax = 0;
  for (const auto& [q, v] : rho_)
    if (v != 0.0) qmax = std::max(qmax, q);
  for (const auto& [q, v] : u_)
    if (v != 0.0) qmax = std::max(qmax, q);
  return static_cast<int>(std::floor(std::sqrt(static_cast<double>(qmax)) + 0.5));
}

namespace {

void check_design_args(double rate, double cutoff) {
  if (!(rate > 0)) throw std::invalid_argument("rate: must be positive");
  if (!(cutoff > 0)) throw std::invalid_argument("cutoff: must be positive");
}

}  // namespace

KernelCoeffs design_kernels_velocity(double rate, double cutoff,
                                     const FluidParams& params) {
  check_design_args(rate, cutoff);
  const SpectralConstants c = compute_constants(params);
  KernelCoeffs out(ObservedVar::velocity, cutoff);

  // phi_u is nonzero only while diffusion alone is below the target.
  const double qmax_u =
      params.dim == 1 ? 2.0 * rate / (c.c1 + c.c2)
                      : std::max(rate / c.c1, 2.0 * rate / (c.c1 + c.c2));
  const std::int64_t qlast = static_cast<std::int64_t>(
      std::ceil(std::max(cutoff * cutoff, qmax_u)));
  for (std::int64_t q = 1; q <= qlast; ++q) {
    const double kk = static_cast<double>(q);
    double phi_u = std::max(0.0, 2.0 * rate - (c.c1 + c.c2) * kk);
    if (params.dim >= 2) phi_u = std::max(phi_u, rate - c.c1 * kk);
    double phi_rho = 0.0;
    if (kk <= cutoff * cutoff) {
      const double s = (c.c1 + c.c2) * kk + phi_u;
      phi_rho = std::max(0.0, s * s / (4.0 * c.c3 * kk) - 1.0);
    }
    if (phi_u != 0.0 || phi_rho != 0.0) out.set(q, phi_rho, phi_u);
  }
  return out;
}

KernelCoeffs design_kernels_density(double rate, double cutoff,
                                    const FluidParams& params) {
  check_design_args(rate, cutoff);
  const SpectralConstants c = compute_constants(params);
  KernelCoeffs out(ObservedVar::density, cutoff);

  const std::int64_t qlast = static_cast<std::int64_t>(std::ceil(
      std::max(cutoff * cutoff, 2.0 * rate / (c.c1 + c.c2))));
  for (std::int64_t q = 1; q <= qlast; ++q) {
    const double kk = static_cast<double>(q);
    const double psi_rho = std::max(0.0, 2.0 * rate - (c.c1 + c.c2) * kk);
    double psi_u = 0.0;
    if (kk <= cutoff * cutoff) {
      const double s = (c.c1 + c.c2) * kk - psi_rho;
      psi_u = std::max(0.0, s * s / (4.0 * c.c3 * kk) - 1.0);
    }
    if (psi_rho != 0.0 || psi_u != 0.0) out.set(q, psi_rho, psi_u);
  }
  return out;
}

}  // namespace cnsobs
