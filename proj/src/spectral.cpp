#include "cnsobs/spectral.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

namespace cnsobs {

namespace {

constexpr double kPi = std::numbers::pi;

void require_target(const KernelCoeffs& kernels, ObservedVar target,
                    const char* where) {
  if (kernels.target() != target)
    throw std::invalid_argument(std::string(where) +
                                ": kernel target does not match observed variable");
}

void require_dim(const FluidParams& params, const WaveNumber& k) {
  if (k.dim() != params.dim)
    throw std::invalid_argument("k: dimension does not match params.dim");
}

}  // namespace

Eigen::MatrixXcd assemble_mode_matrix_wave(const FluidParams& params,
                                           const KernelCoeffs& kernels,
                                           const WaveNumber& k) {
  require_dim(params, k);
  require_target(kernels, ObservedVar::velocity, "assemble_mode_matrix_wave");
  const SpectralConstants c = compute_constants(params);
  const int n = params.dim;
  const double kk = static_cast<double>(k.norm2());
  const double phi_rho = kernels.rho_coeff(k);
  const double phi_u = kernels.u_coeff(k);

  Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(2 * n, 2 * n);
  for (int i = 0; i < n; ++i) {
    m(i, n + i) = 1.0;
    m(n + i, n + i) = -(c.c1 * kk + phi_u);
    for (int j = 0; j < n; ++j) {
      const double kikj =
          static_cast<double>(k.component(i)) * static_cast<double>(k.component(j));
      m(n + i, j) += -c.c3 * (1.0 + phi_rho) * kikj;
      m(n + i, n + j) += -c.c2 * kikj;
    }
  }
  return m;
}

Eigen::MatrixXcd assemble_mode_matrix_system(const FluidParams& params,
                                             const KernelCoeffs& kernels,
                                             const WaveNumber& k) {
  require_dim(params, k);
  require_target(kernels, ObservedVar::velocity, "assemble_mode_matrix_system");
  const SpectralConstants c = compute_constants(params);
  const int n = params.dim;
  const double kk = static_cast<double>(k.norm2());
  const double phi_rho = kernels.rho_coeff(k);
  const double phi_u = kernels.u_coeff(k);

  Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(n + 1, n + 1);
  for (int i = 0; i < n; ++i) {
    const double ki = static_cast<double>(k.component(i));
    m(0, 1 + i) = c.c4 * (1.0 + phi_rho) * ki;
    m(1 + i, 0) = -c.c5 * ki;
    m(1 + i, 1 + i) += -(c.c1 * kk + phi_u);
    for (int j = 0; j < n; ++j)
      m(1 + i, 1 + j) += -c.c2 * ki * static_cast<double>(k.component(j));
  }
  return m;
}

Eigen::MatrixXcd assemble_mode_matrix_density_obs(const FluidParams& params,
                                                  const KernelCoeffs& kernels,
                                                  const WaveNumber& k) {
  require_dim(params, k);
  require_target(kernels, ObservedVar::density,
                 "assemble_mode_matrix_density_obs");
  const SpectralConstants c = compute_constants(params);
  const int n = params.dim;
  const double kk = static_cast<double>(k.norm2());
  const double psi_rho = kernels.rho_coeff(k);
  const double psi_u = kernels.u_coeff(k);

  Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(n + 1, n + 1);
  m(0, 0) = -psi_rho;
  for (int i = 0; i < n; ++i) {
    const double ki = static_cast<double>(k.component(i));
    m(0, 1 + i) = c.c4 * ki;
    m(1 + i, 0) = -c.c5 * (1.0 + psi_u) * ki;
    m(1 + i, 1 + i) += -c.c1 * kk;
    for (int j = 0; j < n; ++j)
      m(1 + i, 1 + j) += -c.c2 * ki * static_cast<double>(k.component(j));
  }
  return m;
}

ModeEigen eigenvalues_closed_form(const FluidParams& params,
                                  const KernelCoeffs& kernels,
                                  const WaveNumber& k) {
  require_dim(params, k);
  const SpectralConstants c = compute_constants(params);
  const double kk = static_cast<double>(k.norm2());
  const bool velocity = kernels.target() == ObservedVar::velocity;
  const double coef_rho = kernels.rho_coeff(k);
  const double coef_u = kernels.u_coeff(k);

  // trace part -(a + x) and discriminant of the controlled pair
  double trace_sum, disc;
  double lambda_diff;
  if (velocity) {
    trace_sum = (c.c1 + c.c2) * kk + coef_u;
    disc = trace_sum * trace_sum - 4.0 * c.c3 * (1.0 + coef_rho) * kk;
    lambda_diff = -(c.c1 * kk + coef_u);
  } else {
    trace_sum = (c.c1 + c.c2) * kk + coef_rho;
    const double s = (c.c1 + c.c2) * kk - coef_rho;
    disc = s * s - 4.0 * c.c3 * (1.0 + coef_u) * kk;
    lambda_diff = -c.c1 * kk;
  }

  ModeEigen out;
  out.discriminant = disc;
  if (disc < 0) {
    const double im = std::sqrt(-disc) / 2.0;
    out.lambda_plus = {-trace_sum / 2.0, im};
    out.lambda_minus = {-trace_sum / 2.0, -im};
    out.period = 4.0 * kPi / std::sqrt(-disc);
  } else {
    const double root = std::sqrt(disc);
    out.lambda_plus = {(-trace_sum + root) / 2.0, 0.0};
    out.lambda_minus = {(-trace_sum - root) / 2.0, 0.0};
  }

  out.decay_rate = -out.lambda_plus.real();
  if (params.dim >= 2) {
    out.lambda_diff = lambda_diff;
    out.decay_rate = std::min(out.decay_rate, -lambda_diff);
    if (velocity) out.lambda_zero = 0.0;
  }
  return out;
}

OptimalNudging optimal_nudging(const FluidParams& params, const WaveNumber& k,
                               ObservedVar observed) {
  require_dim(params, k);
  const SpectralConstants c = compute_constants(params);
  const double kk = static_cast<double>(k.norm2());
  const double a = (c.c1 + c.c2) * kk;
  const double b = 2.0 * std::sqrt(c.c3) * k.norm();

  OptimalNudging out;
  if (observed == ObservedVar::velocity) {
    if (a <= b) {
      out.coefficient = b - a;
      out.rate = b / 2.0;
    } else {
      out.coefficient = 0.0;
      out.rate = (a - std::sqrt(a * a - b * b)) / 2.0;
    }
  } else {
    out.coefficient = a + b;
    out.rate = std::min(a + b / 2.0, c.c1 * kk);
  }
  return out;
}

void ForcingSpec::validate() const {
  for (const auto& e : entries) {
    if (e.k == 0)
      throw std::invalid_argument("forcing: the k=0 entry is excluded (zero mean)");
    if (!(e.frequency > 0))
      throw std::invalid_argument("forcing: frequency must be positive");
  }
}

ForcedAmplitude forced_amplitude(const FluidParams& params,
                                 const KernelCoeffs& kernels,
                                 const ForcingEntry& entry) {
  if (params.dim != 1)
    throw std::invalid_argument("forced_amplitude: 1D only");
  if (params.rho0 != 1.0)
    throw std::invalid_argument("forced_amplitude: requires rho0 = 1");
  if (entry.k == 0)
    throw std::invalid_argument("forcing: the k=0 entry is excluded (zero mean)");
  require_target(kernels, ObservedVar::velocity, "forced_amplitude");

  const double kk = static_cast<double>(entry.k) * entry.k;
  const double phi_u = kernels.u_coeff(WaveNumber(entry.k));
  const double phi_rho = kernels.rho_coeff(WaveNumber(entry.k));
  const double omega = entry.frequency;

  const double alpha = phi_u + 4.0 * params.nu() * kk * kPi * kPi;
  const double beta = 4.0 * kk * kPi * kPi * params.gamma * (1.0 + phi_rho);
  const double det = beta - 4.0 * omega * omega * kPi * kPi;
  const double damp = 2.0 * omega * kPi * alpha;
  const double denom2 = det * det + damp * damp;
  if (denom2 == 0.0)
    throw std::runtime_error("forced_amplitude: resonance (degenerate denominator)");

  const double drive = 2.0 * entry.amplitude * omega * kPi;
  ForcedAmplitude out;
  out.a_coef = drive * det / denom2;
  out.b_coef = drive * damp / denom2;
  out.velocity_amplitude = std::abs(drive) / std::sqrt(denom2);
  out.density_amplitude = (static_cast<double>(std::abs(entry.k)) / omega) *
                          std::abs(1.0 + phi_rho) * out.velocity_amplitude;
  return out;
}

double partial_obs_rate(const FluidParams& params, double phi_u, double L,
                        int k) {
  if (params.dim != 1)
    throw std::invalid_argument("partial_obs_rate: 1D only");
  if (L < 0.0 || L > 1.0)
    throw std::invalid_argument("L: must lie in [0,1]");
  if (k == 0) throw std::invalid_argument("k: must be nonzero");
  const SpectralConstants c = compute_constants(params);
  const double kk = static_cast<double>(k) * k;
  return (phi_u * L + (c.c1 + c.c2) * kk) / 2.0;
}

double IndicatorSeries::evaluate(double x) const {
  double s = mean;
  for (size_t i = 0; i < cos_coef.size(); ++i) {
    const double arg = 2.0 * kPi * static_cast<double>(i + 1) * x;
    s += cos_coef[i] * std::cos(arg) + sin_coef[i] * std::sin(arg);
  }
  return s;
}

IndicatorSeries indicator_fourier(double L, int kmax) {
  if (!(L > 0.0) || L > 1.0) throw std::invalid_argument("L: must lie in (0,1]");
  if (kmax < 1) throw std::invalid_argument("kmax: must be >= 1");
  IndicatorSeries out;
  out.mean = L;
  out.cos_coef.resize(static_cast<size_t>(kmax));
  out.sin_coef.resize(static_cast<size_t>(kmax));
  for (int k = 1; k <= kmax; ++k) {
    const double arg = 2.0 * kPi * k * L;
    out.cos_coef[static_cast<size_t>(k - 1)] = std::sin(arg) / (kPi * k);
    out.sin_coef[static_cast<size_t>(k - 1)] = (1.0 - std::cos(arg)) / (kPi * k);
  }
  return out;
}

}  // namespace cnsobs
