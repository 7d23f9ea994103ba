#include "cnsobs/fluid.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

namespace cnsobs {

namespace {
constexpr double kTwoPi = 2.0 * std::numbers::pi;
constexpr double kFourPiSq = 4.0 * std::numbers::pi * std::numbers::pi;

[[noreturn]] void fail(const std::string& field, const std::string& what) {
  throw std::invalid_argument(field + ": " + what);
}
}  // namespace

void FluidParams::validate() const {
  if (!(rho0 > 0) || !std::isfinite(rho0)) fail("rho0", "must be positive");
  if (!(mu > 0) || !std::isfinite(mu)) fail("mu", "must be positive");
  if (!(gamma > 1) || !std::isfinite(gamma)) fail("gamma", "must exceed 1");
  if (!(nu() > 0)) fail("lam", "2*mu + lam must be positive");
  if (dim < 1 || dim > 8) fail("dim", "must be in 1..8");
}

SpectralConstants compute_constants(const FluidParams& params) {
  params.validate();
  SpectralConstants c;
  c.c1 = params.mu * kFourPiSq / params.rho0;
  c.c2 = (params.lam + params.mu) * kFourPiSq / params.rho0;
  c.c3 = params.gamma * std::pow(params.rho0, params.gamma - 1.0) * kFourPiSq;
  c.c4 = std::complex<double>(0.0, -params.rho0 * kTwoPi);
  c.c5 = std::complex<double>(
      0.0, params.gamma * std::pow(params.rho0, params.gamma - 2.0) * kTwoPi);
  return c;
}

WaveNumber::WaveNumber(std::vector<int> components) : k_(std::move(components)) {
  if (k_.empty() || k_.size() > 8)
    throw std::invalid_argument("k: dimension must be in 1..8");
  bool all_zero = true;
  for (int ki : k_)
    if (ki != 0) all_zero = false;
  if (all_zero)
    throw std::invalid_argument("k: the zero mode is excluded (mean matched)");
}

std::int64_t WaveNumber::norm2() const {
  std::int64_t q = 0;
  for (int ki : k_) q += static_cast<std::int64_t>(ki) * ki;
  return q;
}

double WaveNumber::norm() const { return std::sqrt(static_cast<double>(norm2())); }

}  // namespace cnsobs
