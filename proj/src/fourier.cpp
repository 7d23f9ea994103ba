#include "cnsobs/fourier.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace cnsobs {

FourierWorkspace::FourierWorkspace(const GridSpec& grid, int kmax)
    : n_(grid.n_cells), kmax_(kmax) {
  if (kmax < 1 || kmax > grid.n_cells / 2)
    throw std::invalid_argument("kmax: must be in 1..n_cells/2");
  phase_.resize(static_cast<size_t>(kmax) * n_);
  for (int k = 1; k <= kmax; ++k)
    for (int j = 0; j < n_; ++j) {
      const double arg = -2.0 * std::numbers::pi * k * grid.center(j);
      phase_[static_cast<size_t>(k - 1) * n_ + j] = {std::cos(arg), std::sin(arg)};
    }
}

std::complex<double> FourierWorkspace::coefficient(const std::vector<double>& f,
                                                   int k) const {
  if (k < 1 || k > kmax_) throw std::invalid_argument("k: out of workspace range");
  const std::complex<double>* ph = &phase_[static_cast<size_t>(k - 1) * n_];
  double re = 0, im = 0;
  for (int j = 0; j < n_; ++j) {
    re += f[static_cast<size_t>(j)] * ph[j].real();
    im += f[static_cast<size_t>(j)] * ph[j].imag();
  }
  return {re / n_, im / n_};
}

void FourierWorkspace::add_mode(std::vector<double>& out, int k,
                                std::complex<double> c) const {
  if (k < 1 || k > kmax_) throw std::invalid_argument("k: out of workspace range");
  const std::complex<double>* ph = &phase_[static_cast<size_t>(k - 1) * n_];
  for (int j = 0; j < n_; ++j) {
    // exp(+2 pi i k x_j) = conj(phase), so Re(c e^{+i...}) uses the conjugate
    out[static_cast<size_t>(j)] +=
        2.0 * (c.real() * ph[j].real() + c.imag() * ph[j].imag());
  }
}

std::vector<double> FourierWorkspace::mode_magnitudes(
    const std::vector<double>& f) const {
  std::vector<double> mags(static_cast<size_t>(kmax_));
  for (int k = 1; k <= kmax_; ++k)
    mags[static_cast<size_t>(k - 1)] = std::abs(coefficient(f, k));
  return mags;
}

}  // namespace cnsobs
