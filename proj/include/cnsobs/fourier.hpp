#ifndef CNSOBS_FOURIER_HPP
#define CNSOBS_FOURIER_HPP

#include <complex>
#include <vector>

#include "cnsobs/grid.hpp"

namespace cnsobs {

// Discrete Fourier coefficients of real grid fields in the convention
// f(x) = sum_k c_k exp(2 pi i k x), c_{-k} = conj(c_k).  Only the handful of
// modes the feedback kernels and diagnostics touch are ever needed, so
// coefficients are computed by direct projection against a precomputed phase
// table, O(n_cells) per mode, exact for band-limited data.
class FourierWorkspace {
 public:
  FourierWorkspace(const GridSpec& grid, int kmax);

  int kmax() const { return kmax_; }

  // c_k = (1/N) sum_j f_j exp(-2 pi i k x_j), 1 <= k <= kmax
  std::complex<double> coefficient(const std::vector<double>& f, int k) const;

  // out_j += 2 Re(c exp(2 pi i k x_j))
  void add_mode(std::vector<double>& out, int k, std::complex<double> c) const;

  // |c_k| for k = 1..kmax
  std::vector<double> mode_magnitudes(const std::vector<double>& f) const;

 private:
  int n_;
  int kmax_;
  // phase_[(k-1)*n + j] = exp(-2 pi i k x_j)
  std::vector<std::complex<double>> phase_;
};

}  // namespace cnsobs

#endif
