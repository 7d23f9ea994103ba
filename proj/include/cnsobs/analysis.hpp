#ifndef CNSOBS_ANALYSIS_HPP
#define CNSOBS_ANALYSIS_HPP

#include <optional>
#include <utility>
#include <vector>

namespace cnsobs {

struct DecayFitOptions {
  int min_samples = 20;
  // a series is treated as oscillatory when it has at least this many
  // interior local maxima exceeding both neighbors by peak_prominence
  int min_peaks = 3;
  double peak_prominence = 1e-6;
  // samples past the point where the series drops below rel_floor times its
  // window maximum are discarded; they sit on the arithmetic noise floor
  double rel_floor = 1e-11;
};

struct DecayEstimate {
  double rate = 0;         // exponential decay, natural log base
  double rate_base10 = 0;  // rate / ln 10, the slope read off semilog plots
  std::optional<double> period;
  double t_start = 0, t_end = 0;
  double r_squared = 0;
  int samples_used = 0;
  bool from_peaks = false;
};

// Least-squares line through (t, ln y).  Oscillatory series are fitted
// through their peaks (|cos|-modulated envelopes put the peaks exactly on
// the envelope line; raw samples would bias the slope) and the period is
// twice the mean peak spacing, a norm oscillating at half the signal period.
// Monotone series use every sample and report no period.
DecayEstimate estimate_decay(const std::vector<double>& t,
                             const std::vector<double>& y, double t_start,
                             double t_end, const DecayFitOptions& opts = {});

struct LineFit {
  double slope = 0;
  double intercept = 0;
  double r_squared = 0;
};

// Ordinary least squares of rate against observation length (>= 3 points).
LineFit fit_rate_vs_length(const std::vector<std::pair<double, double>>& points);

struct AmplitudeEstimate {
  double amplitude = 0;
  double drift = 0;  // relative mismatch between the two tail halves
};

// Amplitude of the steady oscillation past t_min: half peak-to-trough for a
// signed series, the maximum for a norm series.  A tail whose two halves
// disagree by more than trend_tol is not stationary and is reported as an
// error.
AmplitudeEstimate steady_amplitude(const std::vector<double>& t,
                                   const std::vector<double>& y, double t_min,
                                   double trend_tol = 0.05);

}  // namespace cnsobs

#endif
