#include "cnsobs/analysis.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace cnsobs {

namespace {

LineFit least_squares(const std::vector<double>& x, const std::vector<double>& y) {
  const size_t n = x.size();
  double sx = 0, sy = 0;
  for (size_t i = 0; i < n; ++i) {
    sx += x[i];
    sy += y[i];
  }
  const double mx = sx / n, my = sy / n;
  double sxx = 0, sxy = 0, syy = 0;
  for (size_t i = 0; i < n; ++i) {
    const double dx = x[i] - mx, dy = y[i] - my;
    sxx += dx * dx;
    sxy += dx * dy;
    syy += dy * dy;
  }
  if (sxx == 0) throw std::invalid_argument("fit: degenerate abscissae");
  LineFit f;
  f.slope = sxy / sxx;
  f.intercept = my - f.slope * mx;
  f.r_squared = syy == 0 ? 1.0 : (sxy * sxy) / (sxx * syy);
  return f;
}

}  // namespace

DecayEstimate estimate_decay(const std::vector<double>& t,
                             const std::vector<double>& y, double t_start,
                             double t_end, const DecayFitOptions& opts) {
  if (t.size() != y.size())
    throw std::invalid_argument("estimate_decay: size mismatch");

  std::vector<double> tw, yw;
  for (size_t i = 0; i < t.size(); ++i)
    if (t[i] >= t_start && t[i] <= t_end) {
      if (!(y[i] > 0))
        throw std::invalid_argument(
            "estimate_decay: non-positive value in fit window");
      tw.push_back(t[i]);
      yw.push_back(y[i]);
    }
  if (static_cast<int>(tw.size()) < opts.min_samples)
    throw std::invalid_argument("estimate_decay: too few samples in window");

  // trim the tail once the series reaches the noise floor
  const double ymax = *std::max_element(yw.begin(), yw.end());
  const double floor = opts.rel_floor * ymax;
  size_t last = yw.size();
  while (last > 0 && yw[last - 1] < floor) --last;
  tw.resize(last);
  yw.resize(last);
  if (static_cast<int>(tw.size()) < opts.min_samples)
    throw std::invalid_argument("estimate_decay: too few samples above floor");

  std::vector<size_t> peaks;
  for (size_t i = 1; i + 1 < yw.size(); ++i)
    if (yw[i] > yw[i - 1] * (1.0 + opts.peak_prominence) &&
        yw[i] > yw[i + 1] * (1.0 + opts.peak_prominence))
      peaks.push_back(i);

  DecayEstimate out;
  out.t_start = tw.front();
  out.t_end = tw.back();

  std::vector<double> fx, fy;
  if (static_cast<int>(peaks.size()) >= opts.min_peaks) {
    for (size_t p : peaks) {
      fx.push_back(tw[p]);
      fy.push_back(std::log(yw[p]));
    }
    double spacing = 0;
    for (size_t i = 1; i < peaks.size(); ++i)
      spacing += tw[peaks[i]] - tw[peaks[i - 1]];
    spacing /= static_cast<double>(peaks.size() - 1);
    out.period = 2.0 * spacing;
    out.from_peaks = true;
  } else {
    fx = tw;
    fy.reserve(yw.size());
    for (double v : yw) fy.push_back(std::log(v));
  }

  const LineFit f = least_squares(fx, fy);
  out.rate = -f.slope;
  out.rate_base10 = out.rate / std::log(10.0);
  out.r_squared = f.r_squared;
  out.samples_used = static_cast<int>(fx.size());
  return out;
}

LineFit fit_rate_vs_length(const std::vector<std::pair<double, double>>& points) {
  if (points.size() < 3)
    throw std::invalid_argument("fit_rate_vs_length: needs at least 3 points");
  std::vector<double> x, y;
  for (const auto& [l, r] : points) {
    x.push_back(l);
    y.push_back(r);
  }
  return least_squares(x, y);
}

AmplitudeEstimate steady_amplitude(const std::vector<double>& t,
                                   const std::vector<double>& y, double t_min,
                                   double trend_tol) {
  if (t.size() != y.size())
    throw std::invalid_argument("steady_amplitude: size mismatch");
  std::vector<double> tail;
  for (size_t i = 0; i < t.size(); ++i)
    if (t[i] >= t_min) tail.push_back(y[i]);
  if (tail.size() < 8)
    throw std::invalid_argument("steady_amplitude: too few samples past t_min");

  auto amp_of = [](const double* begin, const double* end) {
    double lo = *begin, hi = *begin;
    for (const double* p = begin; p != end; ++p) {
      lo = std::min(lo, *p);
      hi = std::max(hi, *p);
    }
    return lo < 0 ? 0.5 * (hi - lo) : hi;
  };

  const size_t n = tail.size();
  const double full = amp_of(tail.data(), tail.data() + n);
  const double a1 = amp_of(tail.data(), tail.data() + n / 2);
  const double a2 = amp_of(tail.data() + n / 2, tail.data() + n);
  AmplitudeEstimate out;
  out.amplitude = full;
  out.drift = std::abs(a2 - a1) / std::max({std::abs(a1), std::abs(a2), 1e-300});
  if (out.drift > trend_tol)
    throw std::runtime_error("steady_amplitude: tail is not stationary");
  return out;
}

}  // namespace cnsobs
