#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "cnsobs/observer.hpp"

using namespace cnsobs;

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

ObserverConfig velocity_config(double phi_rho, double phi_u, double L = 1.0,
                               int kmax = 10) {
  ObserverConfig c;
  c.kernels = KernelCoeffs::flat(ObservedVar::velocity, phi_rho, phi_u, kmax);
  c.observed = ObservedVar::velocity;
  c.obs_length = L;
  return c;
}

std::vector<double> sine_field(const GridSpec& g, double amp, int k) {
  std::vector<double> f(static_cast<size_t>(g.n_cells));
  for (int j = 0; j < g.n_cells; ++j)
    f[static_cast<size_t>(j)] = amp * std::sin(kTwoPi * k * g.center(j));
  return f;
}

}  // namespace

TEST_CASE("zero mismatch produces zero feedback") {
  GridSpec g{100};
  FluidParams p;
  FourierWorkspace ws(g, 10);
  const std::vector<double> w(100, 0.0);
  const FeedbackFields f = apply_feedback(w, velocity_config(0.5, 10.0), p, g, ws);
  for (double v : f.f_rho) CHECK(v == 0.0);
  for (double v : f.f_u) CHECK(v == 0.0);
}

TEST_CASE("full observations act mode by mode") {
  GridSpec g{100};
  FluidParams p;
  p.rho0 = 1.3;
  FourierWorkspace ws(g, 10);
  const std::vector<double> w = sine_field(g, 1.0, 1);
  const FeedbackFields f = apply_feedback(w, velocity_config(0.0, 5.0), p, g, ws);
  // F_u = rho0 phi_u w for a kernel flat on the active mode
  for (int j = 0; j < g.n_cells; ++j)
    CHECK(f.f_u[static_cast<size_t>(j)] ==
          doctest::Approx(5.0 * p.rho0 * w[static_cast<size_t>(j)]).epsilon(1e-12));
  for (double v : f.f_rho) CHECK(std::abs(v) < 1e-12);

  // the density feedback of a sine mismatch is the spectral derivative
  const FeedbackFields fr = apply_feedback(w, velocity_config(2.0, 0.0), p, g, ws);
  for (int j = 0; j < g.n_cells; ++j) {
    const double expected =
        2.0 * p.rho0 * kTwoPi * std::cos(kTwoPi * g.center(j));
    CHECK(fr.f_rho[static_cast<size_t>(j)] ==
          doctest::Approx(expected).epsilon(1e-11));
  }
}

TEST_CASE("kernel target must match the observed variable") {
  GridSpec g{100};
  FluidParams p;
  FourierWorkspace ws(g, 10);
  ObserverConfig c = velocity_config(0.0, 5.0);
  c.observed = ObservedVar::density;  // kernels still target velocity
  const std::vector<double> w(100, 0.0);
  CHECK_THROWS_AS(apply_feedback(w, c, p, g, ws), std::invalid_argument);
}

TEST_CASE("feedback is linear in the mismatch") {
  GridSpec g{100};
  FluidParams p;
  FourierWorkspace ws(g, 10);
  const ObserverConfig c = velocity_config(0.7, 4.0, 0.45);
  std::mt19937 rng(9);
  std::uniform_real_distribution<double> U(-1.0, 1.0);
  std::vector<double> w1(100), w2(100), combo(100);
  for (int i = 0; i < 100; ++i) {
    w1[static_cast<size_t>(i)] = U(rng);
    w2[static_cast<size_t>(i)] = U(rng);
  }
  const double a = 1.7, b = -0.6;
  for (int i = 0; i < 100; ++i)
    combo[static_cast<size_t>(i)] =
        a * w1[static_cast<size_t>(i)] + b * w2[static_cast<size_t>(i)];
  const FeedbackFields f1 = apply_feedback(w1, c, p, g, ws);
  const FeedbackFields f2 = apply_feedback(w2, c, p, g, ws);
  const FeedbackFields fc = apply_feedback(combo, c, p, g, ws);
  for (int i = 0; i < 100; ++i) {
    const size_t j = static_cast<size_t>(i);
    CHECK(fc.f_u[j] == doctest::Approx(a * f1.f_u[j] + b * f2.f_u[j]).epsilon(1e-11));
    CHECK(fc.f_rho[j] ==
          doctest::Approx(a * f1.f_rho[j] + b * f2.f_rho[j]).epsilon(1e-11));
  }
}

TEST_CASE("full-domain feedback commutes with translation by one cell") {
  GridSpec g{100};
  FluidParams p;
  FourierWorkspace ws(g, 10);
  const ObserverConfig c = velocity_config(0.5, 10.0);
  std::mt19937 rng(13);
  std::uniform_real_distribution<double> U(-1.0, 1.0);
  std::vector<double> w(100), wshift(100);
  for (int i = 0; i < 100; ++i) w[static_cast<size_t>(i)] = U(rng);
  for (int i = 0; i < 100; ++i)
    wshift[static_cast<size_t>((i + 1) % 100)] = w[static_cast<size_t>(i)];
  const FeedbackFields f = apply_feedback(w, c, p, g, ws);
  const FeedbackFields fs = apply_feedback(wshift, c, p, g, ws);
  for (int i = 0; i < 100; ++i) {
    CHECK(fs.f_u[static_cast<size_t>((i + 1) % 100)] ==
          doctest::Approx(f.f_u[static_cast<size_t>(i)]).epsilon(1e-10));
    CHECK(fs.f_rho[static_cast<size_t>((i + 1) % 100)] ==
          doctest::Approx(f.f_rho[static_cast<size_t>(i)]).epsilon(1e-10));
  }
}

TEST_CASE("masked observations mix Fourier modes") {
  GridSpec g{100};
  FluidParams p;
  FourierWorkspace ws(g, 10);
  const std::vector<double> w = sine_field(g, 1.0, 1);
  std::vector<double> masked(100);
  const std::vector<double> mask = observation_mask(g, 0.3);
  for (int i = 0; i < 100; ++i)
    masked[static_cast<size_t>(i)] = mask[static_cast<size_t>(i)] * w[static_cast<size_t>(i)];
  const auto mags = ws.mode_magnitudes(masked);
  // energy appears off the seeded mode
  CHECK(mags[0] > 0.01);
  CHECK(mags[1] > 0.01);
  CHECK(mags[4] > 1e-4);
}

TEST_CASE("observation mask covers cells with center inside [0, L]") {
  GridSpec g{100};
  const std::vector<double> m3 = observation_mask(g, 0.3);
  int count = 0;
  for (double v : m3) count += v > 0 ? 1 : 0;
  CHECK(count == 30);
  const std::vector<double> m1 = observation_mask(g, 1.0);
  for (double v : m1) CHECK(v == 1.0);
}

TEST_CASE("density feedback has zero spatial mean under partial observations") {
  GridSpec g{100};
  FluidParams p;
  FourierWorkspace ws(g, 10);
  const ObserverConfig c = velocity_config(0.8, 3.0, 0.37);
  std::mt19937 rng(21);
  std::uniform_real_distribution<double> U(-1.0, 1.0);
  std::vector<double> w(100);
  for (auto& v : w) v = U(rng);
  const FeedbackFields f = apply_feedback(w, c, p, g, ws);
  double mean = 0;
  for (double v : f.f_rho) mean += v;
  CHECK(std::abs(mean / 100.0) < 1e-13);
}

TEST_CASE("identical initial conditions stay identical") {
  GridSpec g{100};
  FluidParams p;
  const FieldState s = perturbed_state(g, 1.0, 0.05, 1, 0.0, true);
  ObserverConfig c = velocity_config(0.5, 10.0, 1.0, 10);
  TimeStepper stepper;
  const PairedRun run = run_pair(s, s, c, p, g, stepper, 0.5);
  for (const auto& sample : run.series) {
    CHECK(sample.err_rho < 1e-13);
    CHECK(sample.err_u < 1e-13);
  }
}

TEST_CASE("observer density mean is conserved without mean correction") {
  GridSpec g{100};
  FluidParams p;
  ObserverConfig c = velocity_config(0.5, 10.0, 0.3, 10);
  c.nonlinear_model = false;
  const FieldState truth = equilibrium_state(g, 0.0);
  const FieldState obs = perturbed_state(g, 1.0, 0.05, 1, 0.02, false);
  TimeStepper stepper;
  const PairedRun run = run_pair(truth, obs, c, p, g, stepper, 2.0);
  double mean = 0;
  for (double r : run.observer.rho) mean += r;
  mean /= 100.0;
  CHECK(mean == doctest::Approx(0.02).epsilon(1e-10));
  // the density error is pinned at the retained offset
  CHECK(run.series.back().err_rho > 0.5 * 0.02);
  CHECK(run.series.back().err_u < 1e-4);
}

TEST_CASE("mean correction removes an initial density mean offset") {
  GridSpec g{100};
  FluidParams p;
  ObserverConfig c = velocity_config(0.5, 10.0, 0.3, 10);
  c.nonlinear_model = false;
  c.mean_correction = true;
  c.mean_gain = 1.0;
  const FieldState truth = equilibrium_state(g, 0.0);
  const FieldState obs = perturbed_state(g, 1.0, 0.05, 1, 0.02, false);
  TimeStepper stepper;
  const PairedRun run = run_pair(truth, obs, c, p, g, stepper, 5.0);
  CHECK(run.series.back().err_rho < 0.1 * 0.02);
}

TEST_CASE("mean correction has no effect under full observations") {
  GridSpec g{100};
  FluidParams p;
  const FieldState truth = equilibrium_state(g, 1.0);
  const FieldState obs = perturbed_state(g, 1.0, 0.05, 1, 0.0, true);
  TimeStepper stepper;
  ObserverConfig plain = velocity_config(0.5, 10.0, 1.0, 10);
  ObserverConfig fixed = plain;
  fixed.mean_correction = true;
  const PairedRun a = run_pair(truth, obs, plain, p, g, stepper, 1.0);
  const PairedRun b = run_pair(truth, obs, fixed, p, g, stepper, 1.0);
  for (size_t i = 0; i < a.series.size(); ++i) {
    CHECK(a.series[i].err_rho ==
          doctest::Approx(b.series[i].err_rho).epsilon(1e-9));
    CHECK(a.series[i].err_u == doctest::Approx(b.series[i].err_u).epsilon(1e-9));
  }
}

TEST_CASE("density observations drive both fields through the mirrored operators") {
  GridSpec g{100};
  FluidParams p;
  FourierWorkspace ws(g, 10);
  ObserverConfig c;
  c.kernels = KernelCoeffs::flat(ObservedVar::density, 3.0, 2.0, 10);
  c.observed = ObservedVar::density;
  const std::vector<double> w = sine_field(g, 1.0, 1);
  const FeedbackFields f = apply_feedback(w, c, p, g, ws);
  const double pgrad = p.gamma * std::pow(p.rho0, p.gamma - 1.0);
  for (int j = 0; j < g.n_cells; ++j) {
    // F_rho = psi_rho * w (identity operator), F_u = gamma rho0^(g-1) psi_u dw/dx
    CHECK(f.f_rho[static_cast<size_t>(j)] ==
          doctest::Approx(3.0 * w[static_cast<size_t>(j)]).epsilon(1e-11));
    const double expected =
        2.0 * pgrad * kTwoPi * std::cos(kTwoPi * g.center(j));
    CHECK(f.f_u[static_cast<size_t>(j)] == doctest::Approx(expected).epsilon(1e-10));
  }

  // a density-observation pair run converges
  ObserverConfig rc = c;
  rc.nonlinear_model = true;
  const FieldState truth = equilibrium_state(g, 1.0);
  const FieldState obs = perturbed_state(g, 1.0, 0.05, 1, 0.0, true);
  TimeStepper stepper;
  const PairedRun run = run_pair(truth, obs, rc, p, g, stepper, 3.0);
  CHECK(run.series.back().err_rho < 1e-4);
  CHECK(run.series.back().err_u < 1e-4);
}

TEST_CASE("known forcing cancels from the error, unknown forcing saturates") {
  GridSpec g{100};
  FluidParams p;
  ObserverConfig c = velocity_config(0.0, 0.0, 1.0, 4);
  c.nonlinear_model = false;
  ForcingSpec forcing;
  forcing.entries.push_back({1, 1.0, 1.0});
  const FieldState zero = equilibrium_state(g, 0.0);
  TimeStepper stepper;

  c.forcing_known = false;
  const PairedRun unknown = run_pair(zero, zero, c, p, g, stepper, 6.0, &forcing);
  CHECK(unknown.series.back().err_u > 0.05);

  c.forcing_known = true;
  const PairedRun known = run_pair(zero, zero, c, p, g, stepper, 6.0, &forcing);
  CHECK(known.series.back().err_u < 1e-12);
}

TEST_CASE("forcing requires the linear model") {
  GridSpec g{100};
  FluidParams p;
  ObserverConfig c = velocity_config(0.0, 0.0);
  c.nonlinear_model = true;
  ForcingSpec forcing;
  forcing.entries.push_back({1, 1.0, 1.0});
  const FieldState s = equilibrium_state(g, 1.0);
  TimeStepper stepper;
  CHECK_THROWS_AS(run_pair(s, s, c, p, g, stepper, 0.1, &forcing),
                  std::invalid_argument);
  ForcingSpec bad;
  bad.entries.push_back({0, 1.0, 1.0});
  CHECK_THROWS_AS(bad.validate(), std::invalid_argument);
}
