#include <doctest.h>

#include <cmath>

#include "cnsobs/spectral.hpp"

using namespace cnsobs;

TEST_CASE("velocity kernel design, reference values at D=10 K=3") {
  FluidParams p;
  const KernelCoeffs k = design_kernels_velocity(10.0, 3.0, p);
  CHECK(k.target() == ObservedVar::velocity);
  CHECK(k.u_coeff(WaveNumber(1)) == doctest::Approx(18.02607912).epsilon(1e-9));
  CHECK(k.rho_coeff(WaveNumber(1)) == doctest::Approx(0.80930685).epsilon(1e-8));

  // resulting decay is exactly the target on the critical mode
  const ModeEigen me = eigenvalues_closed_form(p, k, WaveNumber(1));
  CHECK(me.decay_rate == doctest::Approx(10.0).epsilon(1e-12));
  CHECK(me.discriminant <= 1e-9);
}

TEST_CASE("designed kernels guarantee the rate on every mode up to the cutoff") {
  for (int dim : {1, 2}) {
    FluidParams p;
    p.dim = dim;
    for (double D : {2.0, 5.0, 10.0}) {
      for (double K : {3.0, 5.0}) {
        const KernelCoeffs k = design_kernels_velocity(D, K, p);
        for (int m = 1; m * m <= static_cast<int>(K * K); ++m) {
          const WaveNumber w = dim == 1 ? WaveNumber(m)
                                        : WaveNumber(std::vector<int>{m, 0});
          const ModeEigen me = eigenvalues_closed_form(p, k, w);
          CHECK(me.decay_rate >= D - 1e-9);
          CHECK(me.discriminant <= 1e-9);
        }
      }
    }
  }
}

TEST_CASE("designed coefficients are nonnegative and truncated") {
  FluidParams p;
  const double D = 10.0, K = 3.0;
  const KernelCoeffs k = design_kernels_velocity(D, K, p);
  for (std::int64_t q = 1; q <= 400; ++q) {
    CHECK(k.rho_coeff(q) >= 0.0);
    CHECK(k.u_coeff(q) >= 0.0);
    if (q > static_cast<std::int64_t>(K * K)) CHECK(k.rho_coeff(q) == 0.0);
  }
  // diffusion takes over once c1+c2 beats 2D/|k|^2: no velocity feedback there
  const SpectralConstants c = compute_constants(p);
  const std::int64_t q_diff =
      static_cast<std::int64_t>(std::ceil(2.0 * D / (c.c1 + c.c2)));
  CHECK(k.u_coeff(q_diff + 1) == 0.0);
  CHECK(k.u_coeff(q_diff + 100) == 0.0);
}

TEST_CASE("phi_rho grows like |k|^2 below the cutoff") {
  FluidParams p;
  // small D: phi_u vanishes early and phi_rho follows its quadratic branch
  const double D = 1.0, K = 40.0;
  const KernelCoeffs k = design_kernels_velocity(D, K, p);
  const SpectralConstants c = compute_constants(p);
  for (int m = 8; m <= 40; ++m) {
    const double q = static_cast<double>(m) * m;
    const double expected = (c.c1 + c.c2) * (c.c1 + c.c2) * q / (4.0 * c.c3) - 1.0;
    CHECK(k.rho_coeff(static_cast<std::int64_t>(q)) ==
          doctest::Approx(expected).epsilon(1e-10));
  }
  // and the truncation kills it right past the cutoff
  CHECK(k.rho_coeff(41 * 41) == 0.0);
}

TEST_CASE("1D design omits the diffusion branch, n>=2 includes it") {
  // lam > 0 separates c1 from c2 so the diffusion branch can win
  FluidParams p1;
  p1.lam = 0.05;
  FluidParams p2 = p1;
  p2.dim = 2;
  const double D = 30.0, K = 6.0;
  const KernelCoeffs k1 = design_kernels_velocity(D, K, p1);
  const KernelCoeffs k2 = design_kernels_velocity(D, K, p2);
  const SpectralConstants c = compute_constants(p1);
  // D/c2 < q < D/c1 makes D - c1 q the largest branch
  const std::int64_t q = 16;
  REQUIRE(D - c.c1 * static_cast<double>(q) > 0.0);
  REQUIRE(2.0 * D - (c.c1 + c.c2) * static_cast<double>(q) < 0.0);
  CHECK(k1.u_coeff(q) == 0.0);
  CHECK(k2.u_coeff(q) ==
        doctest::Approx(D - c.c1 * static_cast<double>(q)).epsilon(1e-12));
}

TEST_CASE("density kernel design, reference values and guarantees") {
  FluidParams p;
  const KernelCoeffs k = design_kernels_density(10.0, 3.0, p);
  CHECK(k.target() == ObservedVar::density);
  CHECK(k.rho_coeff(WaveNumber(1)) == doctest::Approx(18.02607912).epsilon(1e-9));
  CHECK(k.u_coeff(WaveNumber(1)) == doctest::Approx(0.16551831).epsilon(1e-7));

  const ModeEigen me = eigenvalues_closed_form(p, k, WaveNumber(1));
  CHECK(me.lambda_plus.real() == doctest::Approx(-10.0).epsilon(1e-12));

  // 1D: the guarantee is the full rate for every mode under the cutoff
  for (int m = 1; m <= 3; ++m)
    CHECK(eigenvalues_closed_form(p, k, WaveNumber(m)).decay_rate >= 10.0 - 1e-9);

  // n = 2: diffusion modes cap the rate at c1 |k|^2
  FluidParams p2;
  p2.dim = 2;
  const KernelCoeffs kd2 = design_kernels_density(10.0, 3.0, p2);
  const SpectralConstants c = compute_constants(p2);
  for (const auto& wave : {std::vector<int>{1, 0}, {1, 1}, {2, 1}, {3, 0}}) {
    const WaveNumber w(wave);
    if (w.norm() > 3.0) continue;
    const ModeEigen me2 = eigenvalues_closed_form(p2, kd2, w);
    const double bound =
        std::min(10.0, c.c1 * static_cast<double>(w.norm2()));
    CHECK(me2.decay_rate >= bound - 1e-9);
    REQUIRE(me2.lambda_diff.has_value());
    CHECK(*me2.lambda_diff ==
          doctest::Approx(-c.c1 * static_cast<double>(w.norm2())).epsilon(1e-14));
  }

  // small targets need no density feedback at all
  const KernelCoeffs ksmall = design_kernels_density(0.5, 3.0, p);
  CHECK(ksmall.rho_coeff(WaveNumber(1)) == 0.0);
}

TEST_CASE("design argument validation") {
  FluidParams p;
  CHECK_THROWS_AS(design_kernels_velocity(0.0, 3.0, p), std::invalid_argument);
  CHECK_THROWS_AS(design_kernels_velocity(5.0, -1.0, p), std::invalid_argument);
  CHECK_THROWS_AS(design_kernels_density(-2.0, 3.0, p), std::invalid_argument);
}

TEST_CASE("flat kernels") {
  const KernelCoeffs k = KernelCoeffs::flat(ObservedVar::velocity, 0.5, 10.0, 4);
  for (int m = 1; m <= 4; ++m) {
    CHECK(k.u_coeff(WaveNumber(m)) == 10.0);
    CHECK(k.rho_coeff(WaveNumber(m)) == 0.5);
  }
  CHECK(k.u_coeff(WaveNumber(5)) == 0.0);
  CHECK(k.max_active_mode() == 4);
  CHECK_THROWS_AS(KernelCoeffs::flat(ObservedVar::velocity, -0.5, 1.0, 4),
                  std::invalid_argument);
  // negative coefficients require the explicit unsafe flag
  const KernelCoeffs kneg =
      KernelCoeffs::flat(ObservedVar::velocity, -0.5, 1.0, 4, true);
  CHECK(kneg.rho_coeff(WaveNumber(2)) == -0.5);
}
