#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "cnsobs/fourier.hpp"

using namespace cnsobs;

TEST_CASE("projection recovers band-limited coefficients exactly") {
  GridSpec g{100};
  FourierWorkspace ws(g, 10);
  std::mt19937 rng(5);
  std::uniform_real_distribution<double> U(-1.0, 1.0);

  std::vector<std::complex<double>> coef(10);
  for (auto& c : coef) c = {U(rng), U(rng)};

  std::vector<double> f(100, 0.0);
  for (int k = 1; k <= 10; ++k) ws.add_mode(f, k, coef[static_cast<size_t>(k - 1)]);

  for (int k = 1; k <= 10; ++k) {
    const auto c = ws.coefficient(f, k);
    CHECK(std::abs(c - coef[static_cast<size_t>(k - 1)]) < 1e-13);
  }
}

TEST_CASE("single sine mode has the expected coefficient") {
  GridSpec g{100};
  FourierWorkspace ws(g, 3);
  std::vector<double> f(100);
  for (int j = 0; j < 100; ++j)
    f[static_cast<size_t>(j)] = std::sin(2.0 * std::numbers::pi * 2 * g.center(j));
  // sin(t) = (e^{it} - e^{-it}) / 2i -> c_2 = -i/2
  const auto c2 = ws.coefficient(f, 2);
  CHECK(c2.real() == doctest::Approx(0.0).epsilon(1e-14));
  CHECK(c2.imag() == doctest::Approx(-0.5).epsilon(1e-14));
  CHECK(std::abs(ws.coefficient(f, 1)) < 1e-14);
  CHECK(std::abs(ws.coefficient(f, 3)) < 1e-14);
  const auto mags = ws.mode_magnitudes(f);
  CHECK(mags[1] == doctest::Approx(0.5).epsilon(1e-13));
}

TEST_CASE("workspace validates the mode range") {
  GridSpec g{100};
  CHECK_THROWS_AS(FourierWorkspace(g, 0), std::invalid_argument);
  CHECK_THROWS_AS(FourierWorkspace(g, 51), std::invalid_argument);
  FourierWorkspace ws(g, 5);
  std::vector<double> f(100, 0.0);
  CHECK_THROWS_AS(ws.coefficient(f, 6), std::invalid_argument);
}
