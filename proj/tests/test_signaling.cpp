#include <random>

#include "doctest.h"
#include "nsbounds/metrology.hpp"
#include "nsbounds/signaling.hpp"
#include "oracles.hpp"

using namespace nsb;

TEST_CASE("fourier_component") {
  SUBCASE("uniform rule has no structure") {
    const auto u = CircularDistribution::uniform();
    for (int k : {1, 2, 9}) CHECK(fourier_component(u, k) == 0.0);
    CHECK(fourier_component(u, 0) == 1.0);
  }
  SUBCASE("window components follow the sinc profile") {
    for (int n : {0, 2, 7}) {
      const auto d = ns_step_distribution(n);
      for (int k = 1; k <= 3 * (n + 1); ++k) {
        const double x = k * oracles::kPi / (n + 1);
        CHECK(fourier_component(d, k) == doctest::Approx(std::sin(x) / x).epsilon(1e-13));
      }
    }
  }
  SUBCASE("diffusion components are squared-index exponentials") {
    const auto d = CircularDistribution::diffusion(0.8);
    for (int k : {1, 2, 5}) {
      CHECK(fourier_component(d, k) ==
            doctest::Approx(std::exp(-0.8 * k * k)).epsilon(1e-14));
    }
  }
  SUBCASE("quadrature cross-check on tagged and generic rules") {
    const auto step = ns_step_distribution(3);
    const auto generic = CircularDistribution::from_fourier({0.4, 0.1, -0.05});
    for (int k = 1; k <= 5; ++k) {
      const double quad_step = oracles::simpson(
          [&](double th) { return step.density(th) * std::cos(k * th); },
          -oracles::kPi / 4.0, oracles::kPi / 4.0, 1 << 14);
      CHECK(fourier_component(step, k) == doctest::Approx(quad_step).epsilon(1e-10));
      const double quad_generic = oracles::simpson(
          [&](double th) { return generic.density(th) * std::cos(k * th); },
          -oracles::kPi, oracles::kPi, 1 << 14);
      CHECK(fourier_component(generic, k) == doctest::Approx(quad_generic).epsilon(1e-10));
    }
  }
}

TEST_CASE("ns_compatible") {
  SUBCASE("uniform passes at any probe number") {
    for (int n : {0, 3, 12}) {
      const auto v = ns_compatible(CircularDistribution::uniform(), n, 1e-10);
      CHECK(v.compatible);
      CHECK(v.worst_component == 0.0);
    }
  }
  SUBCASE("the sharp window fails against its own probe number") {
    const auto v = ns_compatible(ns_step_distribution(3), 3, 1e-10);
    CHECK_FALSE(v.compatible);
    CHECK(v.worst_k > 3);
    CHECK(v.worst_component > 0.1);
    CHECK(v.magnitude == v.worst_component);
  }
  SUBCASE("truncating the window at harmonic N restores compatibility") {
    const int n = 3;
    const auto full = ns_step_distribution(n);
    std::vector<double> coeffs;
    for (int k = 1; k <= n; ++k) coeffs.push_back(full.fourier(k));
    const auto v = ns_compatible(CircularDistribution::from_fourier(coeffs), n, 1e-10);
    CHECK(v.compatible);
  }
  SUBCASE("a slow diffusion kernel still leaks above tolerance") {
    const auto v = ns_compatible(CircularDistribution::diffusion(0.5), 3, 1e-10);
    CHECK_FALSE(v.compatible);
    CHECK(v.worst_k == 4);
    CHECK(v.worst_component == doctest::Approx(std::exp(-8.0)).epsilon(1e-12));
  }
}

TEST_CASE("ensemble_density") {
  std::mt19937_64 rng(61);

  SUBCASE("uniform rule decoheres completely") {
    const PhaseAmplitudes seed(oracles::random_amplitudes(5, rng));
    const auto rho = ensemble_density(CircularDistribution::uniform(), seed);
    for (int n = 0; n < 5; ++n) {
      for (int m = 0; m < 5; ++m) {
        if (n != m) CHECK(std::abs(rho.matrix()(n, m)) == 0.0);
      }
    }
  }
  SUBCASE("uniform and single-high-harmonic priors give the same matrix") {
    const int n_probes = 4;
    const PhaseAmplitudes seed(oracles::random_amplitudes(n_probes + 1, rng));
    const auto rho_flat = ensemble_density(CircularDistribution::uniform(), seed);
    const auto rho_cos = ensemble_density(CircularDistribution::raised_cosine(9), seed);
    CHECK(rho_flat.frobenius_distance(rho_cos) <= 1e-12);
  }
  SUBCASE("an all-ones series reproduces the pure projector") {
    const PhaseAmplitudes seed(oracles::random_amplitudes(4, rng));
    const auto rho = ensemble_density(CircularDistribution::from_fourier({1, 1, 1, 1}), seed);
    CHECK((rho.matrix() - seed.projector()).cwiseAbs().maxCoeff() < 1e-14);
  }
  SUBCASE("densities agree whenever the first N components agree") {
    for (int trial = 0; trial < 10; ++trial) {
      std::uniform_int_distribution<int> pick_n(1, 10);
      const int n_probes = pick_n(rng);
      std::uniform_real_distribution<double> coeff(-0.2, 0.2);
      std::vector<double> shared;
      for (int k = 0; k < n_probes; ++k) shared.push_back(coeff(rng));
      std::vector<double> tail_a = shared, tail_b = shared;
      for (int k = 0; k < 6; ++k) {
        tail_a.push_back(coeff(rng));
        tail_b.push_back(coeff(rng));
      }
      const PhaseAmplitudes seed(oracles::random_amplitudes(n_probes + 1, rng));
      const auto rho_a = ensemble_density(CircularDistribution::from_fourier(tail_a), seed);
      const auto rho_b = ensemble_density(CircularDistribution::from_fourier(tail_b), seed);
      CHECK(rho_a.frobenius_distance(rho_b) <= 1e-12);
    }
  }
}

TEST_CASE("sinc_signal") {
  CHECK(sinc_signal(1, 3) == doctest::Approx(2.0 / (3.0 * oracles::kPi)).epsilon(1e-12));
  CHECK(sinc_signal(1, 3) == doctest::Approx(0.21220659078919378).epsilon(1e-13));
  CHECK(sinc_signal(10, 12) == doctest::Approx(0.082205069927258504).epsilon(1e-12));

  SUBCASE("multiples of N+1 are accidentally compatible") {
    CHECK(sinc_signal(10, 11) < 1e-15);
    CHECK(sinc_signal(3, 8) < 1e-15);
  }
  SUBCASE("coincides with the window Fourier component") {
    for (int n : {1, 4, 9}) {
      for (int m = n + 1; m <= n + 12; ++m) {
        CHECK(std::abs(sinc_signal(n, m) -
                       std::abs(fourier_component(ns_step_distribution(n), m))) <= 1e-12);
      }
    }
  }
  SUBCASE("requires more harmonics than probes") {
    CHECK_THROWS_AS(sinc_signal(3, 3), std::invalid_argument);
  }
}

TEST_CASE("mixture_outcome_density") {
  SUBCASE("compatible rules cannot separate matched ensembles") {
    const int n_probes = 3;
    const auto window = ns_step_distribution(n_probes);
    std::vector<double> coeffs;
    for (int k = 1; k <= n_probes; ++k) coeffs.push_back(window.fourier(k));
    const auto truncated = CircularDistribution::from_fourier(coeffs);
    REQUIRE(ns_compatible(truncated, n_probes, 1e-10).compatible);

    const auto flat = CircularDistribution::uniform();
    const auto wiggly = CircularDistribution::raised_cosine(7);
    for (int i = 0; i < 32; ++i) {
      const double theta = 2.0 * oracles::kPi * i / 32.0;
      CHECK(std::abs(mixture_outcome_density(flat, truncated, theta) -
                     mixture_outcome_density(wiggly, truncated, theta)) <= 1e-9);
    }
  }
  SUBCASE("the sharp window separates them by the sinc magnitude") {
    const int n_probes = 3;
    const int harmonic = 7;
    const auto window = ns_step_distribution(n_probes);
    const auto flat = CircularDistribution::uniform();
    const auto wiggly = CircularDistribution::raised_cosine(harmonic);
    const double gap = mixture_outcome_density(wiggly, window, 0.0) -
                       mixture_outcome_density(flat, window, 0.0);
    CHECK(std::abs(gap) * 2.0 * oracles::kPi ==
          doctest::Approx(sinc_signal(n_probes, harmonic)).epsilon(1e-12));
  }
}

TEST_CASE("qubit_steering") {
  const auto window = ns_step_distribution(1);

  SUBCASE("sharp window gives sin^2(eps)/pi against 1/2pi") {
    for (double eps : {0.1, 0.5, oracles::kPi / 3.0, 1.4}) {
      const auto p = qubit_steering(eps, window);
      CHECK(p.p_basis ==
            doctest::Approx(std::sin(eps) * std::sin(eps) / oracles::kPi).epsilon(1e-12));
      CHECK(p.p_x == doctest::Approx(1.0 / (2.0 * oracles::kPi)).epsilon(1e-12));
    }
  }
  SUBCASE("the balanced angle hides the difference") {
    const auto p = qubit_steering(oracles::kPi / 4.0, window);
    CHECK(p.p_basis == doctest::Approx(p.p_x).epsilon(1e-12));
  }
  SUBCASE("eps = pi/6 quarter-strength case") {
    const auto p = qubit_steering(oracles::kPi / 6.0, window);
    CHECK(p.p_basis == doctest::Approx(1.0 / (4.0 * oracles::kPi)).epsilon(1e-12));
    CHECK(std::abs(p.p_basis - p.p_x) ==
          doctest::Approx(1.0 / (4.0 * oracles::kPi)).epsilon(1e-12));
  }
  SUBCASE("a uniform rule never separates the ensembles") {
    const auto p = qubit_steering(0.7, CircularDistribution::uniform());
    CHECK(p.p_basis == doctest::Approx(p.p_x).epsilon(1e-13));
  }
  SUBCASE("epsilon domain") {
    CHECK_THROWS_AS(qubit_steering(0.0, window), std::invalid_argument);
    CHECK_THROWS_AS(qubit_steering(oracles::kPi / 2.0, window), std::invalid_argument);
  }
}
