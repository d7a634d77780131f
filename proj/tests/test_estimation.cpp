#include <doctest.h>

#include <cmath>
#include <cstdlib>
#include <numbers>

#include "schurpress/estimation.hpp"
#include "schurpress/schur.hpp"
#include "test_helpers.hpp"

using namespace schurpress;
using namespace schurpress::testing;

namespace {
constexpr double kDeg = std::numbers::pi / 180.0;
constexpr double kPi = std::numbers::pi;
}  // namespace

TEST_CASE("theta state expands as advertised") {
    const ThetaState s{13.5 * kDeg, 0.0};
    const QubitState psi = s.to_qubit_state();
    CHECK(std::real(psi.alpha()) == doctest::Approx(std::cos(27.0 * kDeg)).epsilon(1e-15));
    CHECK(s.z_true() == doctest::Approx(0.5 * std::cos(54.0 * kDeg)).epsilon(1e-15));

    // Z_true ignores the relative phase.
    const ThetaState with_phase{13.5 * kDeg, 1.234};
    CHECK(with_phase.z_true() == s.z_true());
    CHECK(with_phase.spin_expectations()[2] ==
          doctest::Approx(s.spin_expectations()[2]).epsilon(1e-14));
}

TEST_CASE("compressed estimator enumerates the four readout pairs") {
    CHECK(estimator_zcomp(0.5, 0.5) == doctest::Approx(0.5).epsilon(1e-15));
    CHECK(estimator_zcomp(0.5, -0.5) == doctest::Approx(1.0 / 6.0).epsilon(1e-15));
    CHECK(estimator_zcomp(-0.5, 0.5) == doctest::Approx(-1.0 / 6.0).epsilon(1e-15));
    CHECK(estimator_zcomp(-0.5, -0.5) == doctest::Approx(-0.5).epsilon(1e-15));
    CHECK_THROWS_AS(estimator_zcomp(0.4, 0.5), std::invalid_argument);

    // Consistency with the m/3 relabeling, index = 2*(1-2m1)/2 + ...
    const auto ms = spin32_basis_map();
    const double m1[4] = {0.5, 0.5, -0.5, -0.5};
    const double m2[4] = {0.5, -0.5, 0.5, -0.5};
    for (std::size_t k = 0; k < 4; ++k) {
        CHECK(estimator_zcomp(m1[k], m2[k]) == doctest::Approx(ms[k] / 3.0).epsilon(1e-15));
    }
}

TEST_CASE("direct estimator averages three readouts") {
    CHECK(estimator_zdirect(0.5, 0.5, 0.5) == doctest::Approx(0.5).epsilon(1e-15));
    CHECK(estimator_zdirect(0.5, 0.5, -0.5) == doctest::Approx(1.0 / 6.0).epsilon(1e-15));
}

TEST_CASE("direct and compressed single-shot distributions coincide") {
    // 50-point (theta, phase) grid, three axes, equality to 1e-10.
    const SpinAxis axes[3] = {SpinAxis::x(), SpinAxis::y(), SpinAxis::z()};
    for (int it = 0; it < 10; ++it) {
        for (int ip = 0; ip < 5; ++ip) {
            const ThetaState state{it * 4.5 * kDeg, ip * 2.0 * kPi / 5.0};
            const QubitState psi = state.to_qubit_state();
            for (const SpinAxis& axis : axes) {
                const auto compressed = outcome_distribution(compress3(psi), axis);
                const auto tally = direct_tally_distribution(psi, axis);
                for (std::size_t k = 0; k < 4; ++k) {
                    CHECK(std::abs(compressed[k] - tally[k]) <= 1e-10);
                }
            }
        }
    }
}

TEST_CASE("single-copy variance closed forms") {
    for (int i = 0; i <= 10; ++i) {
        const double theta = i * 2.25 * kDeg;
        const ThetaState state{theta, 0.0};
        const double c2 = std::cos(2.0 * theta);
        const double s2 = std::sin(2.0 * theta);
        CHECK(single_copy_variance(state, SpinAxis::z()) ==
              doctest::Approx(c2 * c2 * s2 * s2).epsilon(1e-12));
        CHECK(single_copy_variance(state, SpinAxis::y()) == doctest::Approx(0.25).epsilon(1e-12));
        const double c4 = std::cos(4.0 * theta);
        CHECK(single_copy_variance(state, SpinAxis::x()) ==
              doctest::Approx(c4 * c4 / 4.0).epsilon(1e-12));
    }
}

TEST_CASE("trial ensemble matches the V1/(3M) width") {
    const ThetaState state{13.5 * kDeg, 0.0};
    const TrialEnsembleResult res =
        run_trial_ensemble(state, SpinAxis::z(), 500, 250, TrialMode::compressed, 2024);
    CHECK(res.trial_means.size() == 250);

    const double v1 = single_copy_variance(state, SpinAxis::z());
    const double expected = v1 / (3.0 * 500.0);
    // Sample variance of 250 trials fluctuates with sd ~ sigma^2 sqrt(2/249).
    const double five_sigma = 5.0 * expected * std::sqrt(2.0 / 249.0);
    CHECK(std::abs(res.stats.variance - expected) <= five_sigma);
    CHECK(std::abs(res.stats.mean - state.z_true()) <=
          5.0 * std::sqrt(expected / 250.0));
}

TEST_CASE("two-copy baseline variance is 1.5 times the compressed one") {
    const ThetaState state{13.5 * kDeg, 0.0};
    const ShotHistogram compressed =
        sample_shot_histogram(state, SpinAxis::z(), TrialMode::compressed, 1000000, 11);
    const ShotHistogram direct2 =
        sample_shot_histogram(state, SpinAxis::z(), TrialMode::direct2, 1000000, 13);
    const double ratio = direct2.sample_variance() / compressed.sample_variance();
    CHECK(std::abs(ratio - 1.5) <= 0.03);

    // Simulating the three uncompressed copies gives the same variance and
    // an unbiased mean.
    const ShotHistogram direct3 =
        sample_shot_histogram(state, SpinAxis::z(), TrialMode::direct3, 1000000, 17);
    const double v1 = single_copy_variance(state, SpinAxis::z());
    CHECK(std::abs(direct3.sample_variance() / compressed.sample_variance() - 1.0) <= 0.02);
    CHECK(std::abs(compressed.mean() - state.z_true()) <= 4.0 * std::sqrt(v1 / 3.0 / 1e6));
    CHECK(std::abs(direct3.mean() - state.z_true()) <= 4.0 * std::sqrt(v1 / 3.0 / 1e6));
}

TEST_CASE("single-run trials reproduce the outcome distribution") {
    const ThetaState state{13.5 * kDeg, 0.0};
    const auto probs = outcome_distribution(compress3(state.to_qubit_state()), SpinAxis::z());
    const TrialEnsembleResult res =
        run_trial_ensemble(state, SpinAxis::z(), 1, 100000, TrialMode::compressed, 31);

    const auto ms = spin32_basis_map();
    long long counts[4] = {0, 0, 0, 0};
    for (double mean : res.trial_means) {
        for (std::size_t k = 0; k < 4; ++k) {
            if (std::abs(mean - ms[k] / 3.0) < 1e-12) {
                ++counts[k];
            }
        }
    }
    for (std::size_t k = 0; k < 4; ++k) {
        const double freq = counts[k] / 1e5;
        const double sigma = std::sqrt(probs[k] * (1.0 - probs[k]) / 1e5);
        CHECK(std::abs(freq - probs[k]) <= 4.0 * sigma);
    }
}

TEST_CASE("variance sweep analytic columns") {
    const std::vector<double> thetas = {0.0, 22.5 * kDeg};
    const auto x_rows = variance_sweep(thetas, SpinAxis::x(), 10000, 5);
    CHECK(x_rows[1].analytic_compressed <= 1e-12);  // +X eigenstate at 22.5 deg
    const auto z_rows = variance_sweep(thetas, SpinAxis::z(), 10000, 5);
    CHECK(z_rows[0].analytic_compressed <= 1e-12);  // Z eigenstate at 0
    const auto y_rows = variance_sweep(thetas, SpinAxis::y(), 10000, 5);
    for (const auto& row : y_rows) {
        CHECK(row.analytic_compressed == doctest::Approx(1.0 / 12.0).epsilon(1e-12));
    }
}

TEST_CASE("axis-averaged variance identities") {
    SUBCASE("quadrature cross-check on random states") {
        RandomStream rng(211);
        for (int i = 0; i < 20; ++i) {
            const ThetaState state{uniform_range(rng, 0.0, kPi / 4.0),
                                   uniform_range(rng, 0.0, 2.0 * kPi)};
            const double mean = average_variance(state);
            const double quad = average_variance_quadrature(state);
            CHECK(std::abs(mean - quad) <= 1e-8);
        }
    }

    SUBCASE("pure states always average to 1/6") {
        RandomStream rng(223);
        for (int i = 0; i < 20; ++i) {
            const ThetaState state{uniform_range(rng, 0.0, kPi / 2.0),
                                   uniform_range(rng, 0.0, 2.0 * kPi)};
            CHECK(average_variance(state) == doctest::Approx(1.0 / 6.0).epsilon(1e-12));
            const double vx = single_copy_variance(state, SpinAxis::x());
            const double vy = single_copy_variance(state, SpinAxis::y());
            const double vz = single_copy_variance(state, SpinAxis::z());
            CHECK(vx + vy + vz == doctest::Approx(0.5).epsilon(1e-12));
        }
        const ThetaState zero{0.0, 0.0};
        CHECK(average_variance(zero) == doctest::Approx(1.0 / 6.0).epsilon(1e-15));
        CHECK(average_variance(zero) / 3.0 == doctest::Approx(1.0 / 18.0).epsilon(1e-15));
    }
}

TEST_CASE("first-measurement likelihood") {
    CHECK(likelihood_first(0.3, 0, 0.0, 1.0) == doctest::Approx(0.8).epsilon(1e-12));
    CHECK(likelihood_first(0.3, 0, kPi / 2.0, kPi / 2.0) == doctest::Approx(0.5).epsilon(1e-12));
    CHECK(likelihood_first(0.5, 0, 1.1, 0.3) ==
          doctest::Approx(0.5 + 0.5 * std::cos(1.1)).epsilon(1e-12));
    CHECK(likelihood_first(-0.5, 0, 1.1, 0.3) ==
          doctest::Approx(0.5 - 0.5 * std::cos(1.1)).epsilon(1e-12));
    CHECK_THROWS_AS(likelihood_first(0.6, 0, 0.0, 0.0), std::invalid_argument);

    RandomStream rng(227);
    for (int i = 0; i < 100; ++i) {
        const double z = uniform_range(rng, -0.5, 0.5);
        const double polar = uniform_range(rng, 0.0, kPi);
        const double azimuth = uniform_range(rng, 0.0, 2.0 * kPi);
        const double l0 = likelihood_first(z, 0, polar, azimuth);
        CHECK(l0 >= -1e-15);
        CHECK(l0 <= 1.0 + 1e-15);
        CHECK(l0 + likelihood_first(z, 1, polar, azimuth) == doctest::Approx(1.0).epsilon(1e-12));
    }
}

TEST_CASE("pair likelihood") {
    CHECK(likelihood_pair(0.5, PairTally::both_up) == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(likelihood_pair(0.0, PairTally::both_up) == doctest::Approx(0.25).epsilon(1e-12));
    CHECK(likelihood_pair(0.0, PairTally::mixed) == doctest::Approx(0.5).epsilon(1e-12));
    CHECK(likelihood_pair(0.0, PairTally::both_down) == doctest::Approx(0.25).epsilon(1e-12));

    RandomStream rng(229);
    for (int i = 0; i < 100; ++i) {
        const double z = uniform_range(rng, -0.5, 0.5);
        const double total = likelihood_pair(z, PairTally::both_up) +
                             likelihood_pair(z, PairTally::mixed) +
                             likelihood_pair(z, PairTally::both_down);
        CHECK(total == doctest::Approx(1.0).epsilon(1e-12));
    }
}

TEST_CASE("likelihood maximization spot cases") {
    // Axis aligned with Z, all spin-up: likelihood (1/2+z)^3, boundary max.
    CHECK(maximize_joint_likelihood(0, PairTally::both_up, 0.0, 0.0) == 0.5);
    // Orthogonal axis with an uninformative guess and a mixed tally: z = 0.
    // The argmax of a quadratic peak is resolvable only to ~sqrt(epsilon).
    CHECK(std::abs(maximize_joint_likelihood(0, PairTally::mixed, kPi / 2.0, kPi / 2.0)) <= 1e-7);
}

TEST_CASE("likelihood maximization agrees with a dense grid scan") {
    RandomStream rng(233);
    for (int game = 0; game < 1000; ++game) {
        const int outcome = static_cast<int>(rng() & 1U);
        const PairTally tally = static_cast<PairTally>(rng() % 3);
        const double polar = std::acos(uniform_range(rng, -1.0, 1.0));
        const double azimuth = uniform_range(rng, 0.0, 2.0 * kPi);
        const double z = maximize_joint_likelihood(outcome, tally, polar, azimuth);

        // 10^4-point oracle scan.
        double best_z = -0.5;
        double best_val = -1.0;
        for (int i = 0; i < 10000; ++i) {
            const double zz = -0.5 + i * (1.0 / 9999.0);
            const double val = likelihood_first(zz, outcome, polar, azimuth) *
                               likelihood_pair(zz, tally);
            if (val > best_val) {
                best_val = val;
                best_z = zz;
            }
        }
        const double found_val =
            likelihood_first(z, outcome, polar, azimuth) * likelihood_pair(z, tally);
        const bool agrees = std::abs(z - best_z) <= 2.5e-4 || found_val >= best_val - 1e-12;
        CHECK(agrees);
    }
}

TEST_CASE("one game at the pole keeps a positive spread") {
    RandomStream rng(239);
    double mse = 0.0;
    for (int i = 0; i < 10000; ++i) {
        const GameOutcome game = mle_two_plus_one(0.5, rng);
        CHECK(game.tally == PairTally::both_up);  // (1/2+z)^2 = 1 at z = 1/2
        CHECK(game.z_mle >= -0.5);
        CHECK(game.z_mle <= 0.5);
        mse += (game.z_mle - 0.5) * (game.z_mle - 0.5);
    }
    CHECK(mse / 10000.0 > 0.0);
}

TEST_CASE("mse sweep is deterministic and thread-count independent") {
    const std::vector<double> thetas = {0.0, 11.25 * kDeg, 22.5 * kDeg};
    const MleSweepResult a = mle_mse_sweep(thetas, 20000, 97);
    const MleSweepResult b = mle_mse_sweep(thetas, 20000, 97);
    REQUIRE(a.rows.size() == b.rows.size());
    for (std::size_t i = 0; i < a.rows.size(); ++i) {
        CHECK(a.rows[i].mse == b.rows[i].mse);
    }
    CHECK(a.fitted_k == b.fitted_k);
    CHECK(a.rows[0].mse > 0.0);  // theta = 0

    setenv("SCHURPRESS_THREADS", "4", 1);
    const MleSweepResult c = mle_mse_sweep(thetas, 20000, 97);
    setenv("SCHURPRESS_THREADS", "1", 1);
    const MleSweepResult d = mle_mse_sweep(thetas, 20000, 97);
    unsetenv("SCHURPRESS_THREADS");
    for (std::size_t i = 0; i < a.rows.size(); ++i) {
        CHECK(c.rows[i].mse == a.rows[i].mse);
        CHECK(d.rows[i].mse == a.rows[i].mse);
    }
}

TEST_CASE("chi-squared variance band behaves sensibly") {
    const Band band = chi_squared_variance_band(1.0, 249, 0.99);
    CHECK(band.lo < 1.0);
    CHECK(band.hi > 1.0);
    CHECK(band.lo > 0.7);
    CHECK(band.hi < 1.35);
    const Band tighter = chi_squared_variance_band(1.0, 2490, 0.99);
    CHECK(tighter.hi - tighter.lo < band.hi - band.lo);
    CHECK_THROWS_AS(chi_squared_variance_band(1.0, 0, 0.99), std::invalid_argument);
}
