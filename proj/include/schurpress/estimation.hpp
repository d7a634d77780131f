#pragma once

#include <cstdint>
#include <vector>

#include "schurpress/collective.hpp"
#include "schurpress/qstate.hpp"

namespace schurpress {

/// Input family cos(2 theta)|0> + e^(i phase) sin(2 theta)|1>. The Z
/// expectation, (1/2)cos(4 theta), does not depend on the phase.
struct ThetaState {
    double theta = 0.0;
    double phase = 0.0;

    QubitState to_qubit_state() const;
    double z_true() const { return 0.5 * std::cos(4.0 * theta); }
    /// Spin expectations (eigenvalues +-1/2) along X, Y, Z.
    std::array<double, 3> spin_expectations() const;
};

/// Compressed-register estimate (2 m1 + m2)/3 from two +-1/2 readouts.
double estimator_zcomp(double m1, double m2);

/// Direct three-copy average (m1 + m2 + m3)/3.
double estimator_zdirect(double m1, double m2, double m3);

/// Single-copy variance along an axis: 1/4 - <S>^2.
double single_copy_variance(const ThetaState& state, const SpinAxis& axis);

enum class TrialMode { compressed, direct3, direct2 };

struct TrialStats {
    int n_trials;
    int runs_per_trial;
    double mean;
    double variance;  // across-trial sample variance of the trial means
    std::uint64_t seed;
};

struct TrialEnsembleResult {
    TrialStats stats;
    std::vector<double> trial_means;
};

/// Repeats `n_trials` trials of `runs_per_trial` single-shot estimates each
/// and reports the distribution of trial means. Expected across-trial
/// variance: V1/(3M) for compressed and direct3, V1/(2M) for direct2.
/// Each trial owns a seed-derived RNG sub-stream, so results are identical
/// under any degree of parallelism.
TrialEnsembleResult run_trial_ensemble(const ThetaState& state, const SpinAxis& axis,
                                       int runs_per_trial, int n_trials, TrialMode mode,
                                       std::uint64_t seed);

/// Outcome counts of `shots` independent single-shot estimates.
struct ShotHistogram {
    std::vector<double> estimates;   // estimate value per bin
    std::vector<long long> counts;   // sampled count per bin
    long long total = 0;

    double mean() const;
    double sample_variance() const;
};

ShotHistogram sample_shot_histogram(const ThetaState& state, const SpinAxis& axis,
                                    TrialMode mode, long long shots, std::uint64_t seed);

struct VarianceSweepRow {
    double theta;
    double v1;                   // single-copy variance along the axis
    double analytic_compressed;  // single-shot variance of the m/3 estimate
    double sampled_compressed;
    double sampled_direct2;
};

/// Fig. 4-style sweep: analytic compressed variance plus sampled compressed
/// and two-copy baselines at each theta.
std::vector<VarianceSweepRow> variance_sweep(const std::vector<double>& thetas,
                                             const SpinAxis& axis, long long shots,
                                             std::uint64_t seed);

/// Mean of the X, Y, Z single-copy variances; equals the variance averaged
/// uniformly over all measurement axes (1/6 for every pure state).
double average_variance(const ThetaState& state);

/// Sphere average of V(S_axis) by direct quadrature (Simpson in the polar
/// angle, periodic rule in the azimuth). Independent route for the identity
/// above, accurate well below 1e-8.
double average_variance_quadrature(const ThetaState& state);

/// Likelihood of the random-axis measurement outcome as a function of the
/// candidate z in [-1/2, 1/2]. Outcome 0 (spin-up):
/// 1/2 + z cos(polar) + (1/2) sqrt(1-4z^2) sin(polar) cos(azimuth).
double likelihood_first(double z, int outcome, double polar, double azimuth);

enum class PairTally { both_up = 0, mixed = 1, both_down = 2 };

/// Likelihood of the two-copy Z tally: (1/2+z)^2, 1/2-2z^2, (1/2-z)^2.
double likelihood_pair(double z, PairTally tally);

/// Argmax over z in [-1/2, 1/2] of likelihood_first * likelihood_pair,
/// via a 2001-point grid followed by golden-section refinement to 1e-10.
/// Boundary maxima are allowed.
double maximize_joint_likelihood(int outcome, PairTally tally, double polar,
                                 double azimuth_guess);

struct GameOutcome {
    int first_outcome;
    PairTally tally;
    double polar;          // known to the estimator
    double azimuth_guess;  // Haar-drawn stand-in for the unknown azimuth
    double z_mle;
};

/// One round of the store-two-measure-one baseline: one copy measured along
/// a Haar-random axis (Born-sampled at the true azimuthal offset), two
/// copies read out in Z, then the joint likelihood is maximized with a
/// freshly drawn azimuth guess.
GameOutcome mle_two_plus_one(double z_true, RandomStream& rng);

struct MleSweepRow {
    double theta;
    double z_true;
    double mse;
};

struct MleSweepResult {
    std::vector<MleSweepRow> rows;
    /// Least-squares K for the one-parameter model MSE = V1/K.
    double fitted_k;
};

MleSweepResult mle_mse_sweep(const std::vector<double>& thetas, long long samples,
                             std::uint64_t seed);

struct Band {
    double lo;
    double hi;
};

/// Central chi-squared acceptance band for a sample variance with the given
/// true value and degrees of freedom.
Band chi_squared_variance_band(double sigma2, int dof, double coverage);

}  // namespace schurpress
