#include "schurpress/estimation.hpp"

#include <boost/math/distributions/chi_squared.hpp>
#include <cmath>
#include <numbers>

#include "schurpress/parallel.hpp"
#include "schurpress/schur.hpp"

namespace schurpress {

namespace {

constexpr long long kShotBlock = 1 << 16;
constexpr long long kGameBlock = 1 << 13;

enum StreamPurpose : std::uint64_t {
    kStreamTrial = 1,
    kStreamShots = 2,
    kStreamGames = 3,
};

std::uint64_t stream_tag(StreamPurpose purpose, std::uint64_t sub) {
    return (static_cast<std::uint64_t>(purpose) << 32) | sub;
}

/// Probability of a spin-up outcome when measuring one copy along `axis`.
double single_up_probability(const QubitState& psi, const SpinAxis& axis) {
    const double half = 0.5 * axis.polar;
    const Complex phase(std::cos(axis.azimuth), -std::sin(axis.azimuth));
    const Complex overlap = std::cos(half) * psi.alpha() + phase * std::sin(half) * psi.beta();
    return std::norm(overlap);
}

int sample_bin(const double* cdf, int bins, double u) {
    for (int i = 0; i < bins - 1; ++i) {
        if (u < cdf[i]) {
            return i;
        }
    }
    return bins - 1;
}

struct ShotModel {
    std::vector<double> estimates;
    std::vector<double> cdf;
    int draws_per_shot;          // uniform draws consumed per shot
    std::vector<double> probs;   // per-bin probability (analytic)
};

ShotModel make_shot_model(const ThetaState& state, const SpinAxis& axis, TrialMode mode) {
    ShotModel model;
    const QubitState psi = state.to_qubit_state();
    if (mode == TrialMode::compressed) {
        const auto probs = outcome_distribution(compress3(psi), axis);
        const auto ms = spin32_basis_map();
        double acc = 0.0;
        for (std::size_t i = 0; i < 4; ++i) {
            model.estimates.push_back(ms[i] / 3.0);
            model.probs.push_back(probs[i]);
            acc += probs[i];
            model.cdf.push_back(acc);
        }
        model.draws_per_shot = 1;
        return model;
    }
    const int copies = mode == TrialMode::direct3 ? 3 : 2;
    const double p_up = single_up_probability(psi, axis);
    for (int down = 0; down <= copies; ++down) {
        const int up = copies - down;
        model.estimates.push_back((up * 0.5 - down * 0.5) / copies);
        model.probs.push_back(binomial(copies, down) * std::pow(p_up, up) *
                              std::pow(1.0 - p_up, down));
    }
    model.draws_per_shot = copies;
    double acc = 0.0;
    for (double p : model.probs) {
        acc += p;
        model.cdf.push_back(acc);
    }
    return model;
}

/// One shot under a model; direct modes consume one Bernoulli per copy.
int sample_shot(const ShotModel& model, TrialMode mode, double p_up, RandomStream& rng) {
    if (mode == TrialMode::compressed) {
        return sample_bin(model.cdf.data(), static_cast<int>(model.cdf.size()),
                          uniform_unit(rng));
    }
    int down = 0;
    for (int c = 0; c < model.draws_per_shot; ++c) {
        if (uniform_unit(rng) >= p_up) {
            ++down;
        }
    }
    return down;
}

double grid_z(int i) { return -0.5 + static_cast<double>(i) * (1.0 / 2000.0); }

struct LikelihoodGrid {
    std::array<double, 2001> z;
    std::array<double, 2001> w;  // sqrt(1 - 4z^2)
    std::array<double, 2001> pair[3];
};

const LikelihoodGrid& likelihood_grid() {
    static const LikelihoodGrid grid = [] {
        LikelihoodGrid g;
        for (int i = 0; i <= 2000; ++i) {
            const double z = grid_z(i);
            g.z[static_cast<std::size_t>(i)] = z;
            g.w[static_cast<std::size_t>(i)] = std::sqrt(std::max(0.0, 1.0 - 4.0 * z * z));
            g.pair[0][static_cast<std::size_t>(i)] = (0.5 + z) * (0.5 + z);
            g.pair[1][static_cast<std::size_t>(i)] = 0.5 - 2.0 * z * z;
            g.pair[2][static_cast<std::size_t>(i)] = (0.5 - z) * (0.5 - z);
        }
        return g;
    }();
    return grid;
}

}  // namespace

QubitState ThetaState::to_qubit_state() const {
    const Complex phase_factor(std::cos(phase), std::sin(phase));
    return QubitState(std::cos(2.0 * theta), phase_factor * std::sin(2.0 * theta));
}

std::array<double, 3> ThetaState::spin_expectations() const {
    const QubitState psi = to_qubit_state();
    return {psi.expect_x(), psi.expect_y(), psi.expect_z()};
}

double estimator_zcomp(double m1, double m2) {
    if (std::abs(std::abs(m1) - 0.5) > kAlgebraicTol || std::abs(std::abs(m2) - 0.5) > kAlgebraicTol) {
        throw std::invalid_argument("readouts must be +-1/2");
    }
    return (2.0 * m1 + m2) / 3.0;
}

double estimator_zdirect(double m1, double m2, double m3) {
    return (m1 + m2 + m3) / 3.0;
}

double single_copy_variance(const ThetaState& state, const SpinAxis& axis) {
    const auto v = state.spin_expectations();
    const auto n = axis.direction();
    const double mean = n[0] * v[0] + n[1] * v[1] + n[2] * v[2];
    return 0.25 - mean * mean;
}

TrialEnsembleResult run_trial_ensemble(const ThetaState& state, const SpinAxis& axis,
                                       int runs_per_trial, int n_trials, TrialMode mode,
                                       std::uint64_t seed) {
    if (runs_per_trial < 1 || n_trials < 1) {
        throw std::invalid_argument("runs_per_trial and n_trials must be positive");
    }
    const ShotModel model = make_shot_model(state, axis, mode);
    const double p_up = mode == TrialMode::compressed
                            ? 0.0
                            : single_up_probability(state.to_qubit_state(), axis);

    std::vector<double> means(static_cast<std::size_t>(n_trials));
    const std::uint64_t mode_tag = static_cast<std::uint64_t>(mode);
    for_each_block(static_cast<std::size_t>(n_trials), [&](std::size_t trial) {
        RandomStream rng = derive_stream(seed, stream_tag(kStreamTrial, mode_tag), trial);
        double sum = 0.0;
        for (int r = 0; r < runs_per_trial; ++r) {
            sum += model.estimates[static_cast<std::size_t>(sample_shot(model, mode, p_up, rng))];
        }
        means[trial] = sum / runs_per_trial;
    });

    double mean = 0.0;
    for (double m : means) {
        mean += m;
    }
    mean /= n_trials;
    double var = 0.0;
    for (double m : means) {
        var += (m - mean) * (m - mean);
    }
    var = n_trials > 1 ? var / (n_trials - 1) : 0.0;

    return {{n_trials, runs_per_trial, mean, var, seed}, std::move(means)};
}

double ShotHistogram::mean() const {
    double sum = 0.0;
    for (std::size_t i = 0; i < counts.size(); ++i) {
        sum += static_cast<double>(counts[i]) * estimates[i];
    }
    return sum / static_cast<double>(total);
}

double ShotHistogram::sample_variance() const {
    const double mu = mean();
    double ss = 0.0;
    for (std::size_t i = 0; i < counts.size(); ++i) {
        ss += static_cast<double>(counts[i]) * (estimates[i] - mu) * (estimates[i] - mu);
    }
    return total > 1 ? ss / static_cast<double>(total - 1) : 0.0;
}

ShotHistogram sample_shot_histogram(const ThetaState& state, const SpinAxis& axis,
                                    TrialMode mode, long long shots, std::uint64_t seed) {
    if (shots < 1) {
        throw std::invalid_argument("shots must be positive");
    }
    const ShotModel model = make_shot_model(state, axis, mode);
    const double p_up = mode == TrialMode::compressed
                            ? 0.0
                            : single_up_probability(state.to_qubit_state(), axis);
    const std::size_t bins = model.estimates.size();
    const std::size_t n_blocks = static_cast<std::size_t>((shots + kShotBlock - 1) / kShotBlock);

    // Integer per-block counts make the reduction exact and order-free.
    const std::uint64_t mode_tag = static_cast<std::uint64_t>(mode);
    std::vector<std::vector<long long>> partial(n_blocks, std::vector<long long>(bins, 0));
    for_each_block(n_blocks, [&](std::size_t block) {
        RandomStream rng = derive_stream(seed, stream_tag(kStreamShots, mode_tag), block);
        const long long begin = static_cast<long long>(block) * kShotBlock;
        const long long end = std::min(shots, begin + kShotBlock);
        auto& counts = partial[block];
        for (long long s = begin; s < end; ++s) {
            ++counts[static_cast<std::size_t>(sample_shot(model, mode, p_up, rng))];
        }
    });

    ShotHistogram hist;
    hist.estimates = model.estimates;
    hist.counts.assign(bins, 0);
    for (const auto& counts : partial) {
        for (std::size_t i = 0; i < bins; ++i) {
            hist.counts[i] += counts[i];
        }
    }
    hist.total = shots;
    return hist;
}

std::vector<VarianceSweepRow> variance_sweep(const std::vector<double>& thetas,
                                             const SpinAxis& axis, long long shots,
                                             std::uint64_t seed) {
    std::vector<VarianceSweepRow> rows;
    rows.reserve(thetas.size());
    std::uint64_t sub = 0;
    for (double theta : thetas) {
        const ThetaState state{theta, 0.0};
        const auto probs = outcome_distribution(compress3(state.to_qubit_state()), axis);
        const auto moments = estimate_moments(probs);
        const ShotHistogram compressed = sample_shot_histogram(
            state, axis, TrialMode::compressed, shots, mix64(seed + 1000 + sub));
        const ShotHistogram direct2 = sample_shot_histogram(
            state, axis, TrialMode::direct2, shots, mix64(seed + 2000 + sub));
        rows.push_back({theta, single_copy_variance(state, axis), moments.variance,
                        compressed.sample_variance(), direct2.sample_variance()});
        ++sub;
    }
    return rows;
}

double average_variance(const ThetaState& state) {
    const double vx = single_copy_variance(state, SpinAxis::x());
    const double vy = single_copy_variance(state, SpinAxis::y());
    const double vz = single_copy_variance(state, SpinAxis::z());
    return (vx + vy + vz) / 3.0;
}

double average_variance_quadrature(const ThetaState& state) {
    const auto v = state.spin_expectations();
    const auto variance_at = [&](double polar, double azimuth) {
        const SpinAxis axis{polar, azimuth};
        const auto n = axis.direction();
        const double mean = n[0] * v[0] + n[1] * v[1] + n[2] * v[2];
        return 0.25 - mean * mean;
    };

    constexpr int kPolarIntervals = 2048;  // Simpson, even count
    constexpr int kAzimuthPoints = 64;     // periodic midpoint rule
    const double pi = std::numbers::pi;
    const double h = pi / kPolarIntervals;

    double sphere_sum = 0.0;
    for (int j = 0; j < kAzimuthPoints; ++j) {
        const double azimuth = (j + 0.5) * (2.0 * pi / kAzimuthPoints);
        double simpson = 0.0;
        for (int i = 0; i <= kPolarIntervals; ++i) {
            const double polar = i * h;
            const double f = variance_at(polar, azimuth) * std::sin(polar);
            const double weight = (i == 0 || i == kPolarIntervals) ? 1.0 : (i % 2 == 1 ? 4.0 : 2.0);
            simpson += weight * f;
        }
        sphere_sum += simpson * h / 3.0;
    }
    return sphere_sum * (2.0 * pi / kAzimuthPoints) / (4.0 * pi);
}

double likelihood_first(double z, int outcome, double polar, double azimuth) {
    if (!(z >= -0.5 && z <= 0.5)) {
        throw std::invalid_argument("z must lie in [-1/2, 1/2]");
    }
    const double up = 0.5 + z * std::cos(polar) +
                      0.5 * std::sqrt(std::max(0.0, 1.0 - 4.0 * z * z)) * std::sin(polar) *
                          std::cos(azimuth);
    return outcome == 0 ? up : 1.0 - up;
}

double likelihood_pair(double z, PairTally tally) {
    if (!(z >= -0.5 && z <= 0.5)) {
        throw std::invalid_argument("z must lie in [-1/2, 1/2]");
    }
    switch (tally) {
        case PairTally::both_up:
            return (0.5 + z) * (0.5 + z);
        case PairTally::mixed:
            return 0.5 - 2.0 * z * z;
        case PairTally::both_down:
            return (0.5 - z) * (0.5 - z);
    }
    throw std::invalid_argument("unknown pair tally");
}

double maximize_joint_likelihood(int outcome, PairTally tally, double polar,
                                 double azimuth_guess) {
    const LikelihoodGrid& grid = likelihood_grid();
    const double sign = outcome == 0 ? 1.0 : -1.0;
    const double a = sign * std::cos(polar);
    const double b = sign * 0.5 * std::sin(polar) * std::cos(azimuth_guess);
    const double* g = grid.pair[static_cast<std::size_t>(tally)].data();

    int best = 0;
    double best_val = -1.0;
    for (int i = 0; i <= 2000; ++i) {
        const std::size_t u = static_cast<std::size_t>(i);
        const double val = (0.5 + grid.z[u] * a + grid.w[u] * b) * g[u];
        if (val > best_val) {
            best_val = val;
            best = i;
        }
    }

    const auto eval = [&](double z) {
        const double w = std::sqrt(std::max(0.0, 1.0 - 4.0 * z * z));
        return (0.5 + z * a + w * b) * likelihood_pair(z, tally);
    };

    // Golden-section refinement on the bracket around the best grid point.
    double lo = grid_z(std::max(0, best - 1));
    double hi = grid_z(std::min(2000, best + 1));
    constexpr double kInvPhi = 0.6180339887498949;
    double x1 = hi - kInvPhi * (hi - lo);
    double x2 = lo + kInvPhi * (hi - lo);
    double f1 = eval(x1);
    double f2 = eval(x2);
    while (hi - lo > 1e-10) {
        if (f1 < f2) {
            lo = x1;
            x1 = x2;
            f1 = f2;
            x2 = lo + kInvPhi * (hi - lo);
            f2 = eval(x2);
        } else {
            hi = x2;
            x2 = x1;
            f2 = f1;
            x1 = hi - kInvPhi * (hi - lo);
            f1 = eval(x1);
        }
    }
    double z = 0.5 * (lo + hi);
    // Keep exact boundary maxima at the boundary.
    if (best == 0 && eval(-0.5) >= eval(z)) {
        z = -0.5;
    } else if (best == 2000 && eval(0.5) >= eval(z)) {
        z = 0.5;
    }
    return z;
}

GameOutcome mle_two_plus_one(double z_true, RandomStream& rng) {
    if (!(z_true >= -0.5 && z_true <= 0.5)) {
        throw std::invalid_argument("z_true must lie in [-1/2, 1/2]");
    }
    const double pi = std::numbers::pi;
    const double cos_polar = uniform_range(rng, -1.0, 1.0);
    const double polar = std::acos(cos_polar);
    const double azimuth_true = uniform_range(rng, 0.0, 2.0 * pi);

    const double p_up = likelihood_first(z_true, 0, polar, azimuth_true);
    const int outcome = uniform_unit(rng) < p_up ? 0 : 1;

    const double u = uniform_unit(rng);
    PairTally tally = PairTally::both_down;
    const double p00 = likelihood_pair(z_true, PairTally::both_up);
    const double p01 = likelihood_pair(z_true, PairTally::mixed);
    if (u < p00) {
        tally = PairTally::both_up;
    } else if (u < p00 + p01) {
        tally = PairTally::mixed;
    }

    const double azimuth_guess = uniform_range(rng, 0.0, 2.0 * pi);
    const double z_mle = maximize_joint_likelihood(outcome, tally, polar, azimuth_guess);
    return {outcome, tally, polar, azimuth_guess, z_mle};
}

MleSweepResult mle_mse_sweep(const std::vector<double>& thetas, long long samples,
                             std::uint64_t seed) {
    if (samples < 1) {
        throw std::invalid_argument("samples must be positive");
    }
    MleSweepResult result;
    result.rows.reserve(thetas.size());

    for (std::size_t ti = 0; ti < thetas.size(); ++ti) {
        const double z_true = ThetaState{thetas[ti], 0.0}.z_true();
        const std::size_t n_blocks =
            static_cast<std::size_t>((samples + kGameBlock - 1) / kGameBlock);
        std::vector<double> partial(n_blocks, 0.0);
        for_each_block(n_blocks, [&](std::size_t block) {
            RandomStream rng = derive_stream(seed, stream_tag(kStreamGames, ti), block);
            const long long begin = static_cast<long long>(block) * kGameBlock;
            const long long end = std::min(samples, begin + kGameBlock);
            double sum_sq = 0.0;
            for (long long s = begin; s < end; ++s) {
                const GameOutcome game = mle_two_plus_one(z_true, rng);
                const double d = game.z_mle - z_true;
                sum_sq += d * d;
            }
            partial[block] = sum_sq;
        });
        double total = 0.0;
        for (double p : partial) {
            total += p;
        }
        result.rows.push_back({thetas[ti], z_true, total / static_cast<double>(samples)});
    }

    double num = 0.0;
    double den = 0.0;
    for (const auto& row : result.rows) {
        const double v1 = single_copy_variance(ThetaState{row.theta, 0.0}, SpinAxis::z());
        num += v1 * v1;
        den += v1 * row.mse;
    }
    result.fitted_k = den > 0.0 ? num / den : 0.0;
    return result;
}

Band chi_squared_variance_band(double sigma2, int dof, double coverage) {
    if (dof < 1 || !(coverage > 0.0 && coverage < 1.0)) {
        throw std::invalid_argument("need dof >= 1 and coverage in (0, 1)");
    }
    const boost::math::chi_squared dist(dof);
    const double tail = 0.5 * (1.0 - coverage);
    return {boost::math::quantile(dist, tail) * sigma2 / dof,
            boost::math::quantile(dist, 1.0 - tail) * sigma2 / dof};
}

}  // namespace schurpress
