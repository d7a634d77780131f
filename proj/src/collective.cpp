#include "schurpress/collective.hpp"

#include <cmath>

namespace schurpress {

namespace {

// Spin-3/2 ladder amplitudes <m+1|J+|m> for m = +1/2, -1/2, -3/2.
constexpr double kLadder[3] = {1.7320508075688772, 2.0, 1.7320508075688772};

Eigen::Matrix4cd spin_jx() {
    Eigen::Matrix4cd m = Eigen::Matrix4cd::Zero();
    for (int i = 0; i < 3; ++i) {
        m(i, i + 1) = 0.5 * kLadder[i];
        m(i + 1, i) = 0.5 * kLadder[i];
    }
    return m;
}

Eigen::Matrix4cd spin_jy() {
    Eigen::Matrix4cd m = Eigen::Matrix4cd::Zero();
    for (int i = 0; i < 3; ++i) {
        m(i, i + 1) = Complex(0.0, -0.5) * kLadder[i];
        m(i + 1, i) = Complex(0.0, 0.5) * kLadder[i];
    }
    return m;
}

Eigen::Matrix4cd spin_jz() {
    Eigen::Matrix4cd m = Eigen::Matrix4cd::Zero();
    const auto ms = spin32_basis_map();
    for (int i = 0; i < 4; ++i) {
        m(i, i) = ms[static_cast<std::size_t>(i)];
    }
    return m;
}

}  // namespace

std::array<double, 3> SpinAxis::direction() const {
    return {std::sin(polar) * std::cos(azimuth), std::sin(polar) * std::sin(azimuth),
            std::cos(polar)};
}

std::array<double, 4> spin32_basis_map() { return {1.5, 0.5, -0.5, -1.5}; }

Eigen::Matrix4cd collective_operator(const SpinAxis& axis) {
    const auto n = axis.direction();
    return n[0] * spin_jx() + n[1] * spin_jy() + n[2] * spin_jz();
}

Unitary basis_change(const SpinAxis& axis) {
    const Eigen::Matrix4cd op = collective_operator(axis);
    Eigen::SelfAdjointEigenSolver<Eigen::Matrix4cd> solver(op);
    // Solver orders eigenvalues ascending; rows want m descending.
    Eigen::Matrix4cd b;
    for (int row = 0; row < 4; ++row) {
        Eigen::Vector4cd v = solver.eigenvectors().col(3 - row);
        const double scale = v.cwiseAbs().maxCoeff();
        for (int j = 0; j < 4; ++j) {
            if (std::abs(v(j)) > 1e-9 * scale) {
                v *= std::conj(v(j)) / std::abs(v(j));
                break;
            }
        }
        b.row(row) = v.adjoint();
    }
    return Unitary(Matrix(b));
}

std::array<double, 4> outcome_distribution(const StateVector& two_qubits, const SpinAxis& axis) {
    if (two_qubits.num_qubits() != 2) {
        throw std::invalid_argument("collective measurement needs a two-qubit state");
    }
    const Unitary b = basis_change(axis);
    const Vector rotated = b.matrix() * two_qubits.amplitudes();
    std::array<double, 4> probs{};
    double sum = 0.0;
    for (int i = 0; i < 4; ++i) {
        probs[static_cast<std::size_t>(i)] = std::norm(rotated(i));
        sum += probs[static_cast<std::size_t>(i)];
    }
    for (double& p : probs) {
        p /= sum;
    }
    return probs;
}

CollectiveOutcome sample_outcome(const StateVector& two_qubits, const SpinAxis& axis,
                                 RandomStream& rng) {
    const auto probs = outcome_distribution(two_qubits, axis);
    const auto ms = spin32_basis_map();
    const double u = uniform_unit(rng);
    double acc = 0.0;
    for (std::size_t i = 0; i < 4; ++i) {
        acc += probs[i];
        if (u < acc || i == 3) {
            return {ms[i], ms[i] / 3.0, probs[i]};
        }
    }
    throw internal_error("outcome sampling fell through a normalized distribution");
}

std::array<double, 4> leaky_x_distribution(const StateVector& two_qubits, double leak_p) {
    if (!(leak_p >= 0.0 && leak_p <= 1.0)) {
        throw std::invalid_argument("leakage probability must lie in [0, 1]");
    }
    const auto ideal = outcome_distribution(two_qubits, SpinAxis::x());
    if (leak_p == 0.0) {
        return ideal;
    }
    std::array<double, 4> leaky{};
    for (std::size_t k = 0; k < 4; ++k) {
        leaky[k] = (1.0 - leak_p) * ideal[k] + leak_p * ideal[k ^ 2U];
    }
    return leaky;
}

EstimateMoments estimate_moments(const std::array<double, 4>& distribution) {
    const auto ms = spin32_basis_map();
    double mean = 0.0;
    double second = 0.0;
    for (std::size_t i = 0; i < 4; ++i) {
        const double e = ms[i] / 3.0;
        mean += e * distribution[i];
        second += e * e * distribution[i];
    }
    return {mean, second - mean * mean};
}

}  // namespace schurpress
