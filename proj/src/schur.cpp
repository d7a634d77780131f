#include "schurpress/schur.hpp"

#include <bit>
#include <cmath>
#include <string>

namespace schurpress {

namespace {

constexpr int kMaxDecodeQubits = 20;

Complex int_pow(Complex base, int exponent) {
    Complex result = 1.0;
    for (int i = 0; i < exponent; ++i) {
        result *= base;
    }
    return result;
}

Circuit build_boxes_1_and_2() {
    // Two-qubit compression stage: CNOT(0->1) then H on qubit 0 controlled
    // by qubit 1. Sends psi(x)psi to (a^2, sqrt(2) a b, b^2, 0).
    Circuit c;
    c.num_qubits = 3;
    c.steps.push_back(UnitaryStep{gates::pauli_x(), {1}, {0}});
    c.steps.push_back(UnitaryStep{gates::hadamard(), {0}, {1}});
    // Third-qubit-controlled stage: on the qubit-2 = |1> branch the pair
    // index is incremented by one (Toffoli carries, CNOT adds).
    c.steps.push_back(UnitaryStep{gates::pauli_x(), {0}, {1, 2}});
    c.steps.push_back(UnitaryStep{gates::pauli_x(), {1}, {2}});
    return c;
}

StateVector state_before_disentangling(const QubitState& psi) {
    RandomStream unused(0);
    return run_circuit(make_product_state(psi, 3), build_boxes_1_and_2(), unused).state;
}

/// Collapsed pair state for one circular-basis branch, pre-correction.
StateVector uncorrected_branch(const QubitState& psi, int outcome) {
    const StateVector staged = state_before_disentangling(psi);
    const MeasurementBasis basis = MeasurementBasis::circular();
    const MeasurementResult r = project_onto(staged, 2, basis, outcome);
    const Eigen::Vector2cd& onto = outcome == 0 ? basis.state0 : basis.state1;
    return drop_qubit(r.collapsed, 2, onto);
}

Unitary correction_for(int outcome) {
    // Solve for the diagonal phases on one probe, confirm on a second.
    const QubitState probe_a(std::cos(0.7), std::sin(0.7));
    const QubitState probe_b(std::cos(0.4), Complex(std::cos(0.9), std::sin(0.9)) * std::sin(0.4));

    Eigen::Vector4cd phases;
    bool first = true;
    for (const QubitState& probe : {probe_a, probe_b}) {
        const StateVector collapsed = uncorrected_branch(probe, outcome);
        const StateVector target = compress3(probe);
        Eigen::Vector4cd ratio;
        for (int j = 0; j < 4; ++j) {
            ratio(j) = target.amplitude(static_cast<std::size_t>(j)) /
                       collapsed.amplitude(static_cast<std::size_t>(j));
        }
        ratio /= ratio(0);  // fix the global phase so entry 0 is 1
        for (int j = 0; j < 4; ++j) {
            if (std::abs(std::abs(ratio(j)) - 1.0) > 1e-10) {
                throw internal_error("feed-forward correction is not phase-only");
            }
            ratio(j) /= std::abs(ratio(j));
        }
        if (first) {
            phases = ratio;
            first = false;
        } else if ((phases - ratio).cwiseAbs().maxCoeff() > 1e-10) {
            throw internal_error("feed-forward correction depends on the input state");
        }
    }
    Matrix diag = Matrix::Zero(4, 4);
    for (int j = 0; j < 4; ++j) {
        diag(j, j) = phases(j);
    }
    return Unitary(std::move(diag));
}

}  // namespace

std::pair<Unitary, Unitary> disentangling_unitaries() {
    const double r2 = std::sqrt(2.0 / 3.0);
    const double r1 = std::sqrt(1.0 / 3.0);
    Matrix u1(2, 2);
    u1 << r2, r1, -r1, r2;
    Matrix u2(2, 2);
    u2 << r1, r2, r2, -r1;
    return {Unitary(std::move(u1)), Unitary(std::move(u2))};
}

Circuit build_qswt3_full() {
    Circuit c = build_boxes_1_and_2();
    auto [u1, u2] = disentangling_unitaries();
    // u2*u1 = X resolves the |11> branch where qubit 2 holds |1>.
    c.steps.push_back(UnitaryStep{std::move(u1), {2}, {1}});
    c.steps.push_back(UnitaryStep{std::move(u2), {2}, {0}});
    return c;
}

Circuit build_qswt3_feedforward() {
    Circuit c = build_boxes_1_and_2();
    c.steps.push_back(MeasureCorrectStep{2, MeasurementBasis::circular(), derive_corrections()});
    return c;
}

StateVector compress3(const QubitState& psi) {
    const Complex a = psi.alpha();
    const Complex b = psi.beta();
    const double r3 = std::sqrt(3.0);
    Vector amps(4);
    amps << a * a * a, r3 * a * a * b, r3 * a * b * b, b * b * b;
    return StateVector(2, std::move(amps));
}

std::array<Unitary, 2> derive_corrections() {
    return {correction_for(0), correction_for(1)};
}

FeedForwardResult run_feedforward(const QubitState& psi, RandomStream& rng) {
    const StateVector staged = state_before_disentangling(psi);
    const MeasurementBasis basis = MeasurementBasis::circular();
    const MeasurementResult r = measure_projective(staged, 2, basis, rng);
    const Eigen::Vector2cd& onto = r.outcome == 0 ? basis.state0 : basis.state1;
    const StateVector pair = drop_qubit(r.collapsed, 2, onto);
    Unitary correction = derive_corrections()[static_cast<std::size_t>(r.outcome)];
    const std::array<int, 2> both{0, 1};
    StateVector corrected = apply_unitary(pair, correction, both);
    return {r.outcome, std::move(corrected), std::move(correction), r.probability};
}

FeedForwardResult run_feedforward_branch(const QubitState& psi, int outcome) {
    const StateVector staged = state_before_disentangling(psi);
    const MeasurementBasis basis = MeasurementBasis::circular();
    const MeasurementResult r = project_onto(staged, 2, basis, outcome);
    const Eigen::Vector2cd& onto = outcome == 0 ? basis.state0 : basis.state1;
    const StateVector pair = drop_qubit(r.collapsed, 2, onto);
    Unitary correction = derive_corrections()[static_cast<std::size_t>(outcome)];
    const std::array<int, 2> both{0, 1};
    StateVector corrected = apply_unitary(pair, correction, both);
    return {outcome, std::move(corrected), std::move(correction), r.probability};
}

double binomial(int n, int k) {
    if (k < 0 || k > n) {
        return 0.0;
    }
    double result = 1.0;
    for (int i = 1; i <= k; ++i) {
        result = result * static_cast<double>(n - k + i) / static_cast<double>(i);
    }
    return std::round(result);
}

int SymmetricCode::packed_qubits() const {
    int q = 0;
    while ((1 << q) < n_copies + 1) {
        ++q;
    }
    return q == 0 ? 1 : q;
}

StateVector SymmetricCode::packed_state() const {
    const int q = packed_qubits();
    Vector amps = Vector::Zero(Eigen::Index{1} << q);
    amps.head(coefficients.size()) = coefficients;
    return StateVector(q, std::move(amps));
}

SymmetricCode symmetric_encode(const QubitState& psi, int n) {
    if (n < 1) {
        throw std::invalid_argument("symmetric code needs n >= 1 copies");
    }
    Vector coeffs(n + 1);
    for (int k = 0; k <= n; ++k) {
        coeffs(k) = std::sqrt(binomial(n, k)) * int_pow(psi.alpha(), n - k) *
                    int_pow(psi.beta(), k);
    }
    return {n, std::move(coeffs)};
}

SymmetricCode symmetric_encode_general(const StateVector& symmetric_state) {
    const int n = symmetric_state.num_qubits();
    const std::size_t dim = symmetric_state.dim();

    // Adjacent transpositions generate S_n, so checking them suffices.
    double max_asymmetry = 0.0;
    for (int q = 0; q + 1 < n; ++q) {
        const std::size_t hi = std::size_t{1} << (n - 1 - q);
        const std::size_t lo = std::size_t{1} << (n - 2 - q);
        for (std::size_t k = 0; k < dim; ++k) {
            const bool b_hi = (k & hi) != 0;
            const bool b_lo = (k & lo) != 0;
            if (b_hi == b_lo) {
                continue;
            }
            const std::size_t swapped = (k ^ hi) ^ lo;
            max_asymmetry = std::max(
                max_asymmetry,
                std::abs(symmetric_state.amplitude(k) - symmetric_state.amplitude(swapped)));
        }
    }
    if (max_asymmetry > 1e-10) {
        throw std::invalid_argument("state is not permutation-invariant (max asymmetry " +
                                    std::to_string(max_asymmetry) + ")");
    }

    Vector coeffs(n + 1);
    for (int k = 0; k <= n; ++k) {
        // Any weight-k representative carries the Dicke amplitude; use the
        // lowest index, k ones in the least significant bits.
        const std::size_t rep = (std::size_t{1} << k) - 1;
        coeffs(k) = symmetric_state.amplitude(rep) * std::sqrt(binomial(n, k));
    }
    const double norm = coeffs.norm();
    if (std::abs(norm - 1.0) > 1e-10) {
        throw internal_error("symmetric code norm deviates: " + std::to_string(norm));
    }
    coeffs /= norm;
    return {n, std::move(coeffs)};
}

StateVector symmetric_decode(const SymmetricCode& code) {
    const int n = code.n_copies;
    if (n > kMaxDecodeQubits) {
        throw resource_limit("decode target of " + std::to_string(n) +
                             " qubits exceeds the dense-representation cap of 20");
    }
    const std::size_t dim = std::size_t{1} << n;
    Vector amps(static_cast<Eigen::Index>(dim));
    for (std::size_t k = 0; k < dim; ++k) {
        const int weight = std::popcount(k);
        amps(static_cast<Eigen::Index>(k)) = code.coefficients(weight) / std::sqrt(binomial(n, weight));
    }
    return StateVector(n, std::move(amps));
}

}  // namespace schurpress
