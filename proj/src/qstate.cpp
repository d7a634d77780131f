#include "schurpress/qstate.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace schurpress {

namespace {

bool is_power_of_two(std::size_t v) { return v != 0 && (v & (v - 1)) == 0; }

void check_indices(const StateVector& state, std::span<const int> targets,
                   std::span<const int> controls) {
    std::vector<int> seen;
    seen.reserve(targets.size() + controls.size());
    auto check = [&](int q) {
        if (q < 0 || q >= state.num_qubits()) {
            throw std::invalid_argument("qubit index " + std::to_string(q) + " out of range");
        }
        if (std::find(seen.begin(), seen.end(), q) != seen.end()) {
            throw std::invalid_argument("qubit index " + std::to_string(q) + " used twice in one step");
        }
        seen.push_back(q);
    };
    for (int q : targets) check(q);
    for (int q : controls) check(q);
}

void check_orthonormal(const MeasurementBasis& basis) {
    const double n0 = basis.state0.norm();
    const double n1 = basis.state1.norm();
    const Complex overlap = basis.state0.dot(basis.state1);
    if (std::abs(n0 - 1.0) > kAlgebraicTol || std::abs(n1 - 1.0) > kAlgebraicTol ||
        std::abs(overlap) > kAlgebraicTol) {
        throw std::invalid_argument("measurement basis is not orthonormal");
    }
}

}  // namespace

QubitState::QubitState(Complex alpha, Complex beta) : alpha_(alpha), beta_(beta) {
    const double n = std::norm(alpha) + std::norm(beta);
    if (std::abs(n - 1.0) > kAlgebraicTol) {
        throw std::invalid_argument("qubit state is not normalized: |alpha|^2+|beta|^2 = " +
                                    std::to_string(n));
    }
}

StateVector::StateVector(int num_qubits, Vector amplitudes)
    : num_qubits_(num_qubits), amplitudes_(std::move(amplitudes)) {
    if (num_qubits_ < 1) {
        throw std::invalid_argument("state vector needs at least one qubit");
    }
    const auto dim = static_cast<std::size_t>(amplitudes_.size());
    if (!is_power_of_two(dim) || dim != (std::size_t{1} << num_qubits_)) {
        throw std::invalid_argument("amplitude count does not match qubit count");
    }
    if (std::abs(amplitudes_.norm() - 1.0) > kAlgebraicTol) {
        throw std::invalid_argument("state vector is not normalized");
    }
}

StateVector StateVector::basis_state(int num_qubits, std::size_t index) {
    Vector amps = Vector::Zero(Eigen::Index{1} << num_qubits);
    amps(static_cast<Eigen::Index>(index)) = 1.0;
    return StateVector(num_qubits, std::move(amps));
}

Unitary::Unitary(Matrix m) : m_(std::move(m)) {
    if (m_.rows() != m_.cols() || !is_power_of_two(static_cast<std::size_t>(m_.rows()))) {
        throw std::invalid_argument("unitary must be square with power-of-two dimension");
    }
    const Matrix gram = m_.adjoint() * m_;
    const double dev = (gram - Matrix::Identity(m_.rows(), m_.cols())).cwiseAbs().maxCoeff();
    if (dev > kAlgebraicTol) {
        throw std::invalid_argument("matrix is not unitary (max deviation " + std::to_string(dev) + ")");
    }
}

namespace gates {

Unitary identity(int dim) { return Unitary(Matrix::Identity(dim, dim)); }

Unitary pauli_x() {
    Matrix m(2, 2);
    m << 0, 1, 1, 0;
    return Unitary(m);
}

Unitary hadamard() {
    const double s = 1.0 / std::sqrt(2.0);
    Matrix m(2, 2);
    m << s, s, s, -s;
    return Unitary(m);
}

}  // namespace gates

MeasurementBasis MeasurementBasis::computational() {
    return {Eigen::Vector2cd(1.0, 0.0), Eigen::Vector2cd(0.0, 1.0)};
}

MeasurementBasis MeasurementBasis::circular() {
    const double s = 1.0 / std::sqrt(2.0);
    return {Eigen::Vector2cd(s, Complex(0.0, s)), Eigen::Vector2cd(s, Complex(0.0, -s))};
}

bool Circuit::has_measurement() const {
    for (const auto& step : steps) {
        if (std::holds_alternative<MeasureCorrectStep>(step)) {
            return true;
        }
    }
    return false;
}

StateVector make_product_state(const QubitState& psi, int n) {
    if (n < 1) {
        throw std::invalid_argument("product state needs n >= 1 copies");
    }
    const std::size_t dim = std::size_t{1} << n;
    Vector amps(static_cast<Eigen::Index>(dim));
    for (std::size_t k = 0; k < dim; ++k) {
        Complex a = 1.0;
        for (int q = 0; q < n; ++q) {
            a *= StateVector::qubit_bit(k, q, n) ? psi.beta() : psi.alpha();
        }
        amps(static_cast<Eigen::Index>(k)) = a;
    }
    return StateVector(n, std::move(amps));
}

StateVector apply_unitary(const StateVector& state, const Unitary& u,
                          std::span<const int> targets, std::span<const int> controls) {
    check_indices(state, targets, controls);
    const int t = static_cast<int>(targets.size());
    if (u.dim() != (1 << t)) {
        throw std::invalid_argument("unitary dimension does not match target count");
    }

    const int n = state.num_qubits();
    const std::size_t dim = state.dim();
    std::size_t control_mask = 0;
    for (int q : controls) {
        control_mask |= std::size_t{1} << (n - 1 - q);
    }
    std::vector<std::size_t> target_bit(targets.size());
    for (int i = 0; i < t; ++i) {
        target_bit[static_cast<std::size_t>(i)] = std::size_t{1} << (n - 1 - targets[static_cast<std::size_t>(i)]);
    }

    const Matrix& m = u.matrix();
    Vector out = state.amplitudes();
    const std::size_t sub_dim = std::size_t{1} << t;
    for (std::size_t k = 0; k < dim; ++k) {
        if ((k & control_mask) != control_mask) {
            continue;
        }
        // Visit each control-active target subspace once, from its base index.
        bool is_base = true;
        for (std::size_t bit : target_bit) {
            if ((k & bit) != 0) {
                is_base = false;
                break;
            }
        }
        if (!is_base) {
            continue;
        }
        std::vector<std::size_t> idx(sub_dim);
        for (std::size_t j = 0; j < sub_dim; ++j) {
            std::size_t full = k;
            for (int i = 0; i < t; ++i) {
                if ((j >> (t - 1 - i)) & 1U) {
                    full |= target_bit[static_cast<std::size_t>(i)];
                }
            }
            idx[j] = full;
        }
        for (std::size_t r = 0; r < sub_dim; ++r) {
            Complex acc = 0.0;
            for (std::size_t c = 0; c < sub_dim; ++c) {
                acc += m(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(c)) *
                       state.amplitude(idx[c]);
            }
            out(static_cast<Eigen::Index>(idx[r])) = acc;
        }
    }
    return StateVector(n, std::move(out));
}

Unitary circuit_unitary(const Circuit& c) {
    if (c.has_measurement()) {
        throw unsupported_operation("circuit_unitary is undefined for measurement circuits");
    }
    const std::size_t dim = std::size_t{1} << c.num_qubits;
    Matrix total(static_cast<Eigen::Index>(dim), static_cast<Eigen::Index>(dim));
    // Column k of the composed unitary is the circuit applied to |k>.
    for (std::size_t k = 0; k < dim; ++k) {
        StateVector column = StateVector::basis_state(c.num_qubits, k);
        for (const auto& step : c.steps) {
            const auto& us = std::get<UnitaryStep>(step);
            column = apply_unitary(column, us.u, us.targets, us.controls);
        }
        total.col(static_cast<Eigen::Index>(k)) = column.amplitudes();
    }
    return Unitary(std::move(total));
}

MeasurementResult project_onto(const StateVector& state, int qubit,
                               const MeasurementBasis& basis, int outcome) {
    check_orthonormal(basis);
    if (qubit < 0 || qubit >= state.num_qubits()) {
        throw std::invalid_argument("measured qubit index out of range");
    }
    const Eigen::Vector2cd& b = outcome == 0 ? basis.state0 : basis.state1;
    const int n = state.num_qubits();
    const std::size_t bit = std::size_t{1} << (n - 1 - qubit);
    const std::size_t dim = state.dim();

    // <b|_q psi: pair up the qubit's 0/1 components of every basis index.
    Vector projected = Vector::Zero(static_cast<Eigen::Index>(dim));
    double prob = 0.0;
    for (std::size_t k = 0; k < dim; ++k) {
        if ((k & bit) != 0) {
            continue;
        }
        const Complex c = std::conj(b(0)) * state.amplitude(k) +
                          std::conj(b(1)) * state.amplitude(k | bit);
        prob += std::norm(c);
        // Keep the collapsed register in full dimension: |b> on the qubit.
        projected(static_cast<Eigen::Index>(k)) += b(0) * c;
        projected(static_cast<Eigen::Index>(k | bit)) += b(1) * c;
    }
    if (prob <= kAlgebraicTol * kAlgebraicTol) {
        throw internal_error("projected onto a zero-probability measurement branch");
    }
    projected /= std::sqrt(prob);
    return {outcome, StateVector(n, std::move(projected)), prob};
}

MeasurementResult measure_projective(const StateVector& state, int qubit,
                                     const MeasurementBasis& basis, RandomStream& rng) {
    check_orthonormal(basis);
    // Branch probabilities first, then one sample.
    MeasurementResult branch0 = project_onto(state, qubit, basis, 0);
    const double u = uniform_unit(rng);
    if (u < branch0.probability) {
        return branch0;
    }
    MeasurementResult branch1 = project_onto(state, qubit, basis, 1);
    branch1.probability = 1.0 - branch0.probability;
    return branch1;
}

StateVector drop_qubit(const StateVector& state, int qubit, const Eigen::Vector2cd& onto) {
    const int n = state.num_qubits();
    if (n < 2) {
        throw std::invalid_argument("cannot drop the last qubit");
    }
    if (qubit < 0 || qubit >= n) {
        throw std::invalid_argument("dropped qubit index out of range");
    }
    const std::size_t bit = std::size_t{1} << (n - 1 - qubit);
    const std::size_t low_mask = bit - 1;
    const std::size_t out_dim = std::size_t{1} << (n - 1);
    Vector rest(static_cast<Eigen::Index>(out_dim));
    for (std::size_t j = 0; j < out_dim; ++j) {
        const std::size_t high = (j & ~low_mask) << 1;
        const std::size_t base = high | (j & low_mask);
        rest(static_cast<Eigen::Index>(j)) = std::conj(onto(0)) * state.amplitude(base) +
                                             std::conj(onto(1)) * state.amplitude(base | bit);
    }
    const double norm = rest.norm();
    if (std::abs(norm - 1.0) > 1e-9) {
        throw internal_error("dropped qubit was entangled with the rest of the register");
    }
    rest /= norm;
    return StateVector(n - 1, std::move(rest));
}

bool equal_up_to_global_phase(const StateVector& a, const StateVector& b, double tol) {
    if (a.num_qubits() != b.num_qubits()) {
        throw std::invalid_argument("state dimensions differ");
    }
    const Complex overlap = a.amplitudes().dot(b.amplitudes());
    return std::abs(overlap) >= 1.0 - tol;
}

CircuitRun run_circuit(const StateVector& input, const Circuit& c, RandomStream& rng) {
    if (input.num_qubits() != c.num_qubits) {
        throw std::invalid_argument("input register size does not match circuit");
    }
    StateVector state = input;
    std::vector<MeasurementResult> measurements;
    for (const auto& step : c.steps) {
        if (const auto* us = std::get_if<UnitaryStep>(&step)) {
            state = apply_unitary(state, us->u, us->targets, us->controls);
            continue;
        }
        const auto& ms = std::get<MeasureCorrectStep>(step);
        MeasurementResult r = measure_projective(state, ms.qubit, ms.basis, rng);
        const Eigen::Vector2cd& onto = r.outcome == 0 ? ms.basis.state0 : ms.basis.state1;
        StateVector rest = drop_qubit(r.collapsed, ms.qubit, onto);
        const Unitary& correction = ms.corrections[static_cast<std::size_t>(r.outcome)];
        std::vector<int> all(static_cast<std::size_t>(rest.num_qubits()));
        for (int q = 0; q < rest.num_qubits(); ++q) {
            all[static_cast<std::size_t>(q)] = q;
        }
        state = apply_unitary(rest, correction, all);
        measurements.push_back(std::move(r));
    }
    return {std::move(state), std::move(measurements)};
}

}  // namespace schurpress
