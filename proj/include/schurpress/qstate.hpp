#pragma once

#include <Eigen/Dense>
#include <array>
#include <complex>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <variant>
#include <vector>

#include "schurpress/rng.hpp"

namespace schurpress {

using Complex = std::complex<double>;
using Matrix = Eigen::MatrixXcd;
using Vector = Eigen::VectorXcd;

// Tolerance policy: algebraic identities at 1e-12, composed circuits at 1e-10.
inline constexpr double kAlgebraicTol = 1e-12;
inline constexpr double kCircuitTol = 1e-10;

struct unsupported_operation : std::logic_error {
    using std::logic_error::logic_error;
};
struct internal_error : std::logic_error {
    using std::logic_error::logic_error;
};
struct resource_limit : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Single-copy pure state alpha|0> + beta|1>, normalized to 1e-12.
class QubitState {
public:
    QubitState(Complex alpha, Complex beta);

    Complex alpha() const { return alpha_; }
    Complex beta() const { return beta_; }

    /// Spin expectations with eigenvalues +-1/2.
    double expect_x() const { return std::real(std::conj(alpha_) * beta_); }
    double expect_y() const { return std::imag(std::conj(alpha_) * beta_); }
    double expect_z() const { return 0.5 * (std::norm(alpha_) - std::norm(beta_)); }

private:
    Complex alpha_;
    Complex beta_;
};

/// Dense state over an ordered qubit register. Basis convention: index bit
/// (num_qubits-1-q) holds qubit q, i.e. qubit 0 is the most significant bit,
/// so |q0 q1 q2> reads left to right as in ket notation.
class StateVector {
public:
    StateVector(int num_qubits, Vector amplitudes);

    static StateVector basis_state(int num_qubits, std::size_t index);

    int num_qubits() const { return num_qubits_; }
    std::size_t dim() const { return static_cast<std::size_t>(amplitudes_.size()); }
    const Vector& amplitudes() const { return amplitudes_; }
    Complex amplitude(std::size_t index) const { return amplitudes_(static_cast<Eigen::Index>(index)); }
    double probability(std::size_t index) const { return std::norm(amplitude(index)); }
    double norm() const { return amplitudes_.norm(); }

    /// Bit of qubit q inside basis index k under the MSB-first convention.
    static int qubit_bit(std::size_t index, int qubit, int num_qubits) {
        return static_cast<int>((index >> (num_qubits - 1 - qubit)) & 1U);
    }

private:
    int num_qubits_;
    Vector amplitudes_;
};

/// Square matrix with U^dag U = I enforced to 1e-12 at construction.
class Unitary {
public:
    explicit Unitary(Matrix m);

    int dim() const { return static_cast<int>(m_.rows()); }
    const Matrix& matrix() const { return m_; }

private:
    Matrix m_;
};

namespace gates {
Unitary identity(int dim);
Unitary pauli_x();
Unitary hadamard();
}  // namespace gates

/// Orthonormal single-qubit measurement basis (checked where consumed).
struct MeasurementBasis {
    Eigen::Vector2cd state0;
    Eigen::Vector2cd state1;

    static MeasurementBasis computational();
    /// (|0> + i|1>)/sqrt(2) and (|0> - i|1>)/sqrt(2).
    static MeasurementBasis circular();
};

struct UnitaryStep {
    Unitary u;
    std::vector<int> targets;
    std::vector<int> controls;
};

/// Measure one qubit, drop it from the register, then apply the
/// outcome-dependent correction to the remaining qubits.
struct MeasureCorrectStep {
    int qubit;
    MeasurementBasis basis;
    std::array<Unitary, 2> corrections;
};

using CircuitStep = std::variant<UnitaryStep, MeasureCorrectStep>;

struct Circuit {
    int num_qubits = 0;
    std::vector<CircuitStep> steps;

    bool has_measurement() const;
};

/// psi^(x)n; amplitude at a bitstring is alpha^(#zeros) * beta^(#ones).
StateVector make_product_state(const QubitState& psi, int n);

/// Applies u to `targets` on the subspace where every control is |1>.
/// Target sub-index is formed with targets[0] as its most significant bit.
StateVector apply_unitary(const StateVector& state, const Unitary& u,
                          std::span<const int> targets, std::span<const int> controls = {});

/// Full-register matrix of a measurement-free circuit, steps composed in
/// application order.
Unitary circuit_unitary(const Circuit& c);

struct MeasurementResult {
    int outcome;
    StateVector collapsed;
    double probability;
};

/// Projective measurement of one qubit in the given basis; Born-rule sampled.
MeasurementResult measure_projective(const StateVector& state, int qubit,
                                     const MeasurementBasis& basis, RandomStream& rng);

/// Deterministic branch of measure_projective (no sampling).
MeasurementResult project_onto(const StateVector& state, int qubit,
                               const MeasurementBasis& basis, int outcome);

/// Contracts away qubit `qubit`, assuming the state factors as
/// |onto> on that qubit tensor the rest (true after projective collapse).
StateVector drop_qubit(const StateVector& state, int qubit, const Eigen::Vector2cd& onto);

/// True iff |<a|b>| >= 1 - tol.
bool equal_up_to_global_phase(const StateVector& a, const StateVector& b, double tol);

struct CircuitRun {
    StateVector state;
    std::vector<MeasurementResult> measurements;
};

/// Executes all steps; MeasureCorrectSteps sample, shrink the register and
/// apply their correction. Remaining qubits keep their relative order.
CircuitRun run_circuit(const StateVector& input, const Circuit& c, RandomStream& rng);

}  // namespace schurpress
