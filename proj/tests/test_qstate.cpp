#include <doctest.h>

#include <cmath>
#include <numbers>

#include "schurpress/qstate.hpp"
#include "schurpress/schur.hpp"
#include "test_helpers.hpp"

using namespace schurpress;
using namespace schurpress::testing;

namespace {
constexpr double kDeg = std::numbers::pi / 180.0;
}

TEST_CASE("qubit state validates normalization") {
    CHECK_NOTHROW(QubitState(std::cos(0.3), std::sin(0.3)));
    CHECK_THROWS_AS(QubitState(0.9, 0.1), std::invalid_argument);
}

TEST_CASE("product state of |0> is the all-zeros basis state") {
    const StateVector s = make_product_state(QubitState(1.0, 0.0), 3);
    CHECK(std::abs(s.amplitude(0) - 1.0) <= kAlgebraicTol);
    for (std::size_t k = 1; k < 8; ++k) {
        CHECK(std::abs(s.amplitude(k)) <= kAlgebraicTol);
    }
}

TEST_CASE("product state of |+> is uniform") {
    const double r = 1.0 / std::sqrt(2.0);
    const StateVector s = make_product_state(QubitState(r, r), 2);
    for (std::size_t k = 0; k < 4; ++k) {
        CHECK(std::abs(s.amplitude(k) - 0.5) <= kAlgebraicTol);
    }
}

TEST_CASE("product state amplitude follows the direct product formula") {
    const double c = std::cos(27.0 * kDeg);
    const double sn = std::sin(27.0 * kDeg);
    const StateVector s = make_product_state(QubitState(c, sn), 3);
    // |011>: qubit 0 in |0>, qubits 1 and 2 in |1>.
    CHECK(std::abs(s.amplitude(3) - c * sn * sn) <= kAlgebraicTol);
    CHECK(std::abs(s.amplitude(3)) == doctest::Approx(0.18365).epsilon(1e-4));
    CHECK_THROWS_AS(make_product_state(QubitState(1.0, 0.0), 0), std::invalid_argument);
}

TEST_CASE("controlled gate application matches the CNOT truth table") {
    const Unitary x = gates::pauli_x();
    const std::array<int, 1> target{1};
    const std::array<int, 1> control{0};

    const StateVector s10 = StateVector::basis_state(2, 2);
    const StateVector after = apply_unitary(s10, x, target, control);
    CHECK(std::abs(after.amplitude(3) - 1.0) <= kAlgebraicTol);

    const StateVector s00 = StateVector::basis_state(2, 0);
    const StateVector same = apply_unitary(s00, x, target, control);
    CHECK(std::abs(same.amplitude(0) - 1.0) <= kAlgebraicTol);
}

TEST_CASE("controlled Hadamard row") {
    const StateVector s11 = StateVector::basis_state(2, 3);
    const std::array<int, 1> target{1};
    const std::array<int, 1> control{0};
    const StateVector after = apply_unitary(s11, gates::hadamard(), target, control);
    const double r = 1.0 / std::sqrt(2.0);
    CHECK(std::abs(after.amplitude(2) - r) <= kAlgebraicTol);
    CHECK(std::abs(after.amplitude(3) + r) <= kAlgebraicTol);
}

TEST_CASE("gate application rejects bad arguments") {
    const StateVector s = StateVector::basis_state(2, 0);
    const std::array<int, 2> two_targets{0, 1};
    CHECK_THROWS_AS(apply_unitary(s, gates::pauli_x(), two_targets), std::invalid_argument);
    const std::array<int, 1> target{0};
    const std::array<int, 1> collide{0};
    CHECK_THROWS_AS(apply_unitary(s, gates::pauli_x(), target, collide), std::invalid_argument);
}

TEST_CASE("circuit unitary of an empty circuit is the identity") {
    Circuit c;
    c.num_qubits = 2;
    const Unitary u = circuit_unitary(c);
    CHECK((u.matrix() - Matrix::Identity(4, 4)).cwiseAbs().maxCoeff() <= kAlgebraicTol);
}

TEST_CASE("circuit unitary of a CNOT is the expected permutation") {
    Circuit c;
    c.num_qubits = 2;
    c.steps.push_back(UnitaryStep{gates::pauli_x(), {1}, {0}});
    const Matrix m = circuit_unitary(c).matrix();
    Matrix expected = Matrix::Zero(4, 4);
    expected(0, 0) = 1;
    expected(1, 1) = 1;
    expected(2, 3) = 1;
    expected(3, 2) = 1;
    CHECK((m - expected).cwiseAbs().maxCoeff() <= kAlgebraicTol);
}

TEST_CASE("full compression circuit as a matrix reproduces the formula") {
    const Unitary u = circuit_unitary(build_qswt3_full());
    RandomStream rng(11);
    for (int i = 0; i < 100; ++i) {
        const QubitState psi = haar_random_qubit(rng);
        const Vector out = u.matrix() * make_product_state(psi, 3).amplitudes();
        const Vector expected = compressed_with_ancilla(psi);
        CHECK(std::abs(out.dot(expected)) >= 1.0 - kCircuitTol);
    }
}

TEST_CASE("circuit unitary rejects measurement circuits") {
    CHECK_THROWS_AS(circuit_unitary(build_qswt3_feedforward()), unsupported_operation);
}

TEST_CASE("measuring |0> in the computational basis is deterministic") {
    RandomStream rng(3);
    const StateVector s = StateVector::basis_state(1, 0);
    const MeasurementResult r =
        measure_projective(s, 0, MeasurementBasis::computational(), rng);
    CHECK(r.outcome == 0);
    CHECK(r.probability == doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("measuring |0> in the circular basis is a fair coin") {
    const StateVector s = StateVector::basis_state(1, 0);
    for (int outcome = 0; outcome < 2; ++outcome) {
        const MeasurementResult r = project_onto(s, 0, MeasurementBasis::circular(), outcome);
        CHECK(r.probability == doctest::Approx(0.5).epsilon(1e-12));
    }
}

TEST_CASE("third qubit of the staged circuit measures circular with equal probability") {
    // Stage the compression circuit up to (but not including) its measurement.
    Circuit staged = build_qswt3_feedforward();
    staged.steps.pop_back();
    const QubitState psi(std::cos(27.0 * kDeg), std::sin(27.0 * kDeg));
    RandomStream rng(5);
    const StateVector s = run_circuit(make_product_state(psi, 3), staged, rng).state;
    for (int outcome = 0; outcome < 2; ++outcome) {
        const MeasurementResult r = project_onto(s, 2, MeasurementBasis::circular(), outcome);
        CHECK(r.probability == doctest::Approx(0.5).epsilon(1e-12));
    }
}

TEST_CASE("projecting onto a zero-probability branch is an internal error") {
    const StateVector s = StateVector::basis_state(1, 0);
    CHECK_THROWS_AS(project_onto(s, 0, MeasurementBasis::computational(), 1), internal_error);
}

TEST_CASE("measurement rejects a non-orthonormal basis") {
    RandomStream rng(3);
    const StateVector s = StateVector::basis_state(1, 0);
    const MeasurementBasis bad{Eigen::Vector2cd(1.0, 0.0), Eigen::Vector2cd(0.6, 0.8001)};
    CHECK_THROWS_AS(measure_projective(s, 0, bad, rng), std::invalid_argument);
}

TEST_CASE("global phase equality") {
    const StateVector a = StateVector::basis_state(2, 1);
    Vector amps = Vector::Zero(4);
    amps(1) = std::polar(1.0, 0.7);
    const StateVector b(2, amps);
    CHECK(equal_up_to_global_phase(a, b, 1e-10));
    const StateVector c = StateVector::basis_state(2, 2);
    CHECK_FALSE(equal_up_to_global_phase(a, c, 1e-10));
    const StateVector d = StateVector::basis_state(3, 1);
    CHECK_THROWS_AS(equal_up_to_global_phase(a, d, 1e-10), std::invalid_argument);
}

TEST_CASE("norm is preserved across long random gate sequences") {
    RandomStream rng(17);
    StateVector s = make_product_state(haar_random_qubit(rng), 4);
    for (int step = 0; step < 100; ++step) {
        const int t = static_cast<int>(rng() % 4);
        const std::array<int, 1> target{t};
        if (step % 3 == 0) {
            const int c = static_cast<int>(rng() % 4);
            if (c == t) {
                continue;
            }
            const std::array<int, 1> control{c};
            s = apply_unitary(s, random_unitary(2, rng), target, control);
        } else {
            s = apply_unitary(s, random_unitary(2, rng), target);
        }
        CHECK(std::abs(s.norm() - 1.0) <= kAlgebraicTol);
    }
}

TEST_CASE("random circuits compose to a unitary and match step-by-step application") {
    RandomStream rng(23);
    for (int trial = 0; trial < 10; ++trial) {
        const int n = 3 + static_cast<int>(rng() % 4);  // 3..6 qubits
        Circuit c;
        c.num_qubits = n;
        for (int step = 0; step < 12; ++step) {
            const int t = static_cast<int>(rng() % static_cast<unsigned>(n));
            int other = static_cast<int>(rng() % static_cast<unsigned>(n));
            if (other == t) {
                other = (t + 1) % n;
            }
            if (step % 2 == 0) {
                c.steps.push_back(UnitaryStep{random_unitary(4, rng), {t, other}, {}});
            } else {
                c.steps.push_back(UnitaryStep{random_unitary(2, rng), {t}, {other}});
            }
        }
        const Unitary total = circuit_unitary(c);  // construction enforces unitarity
        const Matrix gram = total.matrix().adjoint() * total.matrix();
        CHECK((gram - Matrix::Identity(gram.rows(), gram.cols())).cwiseAbs().maxCoeff() <=
              kAlgebraicTol);

        StateVector stepped = make_product_state(haar_random_qubit(rng), n);
        const Vector direct = total.matrix() * stepped.amplitudes();
        for (const auto& step : c.steps) {
            const auto& us = std::get<UnitaryStep>(step);
            stepped = apply_unitary(stepped, us.u, us.targets, us.controls);
        }
        CHECK((stepped.amplitudes() - direct).cwiseAbs().maxCoeff() <= kAlgebraicTol);
    }
}

TEST_CASE("Born probabilities of the two branches sum to one") {
    RandomStream rng(29);
    for (int i = 0; i < 20; ++i) {
        StateVector s = make_product_state(haar_random_qubit(rng), 3);
        s = apply_unitary(s, random_unitary(4, rng), std::array<int, 2>{0, 2});
        const MeasurementBasis basis = MeasurementBasis::circular();
        const double p0 = project_onto(s, 1, basis, 0).probability;
        const double p1 = project_onto(s, 1, basis, 1).probability;
        CHECK(p0 + p1 == doctest::Approx(1.0).epsilon(1e-12));
    }
}
