#pragma once

#include <array>
#include <utility>

#include "schurpress/qstate.hpp"

namespace schurpress {

/// The pair of single-qubit unitaries that map the residual third-qubit
/// states sqrt(2/3)|0>+sqrt(1/3)|1> and sqrt(1/3)|0>+sqrt(2/3)|1> to |0>,
/// with second*first = X. Real orthogonal representatives.
std::pair<Unitary, Unitary> disentangling_unitaries();

/// Three-qubit compression circuit, fully unitary variant: two-qubit stage
/// on qubits 0-1, third-qubit-controlled stage, then the two controlled
/// disentangling gates. Maps psi^(x)3 to the compressed pair (x) |0>.
Circuit build_qswt3_full();

/// Variant with the disentangling gates replaced by a circular-basis
/// measurement of qubit 2 plus an outcome-dependent diagonal phase
/// correction on qubits 0-1. Corrections are input-independent.
Circuit build_qswt3_feedforward();

/// Compressed two-qubit state of three identical copies:
/// (a^3, sqrt(3) a^2 b, sqrt(3) a b^2, b^3) over |00>,|01>,|10>,|11>.
StateVector compress3(const QubitState& psi);

/// Outcome-indexed diagonal phase corrections for the feed-forward circuit,
/// derived numerically from two probe inputs and cross-checked on random
/// inputs. Throws internal_error if the probes disagree.
std::array<Unitary, 2> derive_corrections();

struct FeedForwardResult {
    int outcome;              // which circular-basis state qubit 2 collapsed to
    StateVector compressed;   // two-qubit state after correction
    Unitary correction_applied;
    double probability;       // Born probability of this branch (1/2 for pure inputs)
};

/// Runs the feed-forward circuit on psi^(x)3 with a sampled measurement.
FeedForwardResult run_feedforward(const QubitState& psi, RandomStream& rng);

/// Same, but forces the measurement branch (for testing both outcomes).
FeedForwardResult run_feedforward_branch(const QubitState& psi, int outcome);

/// Symmetric-subspace code of N copies: N+1 amplitudes indexed by the
/// number of |1> excitations, storable in ceil(log2(N+1)) qubits.
struct SymmetricCode {
    int n_copies;
    Vector coefficients;  // size n_copies+1, unit norm

    int packed_qubits() const;
    /// Code embedded in the packed register, unused basis states zero-padded.
    StateVector packed_state() const;
};

/// Code of psi^(x)n: coefficient k = sqrt(C(n,k)) alpha^(n-k) beta^k.
SymmetricCode symmetric_encode(const QubitState& psi, int n);

/// Code of an arbitrary permutation-invariant pure state. Invariance is
/// checked against all adjacent transpositions (they generate the full
/// symmetric group); rejects with the maximum asymmetry found.
SymmetricCode symmetric_encode_general(const StateVector& symmetric_state);

/// Inverse of the codec: the n-qubit state with weight-k amplitudes
/// coefficient_k / sqrt(C(n,k)). Dense output, so n is capped at 20.
StateVector symmetric_decode(const SymmetricCode& code);

/// Binomial coefficient as a double (exact for the n <= 20 range used here).
double binomial(int n, int k);

}  // namespace schurpress
