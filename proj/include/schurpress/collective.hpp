#pragma once

#include <array>

#include "schurpress/qstate.hpp"

namespace schurpress {

/// Measurement direction on the Bloch sphere. `polar` is measured from the
/// +Z axis, `azimuth` from +X in the XY plane.
struct SpinAxis {
    double polar = 0.0;
    double azimuth = 0.0;

    static SpinAxis x() { return {1.5707963267948966, 0.0}; }
    static SpinAxis y() { return {1.5707963267948966, 1.5707963267948966}; }
    static SpinAxis z() { return {0.0, 0.0}; }

    /// Unit vector (nx, ny, nz).
    std::array<double, 3> direction() const;
};

/// One collective measurement on the compressed pair, read as a spin-3/2
/// projection m with single-copy estimate m/3.
struct CollectiveOutcome {
    double m;
    double estimate;
    double probability;
};

/// m value of each two-qubit basis state, in index order |00>..|11>:
/// (+3/2, +1/2, -1/2, -3/2).
std::array<double, 4> spin32_basis_map();

/// n . (Jx, Jy, Jz) for spin 3/2 in the m-ordered basis. Hermitian with
/// spectrum {+-3/2, +-1/2} for every axis.
Eigen::Matrix4cd collective_operator(const SpinAxis& axis);

/// Unitary whose rows are the collective_operator eigenvectors ordered
/// m = +3/2, +1/2, -1/2, -3/2, phase-fixed so the first non-negligible
/// entry of each row is real positive. Applying it and then reading Z on
/// both qubits realizes the collective measurement.
Unitary basis_change(const SpinAxis& axis);

/// Born probabilities of m = +3/2, +1/2, -1/2, -3/2.
std::array<double, 4> outcome_distribution(const StateVector& two_qubits, const SpinAxis& axis);

CollectiveOutcome sample_outcome(const StateVector& two_qubits, const SpinAxis& axis,
                                 RandomStream& rng);

/// X-axis distribution with dark-port leakage: the final interferometric
/// X-analysis stage reports the swapped port with probability p, flipping
/// the first readout bit. p = 0 reproduces the ideal X distribution exactly.
std::array<double, 4> leaky_x_distribution(const StateVector& two_qubits, double leak_p);

/// Mean and variance of the m/3 estimate under a 4-outcome distribution.
struct EstimateMoments {
    double mean;
    double variance;
};
EstimateMoments estimate_moments(const std::array<double, 4>& distribution);

}  // namespace schurpress
