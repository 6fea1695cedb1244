#pragma once

// Hamiltonians and projectors for the driven three-level qubit, the two-level
// Zeno toy model and the fully connected three-qubit register.
//
// Units: rates and frequencies in rad/ns, times in ns, hbar = 1. Basis state
// |k> (1-based in physics notation) is index k-1. For the register, qubit 1 is
// the most significant tensor factor and sigma_z|0> = +|0>.

#include <array>
#include <numbers>

#include "zeno/linalg.hpp"

namespace zeno {

struct ModelSpec {
    double omega = 0.0;                         ///< Rabi frequency
    double phi = -std::numbers::pi / 2;         ///< drive phase; -pi/2 drives about Y
    double eta = -0.2;                          ///< anharmonicity E3 - 2 E2
    double gamma = 0.0;                         ///< tunneling rate out of |3>, 1/ns
    double v = 0.0;                             ///< two-level coupling
    double g = 0.0;                             ///< transverse (XX + YY) coupling
    double g_tilde = 0.0;                       ///< longitudinal (ZZ) coupling
    std::size_t dim = 3;

    /// Throws InvalidInput on omega < 0, gamma < 0, non-finite fields or an
    /// unsupported dimension.
    void validate() const;
};

using BlochVector = std::array<double, 3>;

ComplexMatrix sigma_x();
ComplexMatrix sigma_y();
ComplexMatrix sigma_z();

/// [[0, V], [V, 0]]
ComplexMatrix build_two_level(double v);

ComplexMatrix build_three_level(double omega, double phi, double eta);

/// Drive about Y with the |2> <-> |3> element removed.
ComplexMatrix build_three_level_ideal(double omega, double eta);

/// Y-driven three-level Hamiltonian with eta -> eta - i gamma / 2.
ComplexMatrix build_tunneling(double omega, double eta, double gamma);

/// sum_i Omega_i . sigma_i + 1/2 sum_{i<j} [g (XX + YY) + g_tilde ZZ] on three qubits.
ComplexMatrix build_ghz_hamiltonian(const std::array<BlochVector, 3>& omega_vecs, double g, double g_tilde);

/// `op` acting on `qubit` (0, 1 or 2) of the three-qubit register.
ComplexMatrix embed_single(const ComplexMatrix& op, std::size_t qubit);

/// diag(1, 1, 0): projector onto the computational subspace of a three-level qubit.
ComplexMatrix projector_comp(std::size_t dim);

/// |3><3|
ComplexMatrix projector_leak(std::size_t dim);

}  // namespace zeno
