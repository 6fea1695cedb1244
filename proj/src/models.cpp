#include "zeno/models.hpp"

#include <cmath>
#include <string>

#include "zeno/error.hpp"

namespace zeno {

using namespace std::complex_literals;

namespace {

void require_finite(double x, const char* name) {
    if (!std::isfinite(x)) throw InvalidInput(std::string(name) + " must be finite");
}

}  // namespace

void ModelSpec::validate() const {
    require_finite(omega, "omega");
    require_finite(phi, "phi");
    require_finite(eta, "eta");
    require_finite(gamma, "gamma");
    require_finite(v, "v");
    require_finite(g, "g");
    require_finite(g_tilde, "g_tilde");
    if (omega < 0.0) throw InvalidInput("omega must be >= 0");
    if (gamma < 0.0) throw InvalidInput("gamma must be >= 0");
    if (dim != 2 && dim != 3 && dim != 8) throw InvalidInput("dim must be 2, 3 or 8");
}

ComplexMatrix sigma_x() { return {{0.0, 1.0}, {1.0, 0.0}}; }
ComplexMatrix sigma_y() { return {{0.0, -1i}, {1i, 0.0}}; }
ComplexMatrix sigma_z() { return {{1.0, 0.0}, {0.0, -1.0}}; }

ComplexMatrix build_two_level(double v) {
    require_finite(v, "v");
    return {{0.0, v}, {v, 0.0}};
}

ComplexMatrix build_three_level(double omega, double phi, double eta) {
    require_finite(omega, "omega");
    require_finite(phi, "phi");
    require_finite(eta, "eta");
    const Complex up = omega * std::polar(1.0, phi);
    const Complex up2 = std::sqrt(2.0) * up;
    return {{0.0, up, 0.0}, {std::conj(up), 0.0, up2}, {0.0, std::conj(up2), eta}};
}

ComplexMatrix build_three_level_ideal(double omega, double eta) {
    require_finite(omega, "omega");
    require_finite(eta, "eta");
    return {{0.0, -1i * omega, 0.0}, {1i * omega, 0.0, 0.0}, {0.0, 0.0, eta}};
}

ComplexMatrix build_tunneling(double omega, double eta, double gamma) {
    require_finite(gamma, "gamma");
    if (gamma < 0.0) throw InvalidInput("tunneling rate gamma must be >= 0");
    // Written out for phi = -pi/2 so the drive entries are purely imaginary.
    const double r2 = std::sqrt(2.0);
    return {{0.0, -1i * omega, 0.0},
            {1i * omega, 0.0, -1i * r2 * omega},
            {0.0, 1i * r2 * omega, Complex(eta, -gamma / 2.0)}};
}

ComplexMatrix embed_single(const ComplexMatrix& op, std::size_t qubit) {
    if (op.dim() != 2) throw DimensionMismatch("embed_single expects a 2x2 operator");
    if (qubit > 2) throw InvalidInput("qubit index must be 0, 1 or 2");
    const auto id = ComplexMatrix::identity(2);
    const ComplexMatrix& a = qubit == 0 ? op : id;
    const ComplexMatrix& b = qubit == 1 ? op : id;
    const ComplexMatrix& c = qubit == 2 ? op : id;
    return kron(kron(a, b), c);
}

ComplexMatrix build_ghz_hamiltonian(const std::array<BlochVector, 3>& omega_vecs, double g, double g_tilde) {
    require_finite(g, "g");
    require_finite(g_tilde, "g_tilde");
    const std::array<ComplexMatrix, 3> paulis{sigma_x(), sigma_y(), sigma_z()};

    ComplexMatrix h(8);
    for (std::size_t q = 0; q < 3; ++q)
        for (std::size_t axis = 0; axis < 3; ++axis) {
            require_finite(omega_vecs[q][axis], "omega vector component");
            if (omega_vecs[q][axis] != 0.0) h += embed_single(paulis[axis], q) * Complex(omega_vecs[q][axis]);
        }

    constexpr std::array<std::array<std::size_t, 2>, 3> pairs{{{0, 1}, {1, 2}, {0, 2}}};
    for (const auto& [i, j] : pairs) {
        auto coupling = (embed_single(paulis[0], i) * embed_single(paulis[0], j) +
                         embed_single(paulis[1], i) * embed_single(paulis[1], j)) *
                        Complex(g);
        coupling += embed_single(paulis[2], i) * embed_single(paulis[2], j) * Complex(g_tilde);
        h += coupling * Complex(0.5);
    }
    return h;
}

ComplexMatrix projector_comp(std::size_t dim) {
    if (dim != 3) throw InvalidInput("projector_comp supports dim = 3 only, got " + std::to_string(dim));
    const Complex d[] = {1.0, 1.0, 0.0};
    return ComplexMatrix::diagonal(d);
}

ComplexMatrix projector_leak(std::size_t dim) {
    return ComplexMatrix::identity(dim) - projector_comp(dim);
}

}  // namespace zeno
