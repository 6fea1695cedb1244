#include <gtest/gtest.h>

#include <cmath>
#include <numbers>

#include "oracles.hpp"
#include "zeno/error.hpp"
#include "zeno/ghz.hpp"
#include "zeno/models.hpp"

using namespace zeno;

namespace {

constexpr double pi = std::numbers::pi;

const std::pair<double, double> kCouplingGrid[] = {{0.02, 0.005}, {0.03, 0.01}, {0.01, -0.01}};

ComplexMatrix swap_qubits(int a, int b) {
    ComplexMatrix p(8);
    for (int s = 0; s < 8; ++s) {
        const int ba = (s >> (2 - a)) & 1, bb = (s >> (2 - b)) & 1;
        int image = s & ~(1 << (2 - a)) & ~(1 << (2 - b));
        image |= ba << (2 - b);
        image |= bb << (2 - a);
        p(image, s) = 1.0;
    }
    return p;
}

}  // namespace

TEST(RotationPulse, ZeroAngleIsIdentity) {
    EXPECT_LT(max_abs_diff(rotation_pulse(RotationAxis::X, 0.0), ComplexMatrix::identity(8)), 1e-15);
    EXPECT_LT(max_abs_diff(rotation_pulse(RotationAxis::Y, 0.0), ComplexMatrix::identity(8)), 1e-15);
}

TEST(RotationPulse, HalfPiYMakesUniformSuperposition) {
    const auto psi = apply(rotation_pulse(RotationAxis::Y, pi / 2), QuantumState::basis(8, 0));
    for (std::size_t k = 0; k < 8; ++k) {
        EXPECT_NEAR(psi[k].real(), 1.0 / std::sqrt(8.0), 1e-15);
        EXPECT_NEAR(psi[k].imag(), 0.0, 1e-15);
    }
    EXPECT_LE(ghz_fidelity(psi).uniformity_deviation, 1e-12);
}

TEST(RotationPulse, FullTurnIsMinusIdentity) {
    EXPECT_LT(max_abs_diff(rotation_pulse(RotationAxis::X, 2 * pi), ComplexMatrix::identity(8) * Complex(-1.0)),
              1e-14);
}

TEST(RotationPulse, UnitaryThreefoldKroneckerPower) {
    for (double theta : {0.3, pi / 2, 2.0}) {
        for (auto axis : {RotationAxis::X, RotationAxis::Y}) {
            const auto u = rotation_pulse(axis, theta);
            EXPECT_LT(max_abs_diff(u * u.adjoint(), ComplexMatrix::identity(8)), 1e-12);
            const auto sigma = axis == RotationAxis::X ? sigma_x() : sigma_y();
            // exp(-i theta/2 sigma) = cos(theta/2) I - i sin(theta/2) sigma
            const auto single = ComplexMatrix::identity(2) * Complex(std::cos(theta / 2)) +
                                sigma * Complex(0.0, -std::sin(theta / 2));
            EXPECT_LT(max_abs_diff(u, kron(single, kron(single, single))), 1e-14);
        }
    }
}

TEST(EntanglingTime, Values) {
    EXPECT_NEAR(entangling_time(0.02, 0.005), pi / 0.03, 1e-12);
    EXPECT_NEAR(entangling_time(0.02, 0.005), 104.71975511965977, 1e-11);
    EXPECT_EQ(entangling_time(0.005, 0.02), entangling_time(0.02, 0.005));
    EXPECT_NEAR(entangling_time(0.04, 0.01), entangling_time(0.02, 0.005) / 2, 1e-12);
    EXPECT_THROW(entangling_time(0.01, 0.01), DivergentTime);
}

TEST(GhzProtocol, FidelityOneOnTestGrid) {
    for (auto [g, gt] : kCouplingGrid) {
        const auto result = run_ghz_protocol(g, gt);
        EXPECT_GE(result.diagnostics.fidelity, 1.0 - 1e-9) << g << " " << gt;
        EXPECT_LE(ghz_fidelity(result.after_rotation).uniformity_deviation, 1e-12);
        for (std::size_t k = 1; k < 7; ++k) EXPECT_LE(std::abs(result.state[k]), 1e-9) << k;
        EXPECT_NEAR(result.state.norm_squared(), 1.0, 1e-12);
    }
}

TEST(GhzProtocol, MatchesBruteForcePropagator) {
    // X U Y |000> with every exponential from the Taylor oracle.
    const double g = 0.02, gt = 0.005;
    const double t = pi / (2 * std::abs(g - gt));
    const auto coupling = build_ghz_hamiltonian({}, g, gt);
    ComplexMatrix u = ComplexMatrix::identity(8);
    const auto slice = oracle::taylor_exp(coupling * Complex(0.0, -t / 100), 40);
    for (int i = 0; i < 100; ++i) u = oracle::naive_product(slice, u);
    const auto collective = [](const ComplexMatrix& s) {
        return embed_single(s, 0) + embed_single(s, 1) + embed_single(s, 2);
    };
    const auto y = oracle::taylor_exp(collective(sigma_y()) * Complex(0.0, -pi / 4), 60);
    const auto x = oracle::taylor_exp(collective(sigma_x()) * Complex(0.0, -pi / 4), 60);
    const auto expected = oracle::naive_apply(x, oracle::naive_apply(u, oracle::naive_apply(y, QuantumState::basis(8, 0))));
    EXPECT_LT(max_abs_diff(run_ghz_protocol(g, gt).state, expected), 1e-11);
}

TEST(GhzProtocol, PulseSequenceAgrees) {
    for (auto [g, gt] : kCouplingGrid) {
        const auto seq = ghz_pulse_sequence(g, gt);
        ASSERT_EQ(seq.steps.size(), 3u);
        const auto psi = apply(seq.propagator(), QuantumState::basis(8, 0));
        const auto result = run_ghz_protocol(g, gt);
        EXPECT_LT(max_abs_diff(psi, result.state), 1e-10);
        EXPECT_NEAR(seq.duration(), result.duration, 1e-12);
        EXPECT_NEAR(result.duration, result.entangling_time + 2 * kNominalRotationTime, 1e-12);
        EXPECT_GT(result.entangling_time / result.duration, 0.999);
    }
}

TEST(GhzProtocol, FinalStateIsPermutationSymmetric) {
    for (auto [g, gt] : kCouplingGrid) {
        const auto psi = run_ghz_protocol(g, gt).state;
        for (auto [a, b] : {std::pair{0, 1}, {1, 2}, {0, 2}})
            EXPECT_LT(max_abs_diff(apply(swap_qubits(a, b), psi), psi), 1e-10);
    }
}

TEST(GhzProtocol, DivergentTime) {
    EXPECT_THROW(run_ghz_protocol(0.02, 0.02), DivergentTime);
}

TEST(PulseSequence, Validation) {
    PulseSequence seq;
    seq.steps.push_back({ComplexMatrix::identity(8), 0.0});
    EXPECT_THROW(seq.validate(), InvalidInput);
    seq.steps[0] = {ComplexMatrix::identity(4), 1.0};
    EXPECT_THROW(seq.validate(), DimensionMismatch);
    auto gen = ComplexMatrix(8);
    gen(0, 1) = 1.0;
    seq.steps[0] = {gen, 1.0};
    EXPECT_THROW(seq.validate(), InvalidInput);
}

TEST(GhzFidelity, Examples) {
    QuantumState ghz(8);
    ghz[0] = ghz[7] = 1.0 / std::sqrt(2.0);
    EXPECT_NEAR(ghz_fidelity(ghz).fidelity, 1.0, 1e-15);

    EXPECT_NEAR(ghz_fidelity(QuantumState::basis(8, 0)).fidelity, 0.5, 1e-15);

    QuantumState uniform(8);
    for (std::size_t k = 0; k < 8; ++k) uniform[k] = 1.0 / std::sqrt(8.0);
    const auto d = ghz_fidelity(uniform);
    EXPECT_NEAR(d.fidelity, 0.25, 1e-15);
    EXPECT_NEAR(d.uniformity_deviation, 0.0, 1e-15);

    // Relative phase between |000> and |111> does not matter.
    QuantumState phased(8);
    phased[0] = 1.0 / std::sqrt(2.0);
    phased[7] = std::polar(1.0 / std::sqrt(2.0), 1.2);
    EXPECT_NEAR(ghz_fidelity(phased).fidelity, 1.0, 1e-15);

    EXPECT_NEAR(ghz_fidelity(QuantumState::basis(8, 3)).uniformity_deviation, 7.0 / 8.0, 1e-15);
    EXPECT_NEAR(ghz_fidelity(QuantumState::basis(8, 3)).global_phase, 0.0, 1e-15);
}

TEST(GhzFidelity, Errors) {
    EXPECT_THROW(ghz_fidelity(QuantumState::basis(4, 0)), DimensionMismatch);
    EXPECT_THROW(ghz_fidelity(QuantumState(8)), InvalidInput);
}
