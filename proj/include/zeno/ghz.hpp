#pragma once

// Single-step GHZ preparation on three identical, fully coupled two-level
// qubits: Y(pi/2) on all qubits, free evolution under the XY + ZZ coupling for
// t_GHZ = pi / (2 |g - g_tilde|), then X(pi/2) on all qubits.

#include <vector>

#include "zeno/linalg.hpp"

namespace zeno {

enum class RotationAxis { X, Y };

struct PulseStep {
    ComplexMatrix generator;  ///< Hermitian, 8x8
    double duration;          ///< ns
};

struct PulseSequence {
    std::vector<PulseStep> steps;

    void validate() const;
    double duration() const;
    /// prod_k exp(-i G_k tau_k), first step applied first.
    ComplexMatrix propagator() const;
};

struct GhzDiagnostics {
    double fidelity = 0.0;              ///< max over phi of |<(|000> + e^{i phi}|111>)/sqrt2 | psi>|^2
    double uniformity_deviation = 0.0;  ///< max_k | |a_k|^2 - 1/8 |
    double global_phase = 0.0;          ///< arg of the largest-magnitude amplitude
};

struct GhzResult {
    QuantumState state;
    GhzDiagnostics diagnostics;
    QuantumState after_rotation;  ///< state after the initial Y(pi/2)
    double entangling_time = 0.0;
    double duration = 0.0;        ///< entangling time plus nominal rotation durations
};

/// Nominal duration assigned to each (ideal, couplings-off) rotation in a
/// pulse sequence. The rotations are exact unitaries, so only timing metadata
/// depends on it.
inline constexpr double kNominalRotationTime = 1e-3;

/// (exp(-i theta/2 sigma_axis))^{(x)3}
ComplexMatrix rotation_pulse(RotationAxis axis, double theta);

/// pi / (2 |g - g_tilde|); throws DivergentTime when g == g_tilde.
double entangling_time(double g, double g_tilde);

PulseSequence ghz_pulse_sequence(double g, double g_tilde, double rotation_time = kNominalRotationTime);

GhzResult run_ghz_protocol(double g, double g_tilde);

GhzDiagnostics ghz_fidelity(const QuantumState& psi);

}  // namespace zeno
