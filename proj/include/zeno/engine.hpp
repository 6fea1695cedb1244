#pragma once

// Evolution regimes for a monitored qubit:
//   * projective Zeno runs (evolve for dt, measure the leak subspace, keep the
//     negative-outcome branch, repeat n times),
//   * exact unitary evolution with a single final measurement,
//   * continuous monitoring through a non-Hermitian tunneling term,
// plus the closed-form two-level Zeno law and the second-order short-time
// amplitudes used to cross-check the simulated paths.

#include <array>
#include <optional>
#include <span>
#include <vector>

#include "zeno/linalg.hpp"

namespace zeno {

struct ZenoSchedule {
    int n = 1;         ///< measurement intervals
    double dt = 0.0;   ///< interval length, ns

    double total_time() const { return n * dt; }
    void validate() const;

    static ZenoSchedule over(double t_total, int n) { return {n, t_total / n}; }
};

struct TraceSample {
    double time = 0.0;
    std::vector<double> populations;  ///< |a_i|^2
    double survival = 1.0;
};

struct SimulationTrace {
    std::vector<TraceSample> samples;
    std::vector<QuantumState> amplitudes;  ///< empty unless requested, else one per sample

    std::size_t size() const { return samples.size(); }
    bool empty() const { return samples.empty(); }
    const TraceSample& back() const { return samples.back(); }
};

/// Survival probabilities of the computational subspace under the three
/// regimes. Unset fields were not computed for this record.
struct SurvivalRecord {
    std::optional<double> w_zeno;     ///< product of per-measurement survival
    std::optional<double> w_no_zeno;  ///< 1 - p3(T) after exact evolution
    std::optional<double> w_tunnel;   ///< |a1(T)|^2 + |a2(T)|^2 under tunneling
    int n = 0;
};

struct TraceOptions {
    bool keep_amplitudes = false;
};

struct ZenoRun {
    SimulationTrace trace;                 ///< t = 0, then the post-measurement state of every interval
    SurvivalRecord survival;
    std::vector<double> leak_probabilities;  ///< pre-measurement leak probability of each interval
};

struct TunnelingRun {
    SimulationTrace trace;
    SurvivalRecord survival;
    double peak_leak = 0.0;  ///< max over samples of the population outside the kept subspace
};

/// (1 - V^2 T^2 / n^2)^n. Only meaningful while |V T / n| << 1; that is left to the caller.
double two_level_survival_closed_form(double v, double t_total, long long n);

/// The n -> infinity limit of the closed form, which is 1 for every finite V and T.
double two_level_zeno_limit(double v, double t_total);

/// Projector onto the monitored ("kept") subspace used when none is given:
/// diag(1, 1, 0) for a three-level qubit, diag(1, 0) for the two-level toy.
ComplexMatrix default_kept_projector(std::size_t dim);

/// Exact evolution under a Hermitian `h`, sampled at t_k = k T / samples for
/// k = 0..samples. The survival column is the single-shot probability
/// ||P psi(t)||^2 of finding the state inside the kept subspace; it is not a
/// running product and need not be monotone.
SimulationTrace run_unitary(const ComplexMatrix& h, const QuantumState& psi0, double t_total, int samples,
                            TraceOptions options = {});
SimulationTrace run_unitary(const ComplexMatrix& h, const QuantumState& psi0, double t_total, int samples,
                            const ComplexMatrix& kept, TraceOptions options = {});

/// Repeated projective measurement. Each interval evolves by exp(-i h dt),
/// records the leak probability, then projects onto `kept` and renormalizes.
/// Throws DegenerateProjection when the projected norm drops below 1e-14.
ZenoRun run_zeno(const ComplexMatrix& h, const QuantumState& psi0, const ZenoSchedule& schedule,
                 TraceOptions options = {});
ZenoRun run_zeno(const ComplexMatrix& h, const QuantumState& psi0, const ZenoSchedule& schedule,
                 const ComplexMatrix& kept, TraceOptions options = {});

/// Sub-step count for run_tunneling when the caller passes 0: enough steps that
/// gamma * delta <= 0.01, and never fewer than 1000.
long default_tunneling_steps(double gamma, double t_total);

/// Non-Hermitian evolution chained over `steps` equal sub-steps (0 picks
/// default_tunneling_steps). No renormalization: the norm decays and the
/// survival column is ||P psi(t)||^2. Throws PhysicsError if the anti-Hermitian
/// part of `h_nh` has a positive eigenvalue.
TunnelingRun run_tunneling(const ComplexMatrix& h_nh, const QuantumState& psi0, double t_total, long steps = 0,
                           TraceOptions options = {});

/// Second-order short-time amplitudes of the Y-driven three-level qubit starting
/// from (a1, a2, 0), with the lossy level shifted by -i gamma / 2.
std::array<Complex, 3> perturbative_step(Complex a1, Complex a2, double omega, double eta, double gamma, double dt);

/// prod_k (1 - p_k). Samples must lie in [0, 1] up to 1e-12.
double survival_product(std::span<const double> leak_samples);

}  // namespace zeno
