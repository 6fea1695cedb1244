#include "zeno/engine.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "zeno/error.hpp"
#include "zeno/models.hpp"

namespace zeno {

namespace {

constexpr double kNormTol = 1e-10;
constexpr double kDegenerateNorm = 1e-14;

void validate_projector(const ComplexMatrix& p, std::size_t dim) {
    if (p.dim() != dim) throw DimensionMismatch("kept-subspace projector has the wrong dimension");
    if (!p.is_hermitian(1e-12) || max_abs_diff(p * p, p) > 1e-12)
        throw InvalidInput("kept-subspace operator is not an orthogonal projector");
}

void require_hermitian(const ComplexMatrix& h, const char* who) {
    if (!h.all_finite()) throw InvalidInput(std::string(who) + ": Hamiltonian has non-finite entries");
    if (!h.is_hermitian(1e-12 * std::max(1.0, h.max_abs())))
        throw InvalidInput(std::string(who) + ": Hamiltonian must be Hermitian");
}

void require_normalized(const QuantumState& psi, const char* who) {
    if (std::abs(psi.norm_squared() - 1.0) > kNormTol)
        throw InvalidInput(std::string(who) + ": initial state must be normalized");
}

void require_finite_positive(double x, const char* what) {
    if (!std::isfinite(x) || x <= 0.0) throw InvalidInput(std::string(what) + " must be finite and > 0");
}

TraceSample sample_of(double t, const QuantumState& psi, double survival) {
    return {t, psi.populations(), survival};
}

void record(SimulationTrace& trace, double t, const QuantumState& psi, double survival,
            const TraceOptions& options) {
    trace.samples.push_back(sample_of(t, psi, survival));
    if (options.keep_amplitudes) trace.amplitudes.push_back(psi);
}

}  // namespace

void ZenoSchedule::validate() const {
    if (n < 1) throw InvalidInput("schedule needs n >= 1 measurement intervals");
    require_finite_positive(dt, "schedule interval dt");
}

double two_level_survival_closed_form(double v, double t_total, long long n) {
    if (n < 1) throw InvalidInput("closed-form survival needs n >= 1");
    if (!std::isfinite(v) || !std::isfinite(t_total)) throw InvalidInput("closed-form survival: non-finite input");
    const double nn = static_cast<double>(n);
    const double x = (v * t_total) * (v * t_total) / (nn * nn);
    if (x < 1.0) return std::exp(nn * std::log1p(-x));
    return std::pow(1.0 - x, nn);
}

double two_level_zeno_limit(double v, double t_total) {
    if (!std::isfinite(v) || !std::isfinite(t_total)) throw InvalidInput("Zeno limit: non-finite input");
    return 1.0;
}

ComplexMatrix default_kept_projector(std::size_t dim) {
    if (dim == 3) return projector_comp(3);
    if (dim == 2) {
        const Complex d[] = {1.0, 0.0};
        return ComplexMatrix::diagonal(d);
    }
    throw InvalidInput("no default monitored subspace for dim " + std::to_string(dim));
}

SimulationTrace run_unitary(const ComplexMatrix& h, const QuantumState& psi0, double t_total, int samples,
                            TraceOptions options) {
    return run_unitary(h, psi0, t_total, samples, default_kept_projector(h.dim()), options);
}

SimulationTrace run_unitary(const ComplexMatrix& h, const QuantumState& psi0, double t_total, int samples,
                            const ComplexMatrix& kept, TraceOptions options) {
    require_hermitian(h, "run_unitary");
    if (psi0.dim() != h.dim()) throw DimensionMismatch("run_unitary: state and Hamiltonian dimensions differ");
    validate_projector(kept, h.dim());
    require_normalized(psi0, "run_unitary");
    require_finite_positive(t_total, "total time");
    if (samples < 1) throw InvalidInput("run_unitary needs samples >= 1");

    const HermitianEigen spectrum(h);
    SimulationTrace trace;
    trace.samples.reserve(samples + 1);
    for (int k = 0; k <= samples; ++k) {
        const double t = t_total * k / samples;
        const auto psi = k == 0 ? psi0 : apply(spectrum.exp(Complex(0.0, -t)), psi0);
        record(trace, t, psi, apply(kept, psi).norm_squared(), options);
    }
    return trace;
}

ZenoRun run_zeno(const ComplexMatrix& h, const QuantumState& psi0, const ZenoSchedule& schedule,
                 TraceOptions options) {
    return run_zeno(h, psi0, schedule, default_kept_projector(h.dim()), options);
}

ZenoRun run_zeno(const ComplexMatrix& h, const QuantumState& psi0, const ZenoSchedule& schedule,
                 const ComplexMatrix& kept, TraceOptions options) {
    require_hermitian(h, "run_zeno");
    if (psi0.dim() != h.dim()) throw DimensionMismatch("run_zeno: state and Hamiltonian dimensions differ");
    validate_projector(kept, h.dim());
    schedule.validate();
    require_normalized(psi0, "run_zeno");

    const auto leak = ComplexMatrix::identity(h.dim()) - kept;
    if (apply(leak, psi0).norm_squared() > 1e-12)
        throw InvalidInput("run_zeno: initial state must lie in the monitored subspace");

    const auto step = mat_exp(h, Complex(0.0, -schedule.dt));

    ZenoRun run;
    run.leak_probabilities.reserve(schedule.n);
    run.trace.samples.reserve(schedule.n + 1);
    record(run.trace, 0.0, psi0, 1.0, options);

    QuantumState psi = psi0;
    double survival = 1.0;
    for (int k = 1; k <= schedule.n; ++k) {
        psi = apply(step, psi);
        const double p_leak = std::clamp(apply(leak, psi).norm_squared(), 0.0, 1.0);
        run.leak_probabilities.push_back(p_leak);

        const auto projected = apply(kept, psi);
        const double norm = projected.norm();
        if (norm < kDegenerateNorm)
            throw DegenerateProjection("measurement " + std::to_string(k) +
                                       " finds the state outside the monitored subspace with certainty");
        psi = projected.normalized();
        survival *= 1.0 - p_leak;
        record(run.trace, k * schedule.dt, psi, survival, options);
    }

    run.survival.w_zeno = survival_product(run.leak_probabilities);
    run.survival.n = schedule.n;
    return run;
}

long default_tunneling_steps(double gamma, double t_total) {
    require_finite_positive(t_total, "total time");
    if (!std::isfinite(gamma) || gamma < 0.0) throw InvalidInput("tunneling rate must be finite and >= 0");
    const double needed = std::ceil(gamma * t_total / 0.01);
    return std::max(1000L, static_cast<long>(needed));
}

TunnelingRun run_tunneling(const ComplexMatrix& h_nh, const QuantumState& psi0, double t_total, long steps,
                           TraceOptions options) {
    if (!h_nh.all_finite()) throw InvalidInput("run_tunneling: Hamiltonian has non-finite entries");
    if (h_nh.dim() != 3) throw InvalidInput("run_tunneling expects a three-level Hamiltonian");
    if (psi0.dim() != 3) throw DimensionMismatch("run_tunneling: state must be three-dimensional");
    require_finite_positive(t_total, "total time");
    if (psi0.norm_squared() > 1.0 + kNormTol) throw InvalidInput("run_tunneling: initial norm exceeds 1");
    if (steps < 0) throw InvalidInput("run_tunneling: steps must be >= 0");

    // H = H_h + i K; the norm is non-increasing iff K <= 0.
    const HermitianEigen loss(h_nh.antihermitian_part());
    const double max_gain = *std::max_element(loss.values.begin(), loss.values.end());
    const double min_rate = *std::min_element(loss.values.begin(), loss.values.end());
    if (max_gain > 1e-12 * std::max(1.0, h_nh.max_abs()))
        throw PhysicsError("run_tunneling: anti-Hermitian part has a positive eigenvalue (gain)");

    if (steps == 0) steps = default_tunneling_steps(-2.0 * min_rate, t_total);
    const double delta = t_total / static_cast<double>(steps);
    const auto step = mat_exp(h_nh, Complex(0.0, -delta));
    const auto kept = projector_comp(3);

    TunnelingRun run;
    run.trace.samples.reserve(steps + 1);
    QuantumState psi = psi0;
    auto observe = [&](double t) {
        const double inside = apply(kept, psi).norm_squared();
        run.peak_leak = std::max(run.peak_leak, std::norm(psi[2]));
        record(run.trace, t, psi, inside, options);
    };
    observe(0.0);
    for (long s = 1; s <= steps; ++s) {
        psi = apply(step, psi);
        observe(t_total * static_cast<double>(s) / static_cast<double>(steps));
    }
    run.survival.w_tunnel = run.trace.back().survival;
    return run;
}

std::array<Complex, 3> perturbative_step(Complex a1, Complex a2, double omega, double eta, double gamma, double dt) {
    using namespace std::complex_literals;
    const double x = omega * dt;
    const double half_r2 = std::sqrt(2.0) / 2.0;
    const Complex b1 = a1 * (1.0 - 0.5 * x * x) - a2 * x;
    const Complex b2 = a2 * (1.0 - 1.5 * x * x) + a1 * x;
    const Complex b3 =
        std::sqrt(2.0) * a2 * x + half_r2 * (a1 * omega * omega - a2 * omega * (gamma / 2.0 + 1i * eta)) * dt * dt;
    return {b1, b2, b3};
}

double survival_product(std::span<const double> leak_samples) {
    double w = 1.0;
    for (double p : leak_samples) {
        if (!(p >= -1e-12 && p <= 1.0 + 1e-12))
            throw InvalidInput("leak probability " + std::to_string(p) + " outside [0, 1]");
        w *= 1.0 - std::clamp(p, 0.0, 1.0);
    }
    return w;
}

}  // namespace zeno
