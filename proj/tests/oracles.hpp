#pragma once

// Independent reference computations used only by tests. Nothing here calls
// mat_exp, apply or the engine; each routine is the slow, obvious version.

#include <cmath>
#include <complex>
#include <functional>
#include <random>
#include <vector>

#include "zeno/linalg.hpp"

namespace oracle {

using zeno::Complex;
using zeno::ComplexMatrix;
using zeno::QuantumState;

inline ComplexMatrix random_unit_disk_matrix(std::size_t dim, std::mt19937_64& rng) {
    std::uniform_real_distribution<double> radius(0.0, 1.0), angle(0.0, 2.0 * M_PI);
    ComplexMatrix m(dim);
    for (std::size_t i = 0; i < dim; ++i)
        for (std::size_t j = 0; j < dim; ++j) m(i, j) = std::polar(std::sqrt(radius(rng)), angle(rng));
    return m;
}

inline ComplexMatrix random_hermitian(std::size_t dim, std::mt19937_64& rng) {
    return random_unit_disk_matrix(dim, rng).hermitian_part();
}

inline QuantumState random_state(std::size_t dim, std::mt19937_64& rng) {
    std::normal_distribution<double> gauss;
    std::vector<Complex> amps(dim);
    double norm2 = 0.0;
    for (auto& a : amps) {
        a = {gauss(rng), gauss(rng)};
        norm2 += std::norm(a);
    }
    for (auto& a : amps) a /= std::sqrt(norm2);
    return QuantumState(std::move(amps));
}

inline ComplexMatrix naive_product(const ComplexMatrix& a, const ComplexMatrix& b) {
    const std::size_t n = a.dim();
    ComplexMatrix out(n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            Complex sum{};
            for (std::size_t k = 0; k < n; ++k) sum += a(i, k) * b(k, j);
            out(i, j) = sum;
        }
    return out;
}

inline QuantumState naive_apply(const ComplexMatrix& u, const QuantumState& psi) {
    std::vector<Complex> out(psi.dim());
    for (std::size_t i = 0; i < psi.dim(); ++i)
        for (std::size_t j = 0; j < psi.dim(); ++j) out[i] += u(i, j) * psi[j];
    return QuantumState(std::move(out));
}

/// Direct truncated series sum_{k<terms} A^k / k!.
inline ComplexMatrix taylor_exp(const ComplexMatrix& a, int terms) {
    ComplexMatrix sum = ComplexMatrix::identity(a.dim());
    ComplexMatrix term = ComplexMatrix::identity(a.dim());
    for (int k = 1; k < terms; ++k) {
        term = naive_product(term, a);
        for (std::size_t i = 0; i < a.dim(); ++i)
            for (std::size_t j = 0; j < a.dim(); ++j) term(i, j) /= static_cast<double>(k);
        for (std::size_t i = 0; i < a.dim(); ++i)
            for (std::size_t j = 0; j < a.dim(); ++j) sum(i, j) += term(i, j);
    }
    return sum;
}

/// Classical RK4 on i d(psi)/dt = H psi with a fixed step; returns psi(t_total).
/// `observer(t, psi)` is called at every step including t = 0.
inline QuantumState rk4_schrodinger(const ComplexMatrix& h, QuantumState psi, double t_total, long steps,
                                    const std::function<void(double, const QuantumState&)>& observer = {}) {
    const double dt = t_total / static_cast<double>(steps);
    const std::size_t n = psi.dim();
    auto rhs = [&](const std::vector<Complex>& y) {
        std::vector<Complex> out(n);
        for (std::size_t i = 0; i < n; ++i) {
            Complex sum{};
            for (std::size_t j = 0; j < n; ++j) sum += h(i, j) * y[j];
            out[i] = Complex(0.0, -1.0) * sum;
        }
        return out;
    };
    std::vector<Complex> y(psi.amplitudes().begin(), psi.amplitudes().end());
    if (observer) observer(0.0, psi);
    for (long s = 0; s < steps; ++s) {
        auto k1 = rhs(y);
        std::vector<Complex> tmp(n);
        for (std::size_t i = 0; i < n; ++i) tmp[i] = y[i] + 0.5 * dt * k1[i];
        auto k2 = rhs(tmp);
        for (std::size_t i = 0; i < n; ++i) tmp[i] = y[i] + 0.5 * dt * k2[i];
        auto k3 = rhs(tmp);
        for (std::size_t i = 0; i < n; ++i) tmp[i] = y[i] + dt * k3[i];
        auto k4 = rhs(tmp);
        for (std::size_t i = 0; i < n; ++i) y[i] += dt / 6.0 * (k1[i] + 2.0 * k2[i] + 2.0 * k3[i] + k4[i]);
        if (observer) observer(dt * static_cast<double>(s + 1), QuantumState(y));
    }
    return QuantumState(std::move(y));
}

/// Least-squares slope of log(y) against log(x).
inline double loglog_slope(const std::vector<double>& x, const std::vector<double>& y) {
    const std::size_t n = x.size();
    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    for (std::size_t i = 0; i < n; ++i) {
        const double lx = std::log(x[i]), ly = std::log(y[i]);
        sx += lx;
        sy += ly;
        sxx += lx * lx;
        sxy += lx * ly;
    }
    return (n * sxy - sx * sy) / (n * sxx - sx * sx);
}

inline std::vector<double> geomspace(double lo, double hi, int count) {
    std::vector<double> out(count);
    for (int i = 0; i < count; ++i) out[i] = lo * std::pow(hi / lo, static_cast<double>(i) / (count - 1));
    return out;
}

}  // namespace oracle
