#include "zeno/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "zeno/error.hpp"

namespace zeno {

namespace {

void check_dim(std::size_t dim) {
    if (dim == 0 || dim > ComplexMatrix::max_dim)
        throw InvalidInput("matrix dimension must be in [1, " + std::to_string(ComplexMatrix::max_dim) +
                           "], got " + std::to_string(dim));
}

void require_same_dim(std::size_t a, std::size_t b, const char* what) {
    if (a != b)
        throw DimensionMismatch(std::string(what) + ": dimension mismatch (" + std::to_string(a) + " vs " +
                                std::to_string(b) + ")");
}

bool finite(Complex z) { return std::isfinite(z.real()) && std::isfinite(z.imag()); }

}  // namespace

ComplexMatrix::ComplexMatrix(std::size_t dim) : dim_(dim) {
    check_dim(dim);
    data_.assign(dim * dim, Complex{});
}

ComplexMatrix::ComplexMatrix(std::initializer_list<std::initializer_list<Complex>> rows) : dim_(rows.size()) {
    check_dim(dim_);
    data_.reserve(dim_ * dim_);
    for (const auto& row : rows) {
        if (row.size() != dim_) throw InvalidInput("matrix literal must be square");
        data_.insert(data_.end(), row.begin(), row.end());
    }
}

ComplexMatrix ComplexMatrix::identity(std::size_t dim) {
    ComplexMatrix m(dim);
    for (std::size_t i = 0; i < dim; ++i) m(i, i) = 1.0;
    return m;
}

ComplexMatrix ComplexMatrix::diagonal(std::span<const Complex> entries) {
    ComplexMatrix m(entries.size());
    for (std::size_t i = 0; i < entries.size(); ++i) m(i, i) = entries[i];
    return m;
}

ComplexMatrix ComplexMatrix::adjoint() const {
    ComplexMatrix out(dim_);
    for (std::size_t i = 0; i < dim_; ++i)
        for (std::size_t j = 0; j < dim_; ++j) out(j, i) = std::conj((*this)(i, j));
    return out;
}

bool ComplexMatrix::is_hermitian(double tol) const {
    for (std::size_t i = 0; i < dim_; ++i)
        for (std::size_t j = i; j < dim_; ++j)
            if (std::abs((*this)(i, j) - std::conj((*this)(j, i))) > tol) return false;
    return true;
}

bool ComplexMatrix::all_finite() const {
    return std::all_of(data_.begin(), data_.end(), finite);
}

double ComplexMatrix::max_abs() const {
    double m = 0.0;
    for (const auto& z : data_) m = std::max(m, std::abs(z));
    return m;
}

double ComplexMatrix::norm1() const {
    double best = 0.0;
    for (std::size_t j = 0; j < dim_; ++j) {
        double col = 0.0;
        for (std::size_t i = 0; i < dim_; ++i) col += std::abs((*this)(i, j));
        best = std::max(best, col);
    }
    return best;
}

ComplexMatrix ComplexMatrix::hermitian_part() const {
    auto out = *this + adjoint();
    out *= 0.5;
    return out;
}

ComplexMatrix ComplexMatrix::antihermitian_part() const {
    auto out = *this - adjoint();
    out *= Complex(0.0, -0.5);
    return out;
}

ComplexMatrix& ComplexMatrix::operator+=(const ComplexMatrix& other) {
    require_same_dim(dim_, other.dim_, "matrix sum");
    for (std::size_t k = 0; k < data_.size(); ++k) data_[k] += other.data_[k];
    return *this;
}

ComplexMatrix& ComplexMatrix::operator-=(const ComplexMatrix& other) {
    require_same_dim(dim_, other.dim_, "matrix difference");
    for (std::size_t k = 0; k < data_.size(); ++k) data_[k] -= other.data_[k];
    return *this;
}

ComplexMatrix& ComplexMatrix::operator*=(Complex scalar) {
    for (auto& z : data_) z *= scalar;
    return *this;
}

ComplexMatrix operator+(ComplexMatrix lhs, const ComplexMatrix& rhs) { return lhs += rhs; }
ComplexMatrix operator-(ComplexMatrix lhs, const ComplexMatrix& rhs) { return lhs -= rhs; }
ComplexMatrix operator*(ComplexMatrix m, Complex scalar) { return m *= scalar; }
ComplexMatrix operator*(Complex scalar, ComplexMatrix m) { return m *= scalar; }

ComplexMatrix operator*(const ComplexMatrix& lhs, const ComplexMatrix& rhs) {
    require_same_dim(lhs.dim(), rhs.dim(), "matrix product");
    const std::size_t n = lhs.dim();
    ComplexMatrix out(n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t k = 0; k < n; ++k) {
            const Complex a = lhs(i, k);
            if (a == Complex{}) continue;
            for (std::size_t j = 0; j < n; ++j) out(i, j) += a * rhs(k, j);
        }
    return out;
}

double max_abs_diff(const ComplexMatrix& a, const ComplexMatrix& b) {
    return (a - b).max_abs();
}

QuantumState::QuantumState(std::size_t dim) : amps_(dim) { check_dim(dim); }

QuantumState::QuantumState(std::initializer_list<Complex> amplitudes) : amps_(amplitudes) {
    check_dim(amps_.size());
}

QuantumState::QuantumState(std::vector<Complex> amplitudes) : amps_(std::move(amplitudes)) {
    check_dim(amps_.size());
}

QuantumState QuantumState::basis(std::size_t dim, std::size_t k) {
    QuantumState s(dim);
    if (k >= dim) throw InvalidInput("basis index " + std::to_string(k) + " out of range");
    s[k] = 1.0;
    return s;
}

double QuantumState::norm_squared() const {
    double sum = 0.0;
    for (const auto& a : amps_) sum += std::norm(a);
    return sum;
}

double QuantumState::norm() const { return std::sqrt(norm_squared()); }

std::vector<double> QuantumState::populations() const {
    std::vector<double> p(amps_.size());
    std::transform(amps_.begin(), amps_.end(), p.begin(), [](Complex a) { return std::norm(a); });
    return p;
}

QuantumState QuantumState::normalized() const {
    const double n = norm();
    if (!(n > 0.0)) throw InvalidInput("cannot normalize a zero state");
    QuantumState out = *this;
    for (auto& a : out.amps_) a /= n;
    return out;
}

Complex inner(const QuantumState& a, const QuantumState& b) {
    require_same_dim(a.dim(), b.dim(), "inner product");
    Complex sum{};
    for (std::size_t i = 0; i < a.dim(); ++i) sum += std::conj(a[i]) * b[i];
    return sum;
}

double max_abs_diff(const QuantumState& a, const QuantumState& b) {
    require_same_dim(a.dim(), b.dim(), "state difference");
    double m = 0.0;
    for (std::size_t i = 0; i < a.dim(); ++i) m = std::max(m, std::abs(a[i] - b[i]));
    return m;
}

QuantumState apply(const ComplexMatrix& u, const QuantumState& psi) {
    require_same_dim(u.dim(), psi.dim(), "apply");
    QuantumState out(psi.dim());
    for (std::size_t i = 0; i < u.dim(); ++i) {
        Complex sum{};
        for (std::size_t j = 0; j < u.dim(); ++j) sum += u(i, j) * psi[j];
        out[i] = sum;
    }
    return out;
}

ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b) {
    const std::size_t da = a.dim(), db = b.dim();
    ComplexMatrix out(da * db);
    for (std::size_t i = 0; i < da; ++i)
        for (std::size_t j = 0; j < da; ++j)
            for (std::size_t k = 0; k < db; ++k)
                for (std::size_t l = 0; l < db; ++l) out(i * db + k, j * db + l) = a(i, j) * b(k, l);
    return out;
}

QuantumState kron(const QuantumState& a, const QuantumState& b) {
    std::vector<Complex> amps;
    amps.reserve(a.dim() * b.dim());
    for (std::size_t i = 0; i < a.dim(); ++i)
        for (std::size_t k = 0; k < b.dim(); ++k) amps.push_back(a[i] * b[k]);
    return QuantumState(std::move(amps));
}

// Each rotation acts on the (p, q) plane with G = diag(1, e^{-i phi}) R(theta),
// where phi is the phase of a_pq; the phase factor makes the 2x2 block real
// symmetric and R is the classical Jacobi rotation that annihilates it.
HermitianEigen::HermitianEigen(const ComplexMatrix& hermitian) : vectors(ComplexMatrix::identity(hermitian.dim())) {
    if (!hermitian.all_finite()) throw InvalidInput("eigendecomposition: non-finite entries");
    const double scale = std::max(1.0, hermitian.max_abs());
    if (!hermitian.is_hermitian(1e-12 * scale)) throw InvalidInput("eigendecomposition: matrix is not Hermitian");

    const std::size_t n = hermitian.dim();
    ComplexMatrix a = hermitian.hermitian_part();
    ComplexMatrix& v = vectors;

    auto off_norm = [&] {
        double s = 0.0;
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j)
                if (i != j) s += std::norm(a(i, j));
        return std::sqrt(s);
    };

    constexpr int max_sweeps = 64;
    for (int sweep = 0; sweep < max_sweeps && off_norm() > 0.0; ++sweep) {
        bool rotated = false;
        for (std::size_t p = 0; p + 1 < n; ++p) {
            for (std::size_t q = p + 1; q < n; ++q) {
                const Complex apq = a(p, q);
                const double r = std::abs(apq);
                const double app = a(p, p).real(), aqq = a(q, q).real();
                if (r == 0.0) continue;
                if (r <= 1e-18 * (std::abs(app) + std::abs(aqq))) {
                    a(p, q) = 0.0;
                    a(q, p) = 0.0;
                    continue;
                }
                rotated = true;
                const Complex phase = apq / r;  // e^{i phi}
                const double cot2 = (aqq - app) / (2.0 * r);
                const double t = (cot2 >= 0.0 ? 1.0 : -1.0) / (std::abs(cot2) + std::sqrt(cot2 * cot2 + 1.0));
                const double c = 1.0 / std::sqrt(1.0 + t * t);
                const double s = t * c;

                const Complex gpp = c, gpq = s;
                const Complex gqp = -s * std::conj(phase), gqq = c * std::conj(phase);

                for (std::size_t k = 0; k < n; ++k) {  // a <- a G
                    const Complex akp = a(k, p), akq = a(k, q);
                    a(k, p) = akp * gpp + akq * gqp;
                    a(k, q) = akp * gpq + akq * gqq;
                }
                for (std::size_t k = 0; k < n; ++k) {  // a <- G^dagger a
                    const Complex apk = a(p, k), aqk = a(q, k);
                    a(p, k) = std::conj(gpp) * apk + std::conj(gqp) * aqk;
                    a(q, k) = std::conj(gpq) * apk + std::conj(gqq) * aqk;
                }
                a(p, q) = 0.0;
                a(q, p) = 0.0;
                for (std::size_t k = 0; k < n; ++k) {  // v <- v G
                    const Complex vkp = v(k, p), vkq = v(k, q);
                    v(k, p) = vkp * gpp + vkq * gqp;
                    v(k, q) = vkp * gpq + vkq * gqq;
                }
            }
        }
        if (!rotated) break;
    }

    values.resize(n);
    for (std::size_t i = 0; i < n; ++i) values[i] = a(i, i).real();
}

ComplexMatrix HermitianEigen::exp(Complex s) const {
    const std::size_t n = values.size();
    std::vector<Complex> factors(n);
    for (std::size_t k = 0; k < n; ++k) factors[k] = std::exp(s * values[k]);
    ComplexMatrix out(n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            Complex sum{};
            for (std::size_t k = 0; k < n; ++k) sum += vectors(i, k) * factors[k] * std::conj(vectors(j, k));
            out(i, j) = sum;
        }
    return out;
}

namespace {

ComplexMatrix exp_scaling_squaring(const ComplexMatrix& a) {
    const std::size_t n = a.dim();
    const double norm = a.norm1();
    int squarings = 0;
    if (norm > 0.25) squarings = static_cast<int>(std::ceil(std::log2(norm / 0.25)));

    ComplexMatrix scaled = a * Complex(std::ldexp(1.0, -squarings), 0.0);

    // ||scaled||_1 <= 1/4, so 20 terms put the truncation far below 1 ulp.
    ComplexMatrix result = ComplexMatrix::identity(n);
    ComplexMatrix term = ComplexMatrix::identity(n);
    for (int k = 1; k <= 20; ++k) {
        term = term * scaled;
        term *= Complex(1.0 / k, 0.0);
        result += term;
        if (term.max_abs() < 1e-20 * result.max_abs()) break;
    }
    for (int i = 0; i < squarings; ++i) result = result * result;
    return result;
}

}  // namespace

ComplexMatrix mat_exp(const ComplexMatrix& a, Complex s) {
    if (!a.all_finite() || !finite(s)) throw InvalidInput("mat_exp: non-finite input");
    const double scale = std::max(1.0, a.max_abs());
    if (a.is_hermitian(1e-14 * scale)) return HermitianEigen(a).exp(s);
    return exp_scaling_squaring(a * s);
}

}  // namespace zeno
