#pragma once

// Dense complex linear algebra for the small (dim <= 64) operators used by the
// simulators: Hamiltonians, propagators and projectors.

#include <complex>
#include <cstddef>
#include <initializer_list>
#include <span>
#include <vector>

namespace zeno {

using Complex = std::complex<double>;

class ComplexMatrix {
public:
    static constexpr std::size_t max_dim = 64;

    explicit ComplexMatrix(std::size_t dim);
    ComplexMatrix(std::initializer_list<std::initializer_list<Complex>> rows);

    static ComplexMatrix identity(std::size_t dim);
    static ComplexMatrix diagonal(std::span<const Complex> entries);

    std::size_t dim() const { return dim_; }

    Complex operator()(std::size_t row, std::size_t col) const { return data_[row * dim_ + col]; }
    Complex& operator()(std::size_t row, std::size_t col) { return data_[row * dim_ + col]; }

    ComplexMatrix adjoint() const;
    bool is_hermitian(double tol = 1e-12) const;
    bool all_finite() const;

    /// Largest absolute entry.
    double max_abs() const;
    /// Induced 1-norm (max column sum).
    double norm1() const;

    /// Hermitian part (A + A^dagger)/2 and the Hermitian matrix K with A = H + iK.
    ComplexMatrix hermitian_part() const;
    ComplexMatrix antihermitian_part() const;

    ComplexMatrix& operator+=(const ComplexMatrix& other);
    ComplexMatrix& operator-=(const ComplexMatrix& other);
    ComplexMatrix& operator*=(Complex scalar);

    friend bool operator==(const ComplexMatrix&, const ComplexMatrix&) = default;

private:
    std::size_t dim_;
    std::vector<Complex> data_;
};

ComplexMatrix operator+(ComplexMatrix lhs, const ComplexMatrix& rhs);
ComplexMatrix operator-(ComplexMatrix lhs, const ComplexMatrix& rhs);
ComplexMatrix operator*(ComplexMatrix m, Complex scalar);
ComplexMatrix operator*(Complex scalar, ComplexMatrix m);
ComplexMatrix operator*(const ComplexMatrix& lhs, const ComplexMatrix& rhs);

/// Max-abs entrywise difference; throws on dimension mismatch.
double max_abs_diff(const ComplexMatrix& a, const ComplexMatrix& b);

class QuantumState {
public:
    explicit QuantumState(std::size_t dim);
    QuantumState(std::initializer_list<Complex> amplitudes);
    explicit QuantumState(std::vector<Complex> amplitudes);

    /// |k>, zero-based.
    static QuantumState basis(std::size_t dim, std::size_t k);

    std::size_t dim() const { return amps_.size(); }
    Complex operator[](std::size_t i) const { return amps_[i]; }
    Complex& operator[](std::size_t i) { return amps_[i]; }
    std::span<const Complex> amplitudes() const { return amps_; }

    double norm_squared() const;
    double norm() const;
    std::vector<double> populations() const;
    QuantumState normalized() const;

    friend bool operator==(const QuantumState&, const QuantumState&) = default;

private:
    std::vector<Complex> amps_;
};

/// <a|b>, antilinear in the first argument.
Complex inner(const QuantumState& a, const QuantumState& b);
double max_abs_diff(const QuantumState& a, const QuantumState& b);

QuantumState apply(const ComplexMatrix& u, const QuantumState& psi);
ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b);
QuantumState kron(const QuantumState& a, const QuantumState& b);

/// Spectral decomposition A = V diag(values) V^dagger of a Hermitian matrix,
/// computed with cyclic complex Jacobi rotations.
struct HermitianEigen {
    std::vector<double> values;
    ComplexMatrix vectors;  // columns are eigenvectors

    explicit HermitianEigen(const ComplexMatrix& hermitian);

    /// exp(s * A) for any complex s.
    ComplexMatrix exp(Complex s) const;
};

/// exp(s * A). Hermitian A goes through the eigendecomposition; anything else
/// through scaling and squaring of a truncated Taylor series.
ComplexMatrix mat_exp(const ComplexMatrix& a, Complex s);

}  // namespace zeno
