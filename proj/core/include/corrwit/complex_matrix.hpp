#pragma once

#include <array>
#include <complex>
#include <cstddef>

namespace corrwit {

using cplx = std::complex<double>;

/// Dense square complex matrix of dimension 2 or 4, row-major.
///
/// This is the substrate for every operator in the library: Pauli matrices,
/// density matrices, the exchange unitary and the witness difference matrix.
/// Values are immutable-friendly (copyable, no shared state).
class ComplexMatrix {
public:
    explicit ComplexMatrix(int dim);

    int dim() const { return dim_; }

    cplx& operator()(int row, int col) { return entries_[index(row, col)]; }
    const cplx& operator()(int row, int col) const { return entries_[index(row, col)]; }

    ComplexMatrix& operator+=(const ComplexMatrix& rhs);
    ComplexMatrix& operator-=(const ComplexMatrix& rhs);
    ComplexMatrix& operator*=(cplx scalar);

    ComplexMatrix adjoint() const;
    ComplexMatrix conjugate() const;
    cplx trace() const;

    static ComplexMatrix zero(int dim) { return ComplexMatrix(dim); }
    static ComplexMatrix identity(int dim);

private:
    std::size_t index(int row, int col) const {
        return static_cast<std::size_t>(row) * static_cast<std::size_t>(dim_) +
               static_cast<std::size_t>(col);
    }

    int dim_;
    std::array<cplx, 16> entries_{};
};

ComplexMatrix operator+(ComplexMatrix lhs, const ComplexMatrix& rhs);
ComplexMatrix operator-(ComplexMatrix lhs, const ComplexMatrix& rhs);
ComplexMatrix operator*(const ComplexMatrix& lhs, const ComplexMatrix& rhs);
ComplexMatrix operator*(cplx scalar, ComplexMatrix m);
ComplexMatrix operator*(ComplexMatrix m, cplx scalar);

enum class Pauli { I, X, Y, Z };

/// Standard Pauli matrix in the computational basis {|0>, |1>}.
ComplexMatrix pauli(Pauli which);

/// Kronecker product with the system as the first factor.
/// Basis order of the result: |00>, |01>, |10>, |11> (first index = system).
ComplexMatrix tensor(const ComplexMatrix& system, const ComplexMatrix& environment);

/// Trace over the second (environment) factor of a 4x4 matrix.
ComplexMatrix partial_trace_env(const ComplexMatrix& joint);

/// Frobenius norm sqrt(sum over all entries of |a_ij|^2).
///
/// The witness distance is defined with this norm, read as running over all
/// entries of the difference matrix.
double frobenius(const ComplexMatrix& m);

/// Entrywise max |a - b|.
double max_abs_diff(const ComplexMatrix& a, const ComplexMatrix& b);

bool approx_equal(const ComplexMatrix& a, const ComplexMatrix& b, double tol);

} // namespace corrwit
