#include "corrwit/complex_matrix.hpp"

#include <cmath>
#include <stdexcept>

namespace corrwit {

ComplexMatrix::ComplexMatrix(int dim) : dim_(dim) {
    if (dim != 2 && dim != 4) {
        throw std::invalid_argument("matrix dim must be 2 or 4, got " + std::to_string(dim));
    }
}

ComplexMatrix& ComplexMatrix::operator+=(const ComplexMatrix& rhs) {
    if (dim_ != rhs.dim_) throw std::invalid_argument("matrix dim mismatch in +");
    for (int i = 0; i < dim_ * dim_; ++i) entries_[i] += rhs.entries_[i];
    return *this;
}

ComplexMatrix& ComplexMatrix::operator-=(const ComplexMatrix& rhs) {
    if (dim_ != rhs.dim_) throw std::invalid_argument("matrix dim mismatch in -");
    for (int i = 0; i < dim_ * dim_; ++i) entries_[i] -= rhs.entries_[i];
    return *this;
}

ComplexMatrix& ComplexMatrix::operator*=(cplx scalar) {
    for (int i = 0; i < dim_ * dim_; ++i) entries_[i] *= scalar;
    return *this;
}

ComplexMatrix ComplexMatrix::adjoint() const {
    ComplexMatrix out(dim_);
    for (int i = 0; i < dim_; ++i)
        for (int j = 0; j < dim_; ++j) out(i, j) = std::conj((*this)(j, i));
    return out;
}

ComplexMatrix ComplexMatrix::conjugate() const {
    ComplexMatrix out(dim_);
    for (int i = 0; i < dim_; ++i)
        for (int j = 0; j < dim_; ++j) out(i, j) = std::conj((*this)(i, j));
    return out;
}

cplx ComplexMatrix::trace() const {
    cplx t = 0.0;
    for (int i = 0; i < dim_; ++i) t += (*this)(i, i);
    return t;
}

ComplexMatrix ComplexMatrix::identity(int dim) {
    ComplexMatrix out(dim);
    for (int i = 0; i < dim; ++i) out(i, i) = 1.0;
    return out;
}

ComplexMatrix operator+(ComplexMatrix lhs, const ComplexMatrix& rhs) { return lhs += rhs; }
ComplexMatrix operator-(ComplexMatrix lhs, const ComplexMatrix& rhs) { return lhs -= rhs; }

ComplexMatrix operator*(const ComplexMatrix& lhs, const ComplexMatrix& rhs) {
    if (lhs.dim() != rhs.dim()) throw std::invalid_argument("matrix dim mismatch in *");
    const int n = lhs.dim();
    ComplexMatrix out(n);
    for (int i = 0; i < n; ++i) {
        for (int k = 0; k < n; ++k) {
            const cplx a = lhs(i, k);
            if (a == cplx{}) continue;
            for (int j = 0; j < n; ++j) out(i, j) += a * rhs(k, j);
        }
    }
    return out;
}

ComplexMatrix operator*(cplx scalar, ComplexMatrix m) { return m *= scalar; }
ComplexMatrix operator*(ComplexMatrix m, cplx scalar) { return m *= scalar; }

ComplexMatrix pauli(Pauli which) {
    ComplexMatrix m(2);
    switch (which) {
        case Pauli::I:
            m(0, 0) = 1.0;
            m(1, 1) = 1.0;
            break;
        case Pauli::X:
            m(0, 1) = 1.0;
            m(1, 0) = 1.0;
            break;
        case Pauli::Y:
            m(0, 1) = cplx(0.0, -1.0);
            m(1, 0) = cplx(0.0, 1.0);
            break;
        case Pauli::Z:
            m(0, 0) = 1.0;
            m(1, 1) = -1.0;
            break;
    }
    return m;
}

ComplexMatrix tensor(const ComplexMatrix& system, const ComplexMatrix& environment) {
    if (system.dim() != 2 || environment.dim() != 2) {
        throw std::invalid_argument("tensor expects two 2x2 factors");
    }
    ComplexMatrix out(4);
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j)
            for (int k = 0; k < 2; ++k)
                for (int l = 0; l < 2; ++l)
                    out(2 * i + k, 2 * j + l) = system(i, j) * environment(k, l);
    return out;
}

ComplexMatrix partial_trace_env(const ComplexMatrix& joint) {
    if (joint.dim() != 4) throw std::invalid_argument("partial_trace_env expects a 4x4 matrix");
    ComplexMatrix out(2);
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j)
            out(i, j) = joint(2 * i, 2 * j) + joint(2 * i + 1, 2 * j + 1);
    return out;
}

double frobenius(const ComplexMatrix& m) {
    double sum = 0.0;
    for (int i = 0; i < m.dim(); ++i)
        for (int j = 0; j < m.dim(); ++j) sum += std::norm(m(i, j));
    return std::sqrt(sum);
}

double max_abs_diff(const ComplexMatrix& a, const ComplexMatrix& b) {
    if (a.dim() != b.dim()) throw std::invalid_argument("matrix dim mismatch in max_abs_diff");
    double worst = 0.0;
    for (int i = 0; i < a.dim(); ++i)
        for (int j = 0; j < a.dim(); ++j) worst = std::max(worst, std::abs(a(i, j) - b(i, j)));
    return worst;
}

bool approx_equal(const ComplexMatrix& a, const ComplexMatrix& b, double tol) {
    return a.dim() == b.dim() && max_abs_diff(a, b) <= tol;
}

} // namespace corrwit
