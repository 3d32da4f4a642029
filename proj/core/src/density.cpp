#include "corrwit/density.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>

#include "corrwit/hermitian_eig.hpp"

namespace corrwit {

double BlochVector::norm() const { return std::sqrt(norm_sq()); }

DensityMatrix::DensityMatrix(const ComplexMatrix& m, double tol) : mat_(m) {
    const double herm = max_abs_diff(m, m.adjoint());
    if (herm > tol) {
        std::ostringstream msg;
        msg << "density matrix is not Hermitian (max |m - m^dag| = " << herm << ")";
        throw std::invalid_argument(msg.str());
    }
    const double trace_dev = std::abs(m.trace() - cplx(1.0));
    if (trace_dev > tol) {
        std::ostringstream msg;
        msg << "density matrix trace differs from 1 by " << trace_dev;
        throw std::invalid_argument(msg.str());
    }
    const double min_eig = hermitian_eigenvalues(m).front();
    if (min_eig < -tol) {
        std::ostringstream msg;
        msg << "density matrix is not positive semidefinite (min eigenvalue = " << min_eig << ")";
        throw std::invalid_argument(msg.str());
    }
}

DensityMatrix bloch_to_density(const BlochVector& v) {
    if (v.norm_sq() > 1.0 + 1e-12) {
        std::ostringstream msg;
        msg << "Bloch vector norm " << v.norm() << " exceeds 1 (unphysical)";
        throw std::invalid_argument(msg.str());
    }
    ComplexMatrix m(2);
    m(0, 0) = 0.5 * (1.0 + v.z);
    m(1, 1) = 0.5 * (1.0 - v.z);
    m(0, 1) = 0.5 * cplx(v.x, -v.y);
    m(1, 0) = 0.5 * cplx(v.x, v.y);
    return DensityMatrix(m);
}

BlochVector density_to_bloch(const DensityMatrix& rho) {
    if (rho.dim() != 2) throw std::invalid_argument("density_to_bloch expects a 2x2 state");
    const ComplexMatrix& m = rho.matrix();
    BlochVector v;
    v.x = (m(0, 1) + m(1, 0)).real();
    v.y = (cplx(0.0, 1.0) * (m(0, 1) - m(1, 0))).real();
    v.z = (m(0, 0) - m(1, 1)).real();
    return v;
}

} // namespace corrwit
