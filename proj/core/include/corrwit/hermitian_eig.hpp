#pragma once

#include <vector>

#include "corrwit/complex_matrix.hpp"

namespace corrwit {

struct EigenSystem {
    std::vector<double> values;  // ascending
    ComplexMatrix vectors;       // columns, same order as values
};

/// Eigenvalues of a Hermitian matrix, ascending.
/// 2x2 inputs use the closed form; 4x4 inputs use cyclic Jacobi rotations.
std::vector<double> hermitian_eigenvalues(const ComplexMatrix& m);

/// Full eigensystem of a Hermitian matrix (Jacobi rotations, tolerance ~1e-13
/// relative to the Frobenius scale of the input).
EigenSystem hermitian_eigensystem(const ComplexMatrix& m);

/// Hermitian square root of a positive semidefinite matrix.
/// Eigenvalues in [-1e-10, 0) are clamped to 0; more negative values throw
/// (corrupt input rather than rounding noise).
ComplexMatrix sqrt_psd(const ComplexMatrix& m);

} // namespace corrwit
