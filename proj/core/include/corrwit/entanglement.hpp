#pragma once

#include "corrwit/density.hpp"

namespace corrwit {

/// Spin-flipped state (sigma_y (x) sigma_y) rho* (sigma_y (x) sigma_y),
/// with * the complex conjugate in the standard basis.
ComplexMatrix spin_flip(const DensityMatrix& rho);

/// Two-qubit concurrence C = max{0, l1 - l2 - l3 - l4}, where l_i are the
/// descending square roots of the eigenvalues of rho rho~.
///
/// The product rho rho~ is not Hermitian; its nonzero spectrum equals that of
/// sqrt(rho) rho~ sqrt(rho), which is Hermitian PSD, so the computation stays
/// inside the Hermitian solver. Eigenvalues in [-1e-10, 0) are clamped to 0;
/// more negative ones throw.
double concurrence(const DensityMatrix& rho);

/// Entanglement of formation E = h((1 + sqrt(1 - C^2)) / 2) with
/// h(a) = -a log2 a - (1-a) log2(1-a), h(0) = h(1) = 0.
double entanglement_of_formation(const DensityMatrix& rho);

/// The convex function mapping concurrence to entanglement of formation.
double eof_from_concurrence(double c);

} // namespace corrwit
