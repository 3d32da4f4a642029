#pragma once

#include <array>
#include <complex>
#include <vector>

#include "corrwit/complex_matrix.hpp"
#include "corrwit/density.hpp"
#include "corrwit/dynamics.hpp"

namespace corrwit::testing {

// Independent oracles for the witness solver and the concurrence routine.
// They share only the elementary matrix primitives with the production code;
// the minimization and the eigenvalue extraction are coded separately.

/// Exhaustive search of frobenius(rho_S' - Tr_env[U (rho_S (x) rho_E(v)) U^dag])
/// over a cubic grid of the Bloch ball with the given spacing.
double grid_oracle_distance(const DensityMatrix& rho_s, const DensityMatrix& rho_s_final,
                            Alpha alpha, double spacing);

/// Roots of a degree-4 complex polynomial by the Durand-Kerner iteration.
/// Coefficients ascending: p(x) = c[0] + c[1] x + ... + c[4] x^4.
std::array<std::complex<double>, 4> quartic_roots(const std::array<std::complex<double>, 5>& c);

/// Concurrence through a second, independently coded eigenvalue path:
/// characteristic polynomial of rho rho~ (Faddeev-LeVerrier) solved by
/// Durand-Kerner, no Hermitian reduction.
double concurrence_oracle(const DensityMatrix& rho);

} // namespace corrwit::testing
