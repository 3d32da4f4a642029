#pragma once

#include "corrwit/complex_matrix.hpp"
#include "corrwit/density.hpp"

namespace corrwit {

/// Dimensionless interaction parameter alpha = J t of the exchange coupling.
///
/// Any finite real value is accepted; the reduced dynamics is pi/2-periodic,
/// so canonical() folds into [0, pi/2) when a representative is wanted.
/// Scans keep the raw value for plotting.
struct Alpha {
    double value = 0.0;

    static Alpha radians(double v) { return Alpha{v}; }
    Alpha canonical() const;
};

/// Two-spin exchange propagator U(alpha) in the basis |00>,|01>,|10>,|11>.
///
/// U(alpha) = e^{3 i alpha} e^{-2 i alpha SWAP}: corner entries e^{i alpha},
/// inner block e^{3 i alpha} [[cos 2a, -i sin 2a], [-i sin 2a, cos 2a]].
/// The overall phase is fixed so that U(0) = I, U(pi/4) = e^{i pi/4} SWAP and
/// U(pi/2) = i I hold exactly; it cancels in every conjugation.
ComplexMatrix exchange_unitary(Alpha alpha);

/// Reduced map rho_S' = Tr_env[U rho_SE U^dag] for a joint 4x4 state.
DensityMatrix evolve_reduced(const DensityMatrix& rho_se, Alpha alpha);

/// Reduced map applied to the product rho_S (x) rho_env(v_env).
///
/// Same channel as evolve_reduced on tensor(rho_S, bloch_to_density(v_env));
/// exposed as a first-class operation because the witness solver probes it
/// with basis environment vectors.
DensityMatrix evolve_product(const DensityMatrix& rho_s, const BlochVector& v_env, Alpha alpha);

} // namespace corrwit
