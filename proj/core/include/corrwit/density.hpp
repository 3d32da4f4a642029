#pragma once

#include "corrwit/complex_matrix.hpp"

namespace corrwit {

/// Real 3-vector (x, y, z) parameterizing a qubit state as
/// rho = (I + x X + y Y + z Z) / 2. Physical states have norm <= 1.
struct BlochVector {
    double x = 0.0;
    double y = 0.0;
    double z = 0.0;

    double norm_sq() const { return x * x + y * y + z * z; }
    double norm() const;
};

/// Validated Hermitian, unit-trace, positive-semidefinite matrix.
///
/// Validation tolerances (1e-10) sit above the accumulated rounding of a few
/// dozen 4x4 multiplies; matrices loaded from files are held to the same
/// tolerances. Construction throws std::invalid_argument naming the violated
/// invariant (Hermiticity, trace, or positivity).
class DensityMatrix {
public:
    static constexpr double kValidationTol = 1e-10;

    explicit DensityMatrix(const ComplexMatrix& m, double tol = kValidationTol);

    int dim() const { return mat_.dim(); }
    const ComplexMatrix& matrix() const { return mat_; }

private:
    ComplexMatrix mat_;
};

/// rho = (I + x X + y Y + z Z) / 2. Rejects |v| > 1 + 1e-12 (unphysical).
DensityMatrix bloch_to_density(const BlochVector& v);

/// v_k = Tr(rho sigma_k) for a 2x2 density matrix; inverse of bloch_to_density.
BlochVector density_to_bloch(const DensityMatrix& rho);

} // namespace corrwit
