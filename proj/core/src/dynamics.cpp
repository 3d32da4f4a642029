#include "corrwit/dynamics.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace corrwit {

namespace {
constexpr double kHalfPi = std::numbers::pi / 2.0;
}

Alpha Alpha::canonical() const {
    if (!std::isfinite(value)) throw std::invalid_argument("alpha must be finite");
    double folded = std::fmod(value, kHalfPi);
    if (folded < 0.0) folded += kHalfPi;
    return Alpha{folded};
}

ComplexMatrix exchange_unitary(Alpha alpha) {
    const double a = alpha.value;
    if (!std::isfinite(a)) throw std::invalid_argument("alpha must be finite");
    const cplx corner = std::polar(1.0, a);
    const cplx inner = std::polar(1.0, 3.0 * a);
    const double c2 = std::cos(2.0 * a);
    const double s2 = std::sin(2.0 * a);
    ComplexMatrix u(4);
    u(0, 0) = corner;
    u(3, 3) = corner;
    u(1, 1) = inner * c2;
    u(2, 2) = inner * c2;
    u(1, 2) = cplx(0.0, -1.0) * inner * s2;
    u(2, 1) = cplx(0.0, -1.0) * inner * s2;
    return u;
}

DensityMatrix evolve_reduced(const DensityMatrix& rho_se, Alpha alpha) {
    if (rho_se.dim() != 4) throw std::invalid_argument("evolve_reduced expects a 4x4 joint state");
    const ComplexMatrix u = exchange_unitary(alpha);
    const ComplexMatrix evolved = u * rho_se.matrix() * u.adjoint();
    return DensityMatrix(partial_trace_env(evolved));
}

DensityMatrix evolve_product(const DensityMatrix& rho_s, const BlochVector& v_env, Alpha alpha) {
    if (rho_s.dim() != 2) throw std::invalid_argument("evolve_product expects a 2x2 system state");
    const DensityMatrix env = bloch_to_density(v_env);
    const DensityMatrix joint(tensor(rho_s.matrix(), env.matrix()));
    return evolve_reduced(joint, alpha);
}

} // namespace corrwit
