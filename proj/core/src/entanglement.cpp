#include "corrwit/entanglement.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "corrwit/hermitian_eig.hpp"

namespace corrwit {

ComplexMatrix spin_flip(const DensityMatrix& rho) {
    if (rho.dim() != 4) throw std::invalid_argument("spin_flip expects a 4x4 state");
    const ComplexMatrix yy = tensor(pauli(Pauli::Y), pauli(Pauli::Y));
    return yy * rho.matrix().conjugate() * yy;
}

double concurrence(const DensityMatrix& rho) {
    if (rho.dim() != 4) throw std::invalid_argument("concurrence expects a 4x4 state");
    const ComplexMatrix root = sqrt_psd(rho.matrix());
    const ComplexMatrix herm = root * spin_flip(rho) * root;
    std::vector<double> eigs = hermitian_eigenvalues(herm);
    std::vector<double> lambdas;
    for (double e : eigs) {
        if (e < 0.0) {
            if (e < -1e-10) {
                throw std::invalid_argument("concurrence: eigenvalue " + std::to_string(e) +
                                            " is negative beyond rounding tolerance");
            }
            e = 0.0;
        }
        lambdas.push_back(std::sqrt(e));
    }
    std::sort(lambdas.begin(), lambdas.end(), std::greater<>());
    const double c = lambdas[0] - lambdas[1] - lambdas[2] - lambdas[3];
    return std::clamp(c, 0.0, 1.0);
}

double eof_from_concurrence(double c) {
    c = std::clamp(c, 0.0, 1.0);
    const double a = 0.5 * (1.0 + std::sqrt(std::max(0.0, 1.0 - c * c)));
    if (a <= 0.0 || a >= 1.0) return 0.0;  // h(0) = h(1) = 0 by continuity
    return -a * std::log2(a) - (1.0 - a) * std::log2(1.0 - a);
}

double entanglement_of_formation(const DensityMatrix& rho) {
    return eof_from_concurrence(concurrence(rho));
}

} // namespace corrwit
