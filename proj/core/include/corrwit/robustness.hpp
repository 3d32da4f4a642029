#pragma once

#include "corrwit/density.hpp"
#include "corrwit/dynamics.hpp"

namespace corrwit {

/// Default feasibility tolerance on the robustness residual; looser than the
/// witness tolerance because the 6-dimensional optimizer is iterative.
inline constexpr double kRobustnessTol = 1e-6;

/// Outcome of the uncorrelated-explanation search.
///
/// residual is the combined Frobenius mismatch
/// sqrt(|rho_S - tau_S|_F^2 + |rho_S' - tau_S'|_F^2) at the best (n, m);
/// feasible iff residual <= the tolerance.
struct RobustnessResult {
    bool feasible = false;
    BlochVector best_n;
    BlochVector best_m;
    double residual = 0.0;
};

/// Closed-form reduced state of tau_S(n) (x) rho_env(m) after the exchange
/// propagator:
///   tau_S' = (I + g . sigma) / 2,
///   g = cos^2(2a) n + sin^2(2a) m - cos(2a) sin(2a) (n x m).
/// Agrees with evolve_product(bloch_to_density(n), m, alpha) to 1e-12.
DensityMatrix tau_prime(const BlochVector& n, const BlochVector& m, Alpha alpha);

/// Decide whether (rho_S, rho_S') could come from an uncorrelated pair
/// (tau_S(n), rho_env(m)) with |n| <= 1, |m| <= 1, by minimizing
/// F(n, m) = |rho_S - tau_S(n)|_F^2 + |rho_S' - tau_S'(n, m)|_F^2.
///
/// Deterministic search: a 7-point-per-axis grid over each ball's bounding
/// cube (out-of-ball points rejected, seeds ranked by residual then
/// lexicographic index), followed by projected gradient descent from the best
/// five seeds with analytic gradients, step halving, at most 500 iterations,
/// convergence when the step drops below 1e-12.
RobustnessResult robustness_check(const DensityMatrix& rho_s, const DensityMatrix& rho_s_final,
                                  Alpha alpha, double tol = kRobustnessTol);

} // namespace corrwit
