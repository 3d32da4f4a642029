#pragma once

#include <iosfwd>
#include <optional>
#include <span>
#include <vector>

#include "corrwit/density.hpp"
#include "corrwit/dynamics.hpp"
#include "corrwit/states.hpp"

namespace corrwit {

/// Default feasibility tolerance for analytic inputs. The CLI exposes a flag
/// to widen it for noisy experimental matrices.
inline constexpr double kFeasibilityTol = 1e-9;

/// Affine form of the difference matrix over the environment Bloch ball:
/// D(x, y, z) = d0 + x dx + y dy + z dz, with
/// D(v) = rho_S' - evolve_product(rho_S, v, alpha).
/// Each component is Hermitian and traceless.
struct AffineDecomposition {
    ComplexMatrix d0{2};
    ComplexMatrix dx{2};
    ComplexMatrix dy{2};
    ComplexMatrix dz{2};

    ComplexMatrix evaluate(const BlochVector& v) const;
};

enum class Verdict { Correlated, ConsistentWithProduct, Degenerate };

const char* to_string(Verdict v);

/// Result of the witness minimization.
///
/// verdict is ConsistentWithProduct iff distance <= the feasibility
/// tolerance; Degenerate is reserved for d0 = dx = dy = dz = 0 (for example
/// alpha = pi/2, where every environment reproduces the evolution and no
/// information is obtainable at this alpha).
struct DetectionResult {
    double distance = 0.0;
    BlochVector minimizer;
    Verdict verdict = Verdict::ConsistentWithProduct;
    ComplexMatrix residual_matrix{2};
};

AffineDecomposition affine_decomposition(const DensityMatrix& rho_s,
                                         const DensityMatrix& rho_s_final, Alpha alpha);

/// min over |v| <= 1 of frobenius(D(v)).
///
/// The objective is a convex quadratic restricted to the unit ball
/// (ball-constrained linear least squares), solved exactly: the complex 2x2
/// components embed as a real 8x3 system A v ~ b; if the minimum-norm
/// unconstrained solution lies inside the ball it is accepted, otherwise the
/// boundary multiplier of (A^T A + mu I) v = A^T b is found by monotone
/// root finding so that |v| = 1 (trust-region subproblem). Rank-deficient
/// directions (eigenvalue cutoff 1e-12 relative) take the minimum-norm
/// tie-break.
DetectionResult witness_distance(const DensityMatrix& rho_s, const DensityMatrix& rho_s_final,
                                 Alpha alpha, double feas_tol = kFeasibilityTol);

/// Full protocol on a joint state: rho_S = Tr_env(rho_SE),
/// rho_S' = evolve_reduced(rho_SE, alpha), then witness_distance.
///
/// Soundness: verdict Correlated implies rho_SE is not a product state (no
/// false positives up to tolerance). ConsistentWithProduct carries no claim
/// either way.
DetectionResult detect(const DensityMatrix& rho_se, Alpha alpha,
                       double feas_tol = kFeasibilityTol);

/// Closed-form z with x = y = 0 at which D vanishes (no ball restriction):
///   MaxEntangled: z = -2 sin4a / (cos4a - 1)
///   PureMixed:    z = 2 cot2a - p (2 cot2a + 1)
///   WernerLike:   z = -2 (-1 + p) cot2a
/// Returns nullopt at singular alpha (sin 2a = 0).
std::optional<double> z_relation(const StateFamily& family, Alpha alpha);

/// Interval of alpha (mod period) where the witness certifies correlations,
/// with puncture values (mod period) where D is structurally zero.
struct AlphaInterval {
    double lo = 0.0;
    double hi = 0.0;
    double period = 0.0;
    std::vector<double> punctures;

    bool empty() const { return hi <= lo; }
    /// True if alpha sits strictly inside the interval mod period and at
    /// least margin away from the endpoints and punctures.
    bool contains(double alpha, double margin = 0.0) const;
};

/// Detectability window in alpha for MaxEntangled and PureMixed(p).
///
/// MaxEntangled: [arctan(-2)/2 + n pi/2, arctan(2)/2 + n pi/2], punctured at
/// alpha = 0 mod pi/2. PureMixed(p): lower endpoint arctan(-2)/2
/// (p-independent), upper endpoint arccot((1+p)/(2(1-p)))/2, punctured at
/// alpha = 0 and pi/4 mod pi/2; empty at p = 1 (the state is a product).
/// The test suite certifies both windows by scanning the witness.
AlphaInterval alpha_bounds(const StateFamily& family);

/// Detectability threshold for WernerLike: correlations are detectable at
/// alpha iff p < p* = clamp(1 - |tan 2a| / 2, [0, 1]). Derived from |z| <= 1
/// in the WernerLike z relation. Throws at singular alpha (sin 2a = 0).
double p_threshold(Alpha alpha);

struct ScanRow {
    double alpha = 0.0;
    DetectionResult result;
};

/// Per-alpha witness results on a family, ordered by grid index.
std::vector<ScanRow> scan_alpha(const StateFamily& family, std::span<const double> alphas,
                                double feas_tol = kFeasibilityTol);

/// CSV with header alpha,distance,x,y,z,verdict; floats at 12 significant
/// digits, locale-independent.
void write_scan_csv(std::ostream& out, std::span<const ScanRow> rows);

} // namespace corrwit
