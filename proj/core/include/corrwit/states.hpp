#pragma once

#include <optional>
#include <string>

#include "corrwit/density.hpp"
#include "corrwit/dynamics.hpp"

namespace corrwit {

enum class FamilyKind { MaxEntangled, PureMixed, WernerLike };

/// Tagged analytic joint-state family with mixing weight p in [0, 1]
/// (ignored for MaxEntangled). These are the only hard-coded states; every
/// other input arrives through the matrix file format.
struct StateFamily {
    FamilyKind kind = FamilyKind::MaxEntangled;
    double p = 0.0;

    static StateFamily max_entangled() { return {FamilyKind::MaxEntangled, 0.0}; }
    static StateFamily pure_mixed(double p);
    static StateFamily werner_like(double p);
};

/// CLI selector strings: "max-entangled", "pure-mixed", "werner-like".
std::string to_string(FamilyKind kind);
std::optional<FamilyKind> family_from_string(const std::string& name);

/// MaxEntangled: |Psi><Psi| with |Psi> = (|01> + i|10>)/sqrt(2).
/// PureMixed:    p |01><01| + (1-p) |Psi><Psi|.
/// WernerLike:   p I/4 + (1-p) |Psi><Psi|.
DensityMatrix build_state(const StateFamily& family);

/// Closed-form Tr_env of build_state: I/2 for MaxEntangled and WernerLike,
/// diag(p + (1-p)/2, (1-p)/2) for PureMixed.
DensityMatrix analytic_reduced_initial(const StateFamily& family);

/// Closed-form reduced state after the exchange propagator.
///
/// MaxEntangled: diag((1+sin4a)/2, (1-sin4a)/2)
/// PureMixed:    diag(1 + p cos4a + (1-p) sin4a, 1 - p cos4a - (1-p) sin4a)/2
/// WernerLike:   diag(1 + (1-p) sin4a, 1 - (1-p) sin4a)/2
/// Cross-checked against evolve_reduced(build_state(f), alpha) to 1e-12.
DensityMatrix analytic_reduced_final(const StateFamily& family, Alpha alpha);

} // namespace corrwit
