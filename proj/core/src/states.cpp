#include "corrwit/states.hpp"

#include <cmath>
#include <stdexcept>

namespace corrwit {

namespace {

void check_p(double p) {
    if (!(p >= 0.0 && p <= 1.0)) {
        throw std::invalid_argument("family weight p must lie in [0, 1], got " +
                                    std::to_string(p));
    }
}

// |Psi><Psi| with |Psi> = (|01> + i|10>)/sqrt(2).
ComplexMatrix bell_projector() {
    ComplexMatrix m(4);
    m(1, 1) = 0.5;
    m(2, 2) = 0.5;
    m(1, 2) = cplx(0.0, -0.5);
    m(2, 1) = cplx(0.0, 0.5);
    return m;
}

ComplexMatrix diag2(double a, double b) {
    ComplexMatrix m(2);
    m(0, 0) = a;
    m(1, 1) = b;
    return m;
}

} // namespace

StateFamily StateFamily::pure_mixed(double p) {
    check_p(p);
    return {FamilyKind::PureMixed, p};
}

StateFamily StateFamily::werner_like(double p) {
    check_p(p);
    return {FamilyKind::WernerLike, p};
}

std::string to_string(FamilyKind kind) {
    switch (kind) {
        case FamilyKind::MaxEntangled: return "max-entangled";
        case FamilyKind::PureMixed: return "pure-mixed";
        case FamilyKind::WernerLike: return "werner-like";
    }
    return "?";
}

std::optional<FamilyKind> family_from_string(const std::string& name) {
    if (name == "max-entangled") return FamilyKind::MaxEntangled;
    if (name == "pure-mixed") return FamilyKind::PureMixed;
    if (name == "werner-like") return FamilyKind::WernerLike;
    return std::nullopt;
}

DensityMatrix build_state(const StateFamily& family) {
    check_p(family.p);
    const ComplexMatrix bell = bell_projector();
    switch (family.kind) {
        case FamilyKind::MaxEntangled:
            return DensityMatrix(bell);
        case FamilyKind::PureMixed: {
            ComplexMatrix pure(4);
            pure(1, 1) = 1.0;  // |01><01|
            return DensityMatrix(family.p * pure + (1.0 - family.p) * bell);
        }
        case FamilyKind::WernerLike: {
            const ComplexMatrix mixed = cplx(0.25) * ComplexMatrix::identity(4);
            return DensityMatrix(family.p * mixed + (1.0 - family.p) * bell);
        }
    }
    throw std::logic_error("unknown family kind");
}

DensityMatrix analytic_reduced_initial(const StateFamily& family) {
    check_p(family.p);
    switch (family.kind) {
        case FamilyKind::MaxEntangled:
        case FamilyKind::WernerLike:
            return DensityMatrix(diag2(0.5, 0.5));
        case FamilyKind::PureMixed: {
            const double p = family.p;
            return DensityMatrix(diag2(p + 0.5 * (1.0 - p), 0.5 * (1.0 - p)));
        }
    }
    throw std::logic_error("unknown family kind");
}

DensityMatrix analytic_reduced_final(const StateFamily& family, Alpha alpha) {
    check_p(family.p);
    const double s4 = std::sin(4.0 * alpha.value);
    const double c4 = std::cos(4.0 * alpha.value);
    switch (family.kind) {
        case FamilyKind::MaxEntangled:
            return DensityMatrix(diag2(0.5 * (1.0 + s4), 0.5 * (1.0 - s4)));
        case FamilyKind::PureMixed: {
            const double p = family.p;
            const double top = 0.5 * (1.0 + p * c4 + (1.0 - p) * s4);
            return DensityMatrix(diag2(top, 1.0 - top));
        }
        case FamilyKind::WernerLike: {
            const double p = family.p;
            const double top = 0.5 * (1.0 + (1.0 - p) * s4);
            return DensityMatrix(diag2(top, 1.0 - top));
        }
    }
    throw std::logic_error("unknown family kind");
}

} // namespace corrwit
