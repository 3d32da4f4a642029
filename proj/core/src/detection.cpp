#include "corrwit/detection.hpp"

#include <algorithm>
#include <array>
#include <charconv>
#include <cmath>
#include <numbers>
#include <ostream>
#include <stdexcept>

namespace corrwit {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kHalfPi = kPi / 2.0;
// Components below this Frobenius norm count as structurally zero when
// deciding the Degenerate verdict.
constexpr double kDegenerateTol = 1e-12;

using Vec3 = std::array<double, 3>;
using Mat3 = std::array<std::array<double, 3>, 3>;

double dot(const Vec3& a, const Vec3& b) { return a[0] * b[0] + a[1] * b[1] + a[2] * b[2]; }
double norm(const Vec3& a) { return std::sqrt(dot(a, a)); }

// Jacobi rotations for a real symmetric 3x3 matrix. Used only for the
// normal-equations matrix of the witness subproblem; ComplexMatrix is fixed
// to dims 2 and 4, so this stays local.
void eig_sym3(const Mat3& m, Vec3& values, Mat3& vectors) {
    Mat3 a = m;
    vectors = {{{1, 0, 0}, {0, 1, 0}, {0, 0, 1}}};
    for (int sweep = 0; sweep < 60; ++sweep) {
        double off = 0.0;
        for (int p = 0; p < 3; ++p)
            for (int q = p + 1; q < 3; ++q) off += a[p][q] * a[p][q];
        if (off < 1e-30) break;
        for (int p = 0; p < 3; ++p) {
            for (int q = p + 1; q < 3; ++q) {
                if (a[p][q] == 0.0) continue;
                const double theta = 0.5 * std::atan2(2.0 * a[p][q], a[q][q] - a[p][p]);
                const double c = std::cos(theta);
                const double s = std::sin(theta);
                for (int k = 0; k < 3; ++k) {
                    const double akp = a[k][p];
                    const double akq = a[k][q];
                    a[k][p] = c * akp - s * akq;
                    a[k][q] = s * akp + c * akq;
                }
                for (int k = 0; k < 3; ++k) {
                    const double apk = a[p][k];
                    const double aqk = a[q][k];
                    a[p][k] = c * apk - s * aqk;
                    a[q][k] = s * apk + c * aqk;
                }
                for (int k = 0; k < 3; ++k) {
                    const double vkp = vectors[k][p];
                    const double vkq = vectors[k][q];
                    vectors[k][p] = c * vkp - s * vkq;
                    vectors[k][q] = s * vkp + c * vkq;
                }
            }
        }
    }
    for (int i = 0; i < 3; ++i) values[i] = a[i][i];
}

// 8-dimensional real embedding of a complex 2x2 matrix; the Euclidean norm of
// the embedding equals the Frobenius norm of the matrix.
std::array<double, 8> vec8(const ComplexMatrix& m) {
    return {m(0, 0).real(), m(0, 1).real(), m(1, 0).real(), m(1, 1).real(),
            m(0, 0).imag(), m(0, 1).imag(), m(1, 0).imag(), m(1, 1).imag()};
}

struct BallLsq {
    Vec3 v;
    bool on_boundary;
};

// minimize |A v - b| over |v| <= 1 for an 8x3 real system.
BallLsq solve_ball_lsq(const std::array<std::array<double, 8>, 3>& cols,
                       const std::array<double, 8>& b) {
    Mat3 gram{};
    Vec3 rhs{};
    for (int i = 0; i < 3; ++i) {
        for (int j = 0; j < 3; ++j) {
            double s = 0.0;
            for (int k = 0; k < 8; ++k) s += cols[i][k] * cols[j][k];
            gram[i][j] = s;
        }
        double s = 0.0;
        for (int k = 0; k < 8; ++k) s += cols[i][k] * b[k];
        rhs[i] = s;
    }

    Vec3 lambda;
    Mat3 q;
    eig_sym3(gram, lambda, q);
    const double lambda_max = std::max({lambda[0], lambda[1], lambda[2], 0.0});
    const double cutoff = 1e-12 * std::max(lambda_max, 1e-300);

    Vec3 w{};
    for (int i = 0; i < 3; ++i) {
        w[i] = q[0][i] * rhs[0] + q[1][i] * rhs[1] + q[2][i] * rhs[2];
    }

    // Minimum-norm unconstrained solution in the eigenbasis.
    Vec3 u{};
    for (int i = 0; i < 3; ++i) u[i] = (lambda[i] > cutoff) ? w[i] / lambda[i] : 0.0;
    const double unc_norm_sq = dot(u, u);
    bool boundary = unc_norm_sq > 1.0;
    if (boundary) {
        // |v(mu)|^2 = sum w_i^2 / (lambda_i + mu)^2 decreases monotonically in
        // mu >= 0; bisect for |v(mu)| = 1. mu = |w| is always an upper bracket.
        const double w_norm = norm(w);
        double lo = 0.0;
        double hi = std::max(w_norm, 1e-300);
        auto norm_sq_at = [&](double mu) {
            double s = 0.0;
            for (int i = 0; i < 3; ++i) {
                const double denom = lambda[i] + mu;
                if (denom > 0.0) {
                    const double t = w[i] / denom;
                    s += t * t;
                }
            }
            return s;
        };
        while (norm_sq_at(hi) > 1.0) hi *= 2.0;
        for (int it = 0; it < 200; ++it) {
            const double mid = 0.5 * (lo + hi);
            if (norm_sq_at(mid) > 1.0)
                lo = mid;
            else
                hi = mid;
        }
        const double mu = 0.5 * (lo + hi);
        for (int i = 0; i < 3; ++i) u[i] = w[i] / (lambda[i] + mu);
    }

    Vec3 v{};
    for (int k = 0; k < 3; ++k) {
        v[k] = q[k][0] * u[0] + q[k][1] * u[1] + q[k][2] * u[2];
    }
    return {v, boundary};
}

} // namespace

ComplexMatrix AffineDecomposition::evaluate(const BlochVector& v) const {
    return d0 + cplx(v.x) * dx + cplx(v.y) * dy + cplx(v.z) * dz;
}

const char* to_string(Verdict v) {
    switch (v) {
        case Verdict::Correlated: return "correlated";
        case Verdict::ConsistentWithProduct: return "consistent-with-product";
        case Verdict::Degenerate: return "degenerate";
    }
    return "?";
}

AffineDecomposition affine_decomposition(const DensityMatrix& rho_s,
                                         const DensityMatrix& rho_s_final, Alpha alpha) {
    if (rho_s.dim() != 2 || rho_s_final.dim() != 2) {
        throw std::invalid_argument("affine_decomposition expects 2x2 states");
    }
    // The channel is affine in the environment Bloch vector, so four probes
    // determine D exactly.
    const ComplexMatrix base = evolve_product(rho_s, BlochVector{0, 0, 0}, alpha).matrix();
    AffineDecomposition d;
    d.d0 = rho_s_final.matrix() - base;
    d.dx = base - evolve_product(rho_s, BlochVector{1, 0, 0}, alpha).matrix();
    d.dy = base - evolve_product(rho_s, BlochVector{0, 1, 0}, alpha).matrix();
    d.dz = base - evolve_product(rho_s, BlochVector{0, 0, 1}, alpha).matrix();
    return d;
}

DetectionResult witness_distance(const DensityMatrix& rho_s, const DensityMatrix& rho_s_final,
                                 Alpha alpha, double feas_tol) {
    const AffineDecomposition d = affine_decomposition(rho_s, rho_s_final, alpha);

    DetectionResult result;
    if (frobenius(d.d0) <= kDegenerateTol && frobenius(d.dx) <= kDegenerateTol &&
        frobenius(d.dy) <= kDegenerateTol && frobenius(d.dz) <= kDegenerateTol) {
        result.verdict = Verdict::Degenerate;
        result.distance = 0.0;
        result.minimizer = BlochVector{0, 0, 0};
        result.residual_matrix = d.evaluate(result.minimizer);
        return result;
    }

    std::array<std::array<double, 8>, 3> cols{vec8(d.dx), vec8(d.dy), vec8(d.dz)};
    std::array<double, 8> b = vec8(d.d0);
    for (double& e : b) e = -e;

    const BallLsq sol = solve_ball_lsq(cols, b);
    result.minimizer = BlochVector{sol.v[0], sol.v[1], sol.v[2]};
    result.residual_matrix = d.evaluate(result.minimizer);
    result.distance = frobenius(result.residual_matrix);
    result.verdict = result.distance <= feas_tol ? Verdict::ConsistentWithProduct
                                                 : Verdict::Correlated;
    return result;
}

DetectionResult detect(const DensityMatrix& rho_se, Alpha alpha, double feas_tol) {
    if (rho_se.dim() != 4) throw std::invalid_argument("detect expects a 4x4 joint state");
    const DensityMatrix rho_s(partial_trace_env(rho_se.matrix()));
    const DensityMatrix rho_s_final = evolve_reduced(rho_se, alpha);
    return witness_distance(rho_s, rho_s_final, alpha, feas_tol);
}

std::optional<double> z_relation(const StateFamily& family, Alpha alpha) {
    const double s2 = std::sin(2.0 * alpha.value);
    if (std::abs(s2) < 1e-12) return std::nullopt;
    const double c2 = std::cos(2.0 * alpha.value);
    const double cot2 = c2 / s2;
    switch (family.kind) {
        case FamilyKind::MaxEntangled: {
            const double s4 = std::sin(4.0 * alpha.value);
            const double c4 = std::cos(4.0 * alpha.value);
            return -2.0 * s4 / (c4 - 1.0);
        }
        case FamilyKind::PureMixed:
            return 2.0 * cot2 - family.p * (2.0 * cot2 + 1.0);
        case FamilyKind::WernerLike:
            return -2.0 * (-1.0 + family.p) * cot2;
    }
    throw std::logic_error("unknown family kind");
}

bool AlphaInterval::contains(double alpha, double margin) const {
    if (empty()) return false;
    double offset = std::fmod(alpha - lo, period);
    if (offset < 0.0) offset += period;
    if (!(offset > margin && offset < (hi - lo) - margin)) return false;
    double folded = std::fmod(alpha, period);
    if (folded < 0.0) folded += period;
    for (double puncture : punctures) {
        double gap = std::abs(folded - puncture);
        gap = std::min(gap, period - gap);
        if (gap <= margin) return false;
    }
    return true;
}

AlphaInterval alpha_bounds(const StateFamily& family) {
    const double lower = 0.5 * std::atan(-2.0);
    switch (family.kind) {
        case FamilyKind::MaxEntangled:
            return {lower, 0.5 * std::atan(2.0), kHalfPi, {0.0}};
        case FamilyKind::PureMixed: {
            const double p = family.p;
            if (p >= 1.0) return {0.0, 0.0, kHalfPi, {0.0, kPi / 4.0}};
            // |z(alpha, p)| > 1 iff cot 2a > (1+p)/(2(1-p)) or cot 2a < -1/2;
            // both branches wrap into one interval mod pi/2.
            const double upper = 0.5 * std::atan2(2.0 * (1.0 - p), 1.0 + p);
            return {lower, upper, kHalfPi, {0.0, kPi / 4.0}};
        }
        case FamilyKind::WernerLike:
            throw std::invalid_argument(
                "alpha_bounds: WernerLike has a p threshold, not an alpha interval; "
                "see p_threshold");
    }
    throw std::logic_error("unknown family kind");
}

double p_threshold(Alpha alpha) {
    const double s2 = std::sin(2.0 * alpha.value);
    const double c2 = std::cos(2.0 * alpha.value);
    if (std::abs(s2) < 1e-12) {
        throw std::invalid_argument("p_threshold is undefined at sin(2 alpha) = 0");
    }
    const double p_star = 1.0 - 0.5 * std::abs(s2 / c2);
    return std::clamp(p_star, 0.0, 1.0);
}

std::vector<ScanRow> scan_alpha(const StateFamily& family, std::span<const double> alphas,
                                double feas_tol) {
    if (alphas.empty()) throw std::invalid_argument("scan_alpha: empty alpha grid");
    const DensityMatrix joint = build_state(family);
    std::vector<ScanRow> rows;
    rows.reserve(alphas.size());
    for (double a : alphas) {
        rows.push_back({a, detect(joint, Alpha{a}, feas_tol)});
    }
    return rows;
}

namespace {

void append_double(std::string& line, double value) {
    char buf[40];
    auto res = std::to_chars(buf, buf + sizeof(buf), value, std::chars_format::general, 12);
    line.append(buf, res.ptr);
}

} // namespace

void write_scan_csv(std::ostream& out, std::span<const ScanRow> rows) {
    out << "alpha,distance,x,y,z,verdict\n";
    for (const ScanRow& row : rows) {
        std::string line;
        append_double(line, row.alpha);
        line.push_back(',');
        append_double(line, row.result.distance);
        line.push_back(',');
        append_double(line, row.result.minimizer.x);
        line.push_back(',');
        append_double(line, row.result.minimizer.y);
        line.push_back(',');
        append_double(line, row.result.minimizer.z);
        line.push_back(',');
        line += to_string(row.result.verdict);
        line.push_back('\n');
        out << line;
    }
}

} // namespace corrwit
