#include "corrwit/robustness.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <vector>

namespace corrwit {

namespace {

using Vec3 = std::array<double, 3>;

Vec3 to_array(const BlochVector& v) { return {v.x, v.y, v.z}; }
BlochVector to_bloch(const Vec3& v) { return {v[0], v[1], v[2]}; }

Vec3 operator+(const Vec3& a, const Vec3& b) { return {a[0] + b[0], a[1] + b[1], a[2] + b[2]}; }
Vec3 operator-(const Vec3& a, const Vec3& b) { return {a[0] - b[0], a[1] - b[1], a[2] - b[2]}; }
Vec3 operator*(double s, const Vec3& a) { return {s * a[0], s * a[1], s * a[2]}; }

double dot(const Vec3& a, const Vec3& b) { return a[0] * b[0] + a[1] * b[1] + a[2] * b[2]; }
double norm_sq(const Vec3& a) { return dot(a, a); }

Vec3 cross(const Vec3& a, const Vec3& b) {
    return {a[1] * b[2] - a[2] * b[1], a[2] * b[0] - a[0] * b[2], a[0] * b[1] - a[1] * b[0]};
}

Vec3 project_ball(const Vec3& v) {
    const double n = std::sqrt(norm_sq(v));
    if (n <= 1.0) return v;
    return (1.0 / n) * v;
}

struct Objective {
    double c2;  // cos^2(2a)
    double s2;  // sin^2(2a)
    double cs;  // cos(2a) sin(2a)
    Vec3 r;     // Bloch vector of rho_S
    Vec3 rp;    // Bloch vector of rho_S'

    Vec3 final_bloch(const Vec3& n, const Vec3& m) const {
        return c2 * n + s2 * m - cs * cross(n, m);
    }

    // F = |rho_S - tau_S|_F^2 + |rho_S' - tau_S'|_F^2
    //   = (|r - n|^2 + |rp - g|^2) / 2 in Bloch coordinates.
    double value(const Vec3& n, const Vec3& m) const {
        return 0.5 * (norm_sq(r - n) + norm_sq(final_bloch(n, m) - rp));
    }

    void gradient(const Vec3& n, const Vec3& m, Vec3& grad_n, Vec3& grad_m) const {
        const Vec3 e = final_bloch(n, m) - rp;
        // dg/dn = c2 I + cs [m]_x, dg/dm = s2 I - cs [n]_x (cross-product
        // matrices are antisymmetric, so the transposes flip the sign).
        grad_n = (n - r) + c2 * e - cs * cross(m, e);
        grad_m = s2 * e + cs * cross(n, e);
    }
};

struct Seed {
    double value;
    int index;
    Vec3 n;
    Vec3 m;
};

} // namespace

DensityMatrix tau_prime(const BlochVector& n, const BlochVector& m, Alpha alpha) {
    if (n.norm_sq() > 1.0 + 1e-12 || m.norm_sq() > 1.0 + 1e-12) {
        throw std::invalid_argument("tau_prime: Bloch vectors must lie in the unit ball");
    }
    const double c = std::cos(2.0 * alpha.value);
    const double s = std::sin(2.0 * alpha.value);
    const Vec3 g = c * c * to_array(n) + s * s * to_array(m) - c * s * cross(to_array(n), to_array(m));
    return bloch_to_density(to_bloch(g));
}

RobustnessResult robustness_check(const DensityMatrix& rho_s, const DensityMatrix& rho_s_final,
                                  Alpha alpha, double tol) {
    if (rho_s.dim() != 2 || rho_s_final.dim() != 2) {
        throw std::invalid_argument("robustness_check expects 2x2 states");
    }
    const double c = std::cos(2.0 * alpha.value);
    const double s = std::sin(2.0 * alpha.value);
    Objective obj{c * c, s * s, c * s, to_array(density_to_bloch(rho_s)),
                  to_array(density_to_bloch(rho_s_final))};

    // Coarse deterministic grid: 7 points per axis over [-1, 1]^3 per ball,
    // out-of-ball points rejected.
    std::vector<Vec3> grid;
    for (int i = 0; i < 7; ++i) {
        for (int j = 0; j < 7; ++j) {
            for (int k = 0; k < 7; ++k) {
                const Vec3 v{-1.0 + i / 3.0, -1.0 + j / 3.0, -1.0 + k / 3.0};
                if (norm_sq(v) <= 1.0 + 1e-12) grid.push_back(v);
            }
        }
    }

    std::vector<Seed> seeds;
    seeds.reserve(grid.size() * grid.size());
    int index = 0;
    for (const Vec3& n : grid) {
        for (const Vec3& m : grid) {
            seeds.push_back({obj.value(n, m), index++, n, m});
        }
    }
    std::sort(seeds.begin(), seeds.end(), [](const Seed& a, const Seed& b) {
        if (a.value != b.value) return a.value < b.value;
        return a.index < b.index;
    });

    const std::size_t refine_count = std::min<std::size_t>(5, seeds.size());
    Vec3 best_n{};
    Vec3 best_m{};
    double best_value = std::numeric_limits<double>::infinity();

    for (std::size_t si = 0; si < refine_count; ++si) {
        Vec3 n = seeds[si].n;
        Vec3 m = seeds[si].m;
        double value = obj.value(n, m);
        double step = 1.0;
        for (int iter = 0; iter < 500; ++iter) {
            Vec3 gn, gm;
            obj.gradient(n, m, gn, gm);
            bool moved = false;
            while (step >= 1e-12) {
                const Vec3 n_next = project_ball(n - step * gn);
                const Vec3 m_next = project_ball(m - step * gm);
                const double next = obj.value(n_next, m_next);
                if (next < value) {
                    n = n_next;
                    m = m_next;
                    value = next;
                    moved = true;
                    break;
                }
                step *= 0.5;
            }
            if (!moved) break;
            step = std::min(step * 2.0, 1.0);
        }
        if (value < best_value) {
            best_value = value;
            best_n = n;
            best_m = m;
        }
    }

    RobustnessResult result;
    result.best_n = to_bloch(best_n);
    result.best_m = to_bloch(best_m);
    result.residual = std::sqrt(std::max(0.0, best_value));
    result.feasible = result.residual <= tol;
    return result;
}

} // namespace corrwit
