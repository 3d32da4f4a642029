#include "corrwit/hermitian_eig.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace corrwit {

namespace {

double off_diagonal_sq(const ComplexMatrix& a) {
    double sum = 0.0;
    for (int p = 0; p < a.dim(); ++p)
        for (int q = p + 1; q < a.dim(); ++q) sum += std::norm(a(p, q));
    return sum;
}

// One complex Jacobi rotation annihilating a(p,q). The rotation
// J(p,p)=c, J(p,q)=s*e^{i phi}, J(q,p)=-s*e^{-i phi}, J(q,q)=c with
// a(p,q)=|a|e^{i phi} and tan(2 theta) = 2|a(p,q)| / (a(q,q)-a(p,p))
// zeroes the pivot under a <- J^dag a J.
void rotate(ComplexMatrix& a, ComplexMatrix& v, int p, int q) {
    const cplx apq = a(p, q);
    const double mag = std::abs(apq);
    if (mag == 0.0) return;
    const cplx phase = apq / mag;
    const double app = a(p, p).real();
    const double aqq = a(q, q).real();
    const double theta = 0.5 * std::atan2(2.0 * mag, aqq - app);
    const double c = std::cos(theta);
    const double s = std::sin(theta);

    const int n = a.dim();
    for (int k = 0; k < n; ++k) {
        if (k == p || k == q) continue;
        const cplx akp = a(k, p);
        const cplx akq = a(k, q);
        a(k, p) = c * akp - s * std::conj(phase) * akq;
        a(k, q) = s * phase * akp + c * akq;
        a(p, k) = std::conj(a(k, p));
        a(q, k) = std::conj(a(k, q));
    }
    const double new_pp = c * c * app - 2.0 * c * s * mag + s * s * aqq;
    const double new_qq = s * s * app + 2.0 * c * s * mag + c * c * aqq;
    a(p, p) = new_pp;
    a(q, q) = new_qq;
    a(p, q) = 0.0;
    a(q, p) = 0.0;

    for (int k = 0; k < n; ++k) {
        const cplx vkp = v(k, p);
        const cplx vkq = v(k, q);
        v(k, p) = c * vkp - s * std::conj(phase) * vkq;
        v(k, q) = s * phase * vkp + c * vkq;
    }
}

void sort_ascending(EigenSystem& sys) {
    const int n = sys.vectors.dim();
    std::vector<int> order(n);
    for (int i = 0; i < n; ++i) order[i] = i;
    std::sort(order.begin(), order.end(),
              [&](int a, int b) { return sys.values[a] < sys.values[b]; });
    std::vector<double> vals(n);
    ComplexMatrix vecs(n);
    for (int j = 0; j < n; ++j) {
        vals[j] = sys.values[order[j]];
        for (int i = 0; i < n; ++i) vecs(i, j) = sys.vectors(i, order[j]);
    }
    sys.values = std::move(vals);
    sys.vectors = std::move(vecs);
}

} // namespace

EigenSystem hermitian_eigensystem(const ComplexMatrix& m) {
    const int n = m.dim();
    ComplexMatrix a = m;
    // Work on the Hermitian part so that rounding-level asymmetry in the
    // input cannot drift during sweeps.
    for (int i = 0; i < n; ++i) {
        for (int j = i; j < n; ++j) {
            const cplx sym = 0.5 * (a(i, j) + std::conj(a(j, i)));
            a(i, j) = sym;
            a(j, i) = std::conj(sym);
        }
        a(i, i) = a(i, i).real();
    }

    EigenSystem sys{std::vector<double>(n), ComplexMatrix::identity(n)};
    const double scale = std::max(frobenius(a), 1e-300);
    const double tol_sq = (1e-13 * scale) * (1e-13 * scale);
    for (int sweep = 0; sweep < 60 && off_diagonal_sq(a) > tol_sq; ++sweep) {
        for (int p = 0; p < n; ++p)
            for (int q = p + 1; q < n; ++q) rotate(a, sys.vectors, p, q);
    }
    for (int i = 0; i < n; ++i) sys.values[i] = a(i, i).real();
    sort_ascending(sys);
    return sys;
}

std::vector<double> hermitian_eigenvalues(const ComplexMatrix& m) {
    if (m.dim() == 2) {
        const double a = m(0, 0).real();
        const double d = m(1, 1).real();
        const double mean = 0.5 * (a + d);
        const double radius = std::hypot(0.5 * (a - d), std::abs(m(0, 1)));
        return {mean - radius, mean + radius};
    }
    return hermitian_eigensystem(m).values;
}

ComplexMatrix sqrt_psd(const ComplexMatrix& m) {
    EigenSystem sys = hermitian_eigensystem(m);
    const int n = m.dim();
    ComplexMatrix out(n);
    for (int k = 0; k < n; ++k) {
        double lambda = sys.values[k];
        if (lambda < 0.0) {
            if (lambda < -1e-10) {
                throw std::invalid_argument("sqrt_psd: eigenvalue " + std::to_string(lambda) +
                                            " is negative beyond rounding tolerance");
            }
            lambda = 0.0;
        }
        const double root = std::sqrt(lambda);
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j)
                out(i, j) += root * sys.vectors(i, k) * std::conj(sys.vectors(j, k));
    }
    return out;
}

} // namespace corrwit
