#include "addlab/eig.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace addlab {

namespace {

double offdiag_fro(const Mat& a) {
    double s = 0;
    const int n = a.rows();
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            if (i != j) s += std::norm(a(i, j));
    return std::sqrt(s);
}

// One cyclic sweep of complex Jacobi rotations; optionally accumulates the
// unitary into *vecs.
void jacobi_sweep(Mat& a, Mat* vecs) {
    const int n = a.rows();
    for (int p = 0; p < n - 1; ++p) {
        for (int q = p + 1; q < n; ++q) {
            const cplx apq = a(p, q);
            const double mag = std::abs(apq);
            if (mag < 1e-300) continue;
            const cplx phase = apq / mag;  // apq = mag * phase
            const double app = a(p, p).real();
            const double aqq = a(q, q).real();
            const double tau = (aqq - app) / (2.0 * mag);
            const double t = (tau >= 0 ? 1.0 : -1.0) / (std::abs(tau) + std::sqrt(1.0 + tau * tau));
            const double c = 1.0 / std::sqrt(1.0 + t * t);
            const double s = t * c;
            // V restricted to (p,q): [[c, s], [-s*conj(phase), c*conj(phase)]]
            const cplx vqp = -s * std::conj(phase);
            const cplx vqq = c * std::conj(phase);
            // columns: A <- A V
            for (int k = 0; k < n; ++k) {
                const cplx akp = a(k, p), akq = a(k, q);
                a(k, p) = akp * c + akq * vqp;
                a(k, q) = akp * s + akq * vqq;
            }
            // rows: A <- V^dagger A
            for (int k = 0; k < n; ++k) {
                const cplx apk = a(p, k), aqk = a(q, k);
                a(p, k) = c * apk + std::conj(vqp) * aqk;
                a(q, k) = s * apk + std::conj(vqq) * aqk;
            }
            a(p, q) = 0;
            a(q, p) = 0;
            a(p, p) = a(p, p).real();
            a(q, q) = a(q, q).real();
            if (vecs) {
                for (int k = 0; k < n; ++k) {
                    const cplx ekp = (*vecs)(k, p), ekq = (*vecs)(k, q);
                    (*vecs)(k, p) = ekp * c + ekq * vqp;
                    (*vecs)(k, q) = ekp * s + ekq * vqq;
                }
            }
        }
    }
}

void jacobi_diagonalize(Mat& a, Mat* vecs) {
    require_hermitian(a, 1e-10, "eig_hermitian input");
    const int n = a.rows();
    // symmetrize away the sub-tolerance asymmetry before rotating
    Mat h = (a + a.dagger()) * cplx(0.5, 0.0);
    a = h;
    const double stop = 1e-13 * std::max(1.0, a.fro_norm());
    for (int sweep = 0; sweep < 100; ++sweep) {
        if (offdiag_fro(a) <= stop) return;
        jacobi_sweep(a, vecs);
    }
    if (offdiag_fro(a) > stop && n > 1)
        throw std::runtime_error("eig_hermitian: Jacobi did not converge in 100 sweeps");
}

}  // namespace

EigResult eig_hermitian(const Mat& m) {
    Mat a = m;
    Mat vecs = Mat::identity(m.rows());
    jacobi_diagonalize(a, &vecs);
    const int n = m.rows();
    std::vector<int> idx(n);
    std::iota(idx.begin(), idx.end(), 0);
    std::sort(idx.begin(), idx.end(), [&](int i, int j) { return a(i, i).real() > a(j, j).real(); });
    EigResult r;
    r.values.resize(n);
    r.vectors = Mat(n, n);
    for (int j = 0; j < n; ++j) {
        r.values[j] = a(idx[j], idx[j]).real();
        for (int i = 0; i < n; ++i) r.vectors(i, j) = vecs(i, idx[j]);
    }
    return r;
}

std::vector<double> eigvals_hermitian(const Mat& m) {
    Mat a = m;
    jacobi_diagonalize(a, nullptr);
    std::vector<double> v(m.rows());
    for (int i = 0; i < m.rows(); ++i) v[i] = a(i, i).real();
    std::sort(v.begin(), v.end(), std::greater<double>());
    return v;
}

Mat spectral_apply(const std::function<double(double)>& f, const Mat& m) {
    EigResult e = eig_hermitian(m);
    const int n = m.rows();
    Mat r(n, n);
    for (int k = 0; k < n; ++k) {
        const double fk = f(e.values[k]);
        for (int i = 0; i < n; ++i) {
            const cplx uik = e.vectors(i, k);
            for (int j = 0; j < n; ++j) r(i, j) += fk * uik * std::conj(e.vectors(j, k));
        }
    }
    return r;
}

double clamp_eigenvalue(double x, double tol) {
    if (x < -tol || x > 1.0 + tol)
        throw std::domain_error("eigenvalue outside [0,1] beyond clamp tolerance");
    return std::min(1.0, std::max(0.0, x));
}

}  // namespace addlab
