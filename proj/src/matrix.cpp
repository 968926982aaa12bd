#include "addlab/matrix.hpp"

#include <cmath>

#include "addlab/eig.hpp"

namespace addlab {

Mat Mat::identity(int n) {
    Mat m(n, n);
    for (int i = 0; i < n; ++i) m(i, i) = 1.0;
    return m;
}

Mat Mat::diag(const std::vector<double>& d) {
    Mat m(static_cast<int>(d.size()), static_cast<int>(d.size()));
    for (size_t i = 0; i < d.size(); ++i) m(static_cast<int>(i), static_cast<int>(i)) = d[i];
    return m;
}

Mat Mat::dagger() const {
    Mat r(cols_, rows_);
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j) r(j, i) = std::conj((*this)(i, j));
    return r;
}

Mat Mat::transpose() const {
    Mat r(cols_, rows_);
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j) r(j, i) = (*this)(i, j);
    return r;
}

Mat Mat::conj() const {
    Mat r(rows_, cols_);
    for (size_t k = 0; k < a_.size(); ++k) r.a_[k] = std::conj(a_[k]);
    return r;
}

Mat Mat::operator+(const Mat& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_) throw std::invalid_argument("Mat+: shape mismatch");
    Mat r(rows_, cols_);
    for (size_t k = 0; k < a_.size(); ++k) r.a_[k] = a_[k] + o.a_[k];
    return r;
}

Mat Mat::operator-(const Mat& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_) throw std::invalid_argument("Mat-: shape mismatch");
    Mat r(rows_, cols_);
    for (size_t k = 0; k < a_.size(); ++k) r.a_[k] = a_[k] - o.a_[k];
    return r;
}

Mat Mat::operator*(const Mat& o) const {
    if (cols_ != o.rows_) throw std::invalid_argument("Mat*: shape mismatch");
    Mat r(rows_, o.cols_);
    for (int i = 0; i < rows_; ++i) {
        for (int k = 0; k < cols_; ++k) {
            const cplx aik = (*this)(i, k);
            if (aik == cplx{}) continue;
            for (int j = 0; j < o.cols_; ++j) r(i, j) += aik * o(k, j);
        }
    }
    return r;
}

Mat Mat::operator*(cplx s) const {
    Mat r(rows_, cols_);
    for (size_t k = 0; k < a_.size(); ++k) r.a_[k] = a_[k] * s;
    return r;
}

Mat& Mat::operator+=(const Mat& o) {
    if (rows_ != o.rows_ || cols_ != o.cols_) throw std::invalid_argument("Mat+=: shape mismatch");
    for (size_t k = 0; k < a_.size(); ++k) a_[k] += o.a_[k];
    return *this;
}

cplx Mat::trace() const {
    cplx t = 0;
    for (int i = 0; i < std::min(rows_, cols_); ++i) t += (*this)(i, i);
    return t;
}

double Mat::max_norm() const {
    double m = 0;
    for (const cplx& z : a_) m = std::max(m, std::abs(z));
    return m;
}

double Mat::fro_norm() const {
    double s = 0;
    for (const cplx& z : a_) s += std::norm(z);
    return std::sqrt(s);
}

bool Mat::is_hermitian(double tol) const {
    if (rows_ != cols_) return false;
    for (int i = 0; i < rows_; ++i)
        for (int j = i; j < cols_; ++j)
            if (std::abs((*this)(i, j) - std::conj((*this)(j, i))) > tol) return false;
    return true;
}

bool Mat::all_finite() const {
    for (const cplx& z : a_)
        if (!std::isfinite(z.real()) || !std::isfinite(z.imag())) return false;
    return true;
}

Mat kron(const Mat& a, const Mat& b) {
    Mat r(a.rows() * b.rows(), a.cols() * b.cols());
    for (int i = 0; i < a.rows(); ++i)
        for (int j = 0; j < a.cols(); ++j) {
            const cplx aij = a(i, j);
            if (aij == cplx{}) continue;
            for (int k = 0; k < b.rows(); ++k)
                for (int l = 0; l < b.cols(); ++l)
                    r(i * b.rows() + k, j * b.cols() + l) = aij * b(k, l);
        }
    return r;
}

Mat partial_trace(const Mat& m, int d1, int d2, Side keep) {
    if (m.rows() != d1 * d2 || m.cols() != d1 * d2)
        throw std::invalid_argument("partial_trace: dimension mismatch");
    if (keep == Side::Left) {
        Mat r(d1, d1);
        for (int i = 0; i < d1; ++i)
            for (int j = 0; j < d1; ++j) {
                cplx s = 0;
                for (int k = 0; k < d2; ++k) s += m(i * d2 + k, j * d2 + k);
                r(i, j) = s;
            }
        return r;
    }
    Mat r(d2, d2);
    for (int k = 0; k < d2; ++k)
        for (int l = 0; l < d2; ++l) {
            cplx s = 0;
            for (int i = 0; i < d1; ++i) s += m(i * d2 + k, i * d2 + l);
            r(k, l) = s;
        }
    return r;
}

void require_hermitian(const Mat& m, double tol, const std::string& what) {
    if (m.rows() != m.cols()) throw std::invalid_argument(what + ": not square");
    if (!m.all_finite()) throw std::invalid_argument(what + ": non-finite entries");
    Mat diff = m - m.dagger();
    if (diff.max_norm() > tol) throw std::invalid_argument(what + ": not Hermitian within tolerance");
}

bool is_density_matrix(const Mat& m) {
    if (!m.is_hermitian(1e-10)) return false;
    if (std::abs(m.trace().real() - 1.0) > 1e-9 || std::abs(m.trace().imag()) > 1e-9) return false;
    auto ev = eigvals_hermitian(m);
    for (double v : ev)
        if (v < -1e-9) return false;
    return true;
}

}  // namespace addlab
