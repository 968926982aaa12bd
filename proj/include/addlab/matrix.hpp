#pragma once

#include <complex>
#include <stdexcept>
#include <string>
#include <vector>

namespace addlab {

using cplx = std::complex<double>;

// Dense row-major complex matrix. Small dimensions only (<= ~100).
class Mat {
public:
    Mat() : rows_(0), cols_(0) {}
    Mat(int rows, int cols) : rows_(rows), cols_(cols), a_(static_cast<size_t>(rows) * cols) {
        if (rows <= 0 || cols <= 0) throw std::invalid_argument("Mat: nonpositive dimension");
    }

    static Mat identity(int n);
    static Mat zero(int rows, int cols) { return Mat(rows, cols); }
    static Mat diag(const std::vector<double>& d);

    int rows() const { return rows_; }
    int cols() const { return cols_; }

    cplx& operator()(int i, int j) { return a_[static_cast<size_t>(i) * cols_ + j]; }
    const cplx& operator()(int i, int j) const { return a_[static_cast<size_t>(i) * cols_ + j]; }

    const std::vector<cplx>& data() const { return a_; }
    std::vector<cplx>& data() { return a_; }

    Mat dagger() const;
    Mat transpose() const;
    Mat conj() const;

    Mat operator+(const Mat& o) const;
    Mat operator-(const Mat& o) const;
    Mat operator*(const Mat& o) const;
    Mat operator*(cplx s) const;
    Mat& operator+=(const Mat& o);

    cplx trace() const;
    double max_norm() const;      // max |a_ij|
    double fro_norm() const;

    bool is_hermitian(double tol = 1e-10) const;
    bool all_finite() const;

private:
    int rows_, cols_;
    std::vector<cplx> a_;
};

inline Mat operator*(cplx s, const Mat& m) { return m * s; }

Mat kron(const Mat& a, const Mat& b);

enum class Side { Left, Right };

// Partial trace of an (d1*d2)x(d1*d2) matrix over one tensor factor.
Mat partial_trace(const Mat& m, int d1, int d2, Side keep);

// Throws if m is not Hermitian within tol (max-norm of m - m^dagger).
void require_hermitian(const Mat& m, double tol = 1e-10, const std::string& what = "matrix");

// True iff m is PSD within -1e-9 and has unit trace within 1e-9.
bool is_density_matrix(const Mat& m);

}  // namespace addlab
