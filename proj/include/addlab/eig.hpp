#pragma once

#include <functional>
#include <vector>

#include "addlab/matrix.hpp"

namespace addlab {

struct EigResult {
    std::vector<double> values;  // descending
    Mat vectors;                 // columns are the matching eigenvectors
};

// Cyclic Jacobi rotations on the complex Hermitian matrix. Sweeps until the
// off-diagonal Frobenius mass drops below 1e-13 (relative to the matrix norm),
// capped at 100 sweeps; throws on non-convergence.
EigResult eig_hermitian(const Mat& m);

// Eigenvalues only (no eigenvector accumulation), descending.
std::vector<double> eigvals_hermitian(const Mat& m);

// U diag(f(lambda_i)) U^dagger.
Mat spectral_apply(const std::function<double(double)>& f, const Mat& m);

// Clamps an eigenvalue of a density-like matrix into [0,1]; values further
// than tol outside the interval raise.
double clamp_eigenvalue(double x, double tol = 1e-9);

}  // namespace addlab
