#include <cmath>

#include "addlab/eig.hpp"
#include "addlab/rng.hpp"
#include "doctest.h"

using namespace addlab;

TEST_CASE("eig_hermitian reconstructs the matrix") {
    for (int dim : {2, 3, 5, 9}) {
        auto gen = rng_for(101, dim);
        Mat a = random_hermitian_01(dim, gen);
        EigResult r = eig_hermitian(a);
        Mat recon = Mat::zero(dim, dim);
        for (int k = 0; k < dim; ++k)
            for (int i = 0; i < dim; ++i)
                for (int j = 0; j < dim; ++j)
                    recon(i, j) += r.values[k] * r.vectors(i, k) * std::conj(r.vectors(j, k));
        CHECK((recon - a).max_norm() < 1e-11);
        for (int k = 1; k < dim; ++k) CHECK(r.values[k - 1] >= r.values[k]);
    }
}

TEST_CASE("eigvals_hermitian agrees with the full decomposition") {
    auto gen = rng_for(103, 0);
    Mat a = random_hermitian_01(7, gen);
    auto v1 = eig_hermitian(a).values;
    auto v2 = eigvals_hermitian(a);
    REQUIRE(v1.size() == v2.size());
    for (size_t i = 0; i < v1.size(); ++i) CHECK(v1[i] == doctest::Approx(v2[i]).epsilon(1e-12));
}

TEST_CASE("spectral_apply cube equals the direct matrix cube") {
    auto gen = rng_for(105, 0);
    Mat a = random_hermitian_01(5, gen);
    Mat cubed = spectral_apply([](double x) { return x * x * x; }, a);
    CHECK((cubed - a * a * a).max_norm() < 1e-11);
}

TEST_CASE("clamp_eigenvalue window") {
    CHECK(clamp_eigenvalue(-1e-12) == 0.0);
    CHECK(clamp_eigenvalue(1.0 + 1e-12) == 1.0);
    CHECK(clamp_eigenvalue(0.5) == 0.5);
    CHECK_THROWS_AS(clamp_eigenvalue(-1e-6), std::domain_error);
    CHECK_THROWS_AS(clamp_eigenvalue(1.0 + 1e-6), std::domain_error);
}
