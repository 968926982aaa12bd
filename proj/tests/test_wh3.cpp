#include <cmath>
#include <numeric>
#include <random>

#include "addlab/channel.hpp"
#include "addlab/eig.hpp"
#include "addlab/rng.hpp"
#include "addlab/wh3.hpp"
#include "doctest.h"

using namespace addlab;

namespace {

// numeric route: psi = sum_i sqrt(l_i) |ii>, pushed through the actual pair
std::vector<double> numeric_spectrum(const SchmidtVector& s) {
    static const Channel joint = tensor(Channel::werner_holevo(3), Channel::werner_holevo(3));
    std::vector<cplx> amp(9, 0.0);
    const auto l = s.as_array();
    for (int i = 0; i < 3; ++i) amp[i * 3 + i] = std::sqrt(l[i]);
    return eigvals_hermitian(joint.apply(pure_density(amp)));
}

SchmidtVector random_schmidt(std::mt19937_64& gen) {
    // flat on the simplex via sorted uniforms
    std::uniform_real_distribution<double> u(0.0, 1.0);
    double a = u(gen), b = u(gen);
    if (a > b) std::swap(a, b);
    return SchmidtVector(a, b - a, 1.0 - b);
}

}  // namespace

TEST_CASE("schmidt vector validation") {
    CHECK_THROWS(SchmidtVector(0.5, 0.5, 0.5));
    CHECK_THROWS(SchmidtVector(-0.1, 0.6, 0.5));
    CHECK_NOTHROW(SchmidtVector(1, 0, 0));
}

TEST_CASE("closed-form spectrum at the simplex vertex") {
    WH3Spectrum w = wh3_pair_spectrum(SchmidtVector(1, 0, 0));
    auto v = w.sorted_descending();
    REQUIRE(v.size() == 9);
    for (int i = 0; i < 4; ++i) CHECK(v[i] == doctest::Approx(0.25).epsilon(1e-12));
    for (int i = 4; i < 9; ++i) CHECK(std::abs(v[i]) < 1e-12);
    CHECK(w.t == doctest::Approx(0.0));
}

TEST_CASE("closed-form spectrum at the barycenter") {
    WH3Spectrum w = wh3_pair_spectrum(SchmidtVector(1.0 / 3, 1.0 / 3, 1.0 / 3));
    auto v = w.sorted_descending();
    CHECK(v[0] == doctest::Approx(1.0 / 3).epsilon(1e-12));
    for (int i = 1; i < 9; ++i) CHECK(v[i] == doctest::Approx(1.0 / 12).epsilon(1e-12));
    CHECK(w.t == doctest::Approx(1.0 / 27).epsilon(1e-12));
}

TEST_CASE("e and g values always sum to one") {
    auto gen = rng_for(401, 0);
    for (int trial = 0; trial < 50; ++trial) {
        WH3Spectrum w = wh3_pair_spectrum(random_schmidt(gen));
        const double se = std::accumulate(w.e.begin(), w.e.end(), 0.0);
        const double sg = std::accumulate(w.g.begin(), w.g.end(), 0.0);
        CHECK(se == doctest::Approx(0.5).epsilon(1e-12));
        CHECK(sg == doctest::Approx(0.5).epsilon(1e-12));
    }
}

TEST_CASE("closed form matches the numeric channel output") {
    auto gen = rng_for(403, 0);
    for (int trial = 0; trial < 25; ++trial) {
        SchmidtVector s = random_schmidt(gen);
        auto closed = wh3_pair_spectrum(s).sorted_descending();
        auto numeric = numeric_spectrum(s);
        REQUIRE(numeric.size() == 9);
        for (int i = 0; i < 9; ++i) CHECK(closed[i] == doctest::Approx(numeric[i]).epsilon(1e-9));
    }
}

TEST_CASE("theta_of_t branch endpoints") {
    CHECK(theta_of_t(0.0) == doctest::Approx(std::acos(-1.0)));  // pi at the vertices
    CHECK(theta_of_t(1.0 / 27) == doctest::Approx(0.0).epsilon(1e-12));
    CHECK_THROWS(theta_of_t(0.1));
}

TEST_CASE("reference product and maxent spectra") {
    auto p = wh_product_spectrum(3);
    REQUIRE(p.size() == 9);
    CHECK(p[0] == doctest::Approx(0.25));
    CHECK(std::accumulate(p.begin(), p.end(), 0.0) == doctest::Approx(1.0));
    auto m = wh_maxent_spectrum(3);
    REQUIRE(m.size() == 9);
    CHECK(m[0] == doctest::Approx(1.0 / 3));
    CHECK(m[1] == doctest::Approx(1.0 / 12));
    CHECK(std::accumulate(m.begin(), m.end(), 0.0) == doctest::Approx(1.0));
}
