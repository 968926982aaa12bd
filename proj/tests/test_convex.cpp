#include <cmath>

#include "addlab/convex.hpp"
#include "addlab/eig.hpp"
#include "addlab/rng.hpp"
#include "doctest.h"

using namespace addlab;

TEST_CASE("base library point values") {
    CHECK(ConvexFn::power(2)(0.5) == doctest::Approx(0.25));
    CHECK(ConvexFn::power(5)(1.0 / 3) == doctest::Approx(std::pow(1.0 / 3, 5)));
    CHECK(ConvexFn::neg_power(0.5)(0.25) == doctest::Approx(-0.5));
    CHECK(ConvexFn::xlogx()(0.0) == 0.0);
    CHECK(ConvexFn::xlogx()(1.0) == 0.0);
    CHECK(ConvexFn::xlogx()(0.5) == doctest::Approx(0.5 * std::log(0.5)));
    CHECK(ConvexFn::kink(0.3)(0.2) == 0.0);
    CHECK(ConvexFn::kink(0.3)(0.5) == doctest::Approx(0.2));
    // f_lambda(x) = (2x-1)^2 / (1 - lambda (2x-1))
    CHECK(ConvexFn::flambda(-0.5)(0.0) == doctest::Approx(1.0 / (1 - 0.5)));
    CHECK(ConvexFn::flambda(-0.5)(0.5) == 0.0);
    CHECK(ConvexFn::flambda(0.0)(0.25) == doctest::Approx(0.25));
    CHECK(ConvexFn::delta0()(0.0) == 1.0);
    CHECK(ConvexFn::delta0()(1e-12) == 1.0);
    CHECK(ConvexFn::delta0()(0.1) == 0.0);
    CHECK(ConvexFn::delta1()(1.0) == 1.0);
    CHECK(ConvexFn::delta1()(0.9) == 0.0);
}

TEST_CASE("domain validation") {
    CHECK_THROWS(ConvexFn::power(0.5));
    CHECK_THROWS(ConvexFn::neg_power(1.5));
    CHECK_THROWS(ConvexFn::xplogx(0.3));
    CHECK_THROWS(ConvexFn::kink(1.5));
    CHECK_THROWS(ConvexFn::flambda(0.5));
    CHECK_THROWS(ConvexFn::flambda(-1.0));
    CHECK_THROWS(ConvexFn::normalize_affine(ConvexFn::power(2), -1.0, 0, 0));
}

TEST_CASE("trace_apply counts zero eigenvalues through delta0") {
    // delta0 over the spectrum = dim - rank
    Mat sigma = Mat::diag({0.5, 0.5, 0.0, 0.0});
    CHECK(trace_apply(ConvexFn::delta0(), sigma) == doctest::Approx(2.0));
    CHECK(trace_apply(ConvexFn::delta1(), Mat::diag({1.0, 0.0, 0.0})) == doctest::Approx(1.0));
    CHECK(trace_apply(ConvexFn::power(2), Mat::diag({0.5, 0.5})) == doctest::Approx(0.5));
}

TEST_CASE("trace_apply is basis independent") {
    auto gen = rng_for(301, 0);
    Mat rho = random_density(4, gen);
    Mat u = haar_unitary(4, gen);
    const ConvexFn f = ConvexFn::xlogx();
    CHECK(trace_apply(f, u * rho * u.dagger()) == doctest::Approx(trace_apply(f, rho)).epsilon(1e-10));
}

TEST_CASE("x^2 has an exact measure representation") {
    // x^2 = -1/4 + x + (1/4) f_0(x) since f_0(x) = (2x-1)^2
    DiscreteMeasure mu({0.0}, {1.0});
    ConvexFn f = ConvexFn::from_measure(-0.25, 1.0, 0.25, mu);
    for (int i = 0; i <= 100; ++i) {
        const double x = i / 100.0;
        CHECK(f(x) == doctest::Approx(x * x).epsilon(1e-12));
    }
}

TEST_CASE("dilate rescales the argument") {
    ConvexFn f = ConvexFn::dilate(ConvexFn::power(2), 3);
    CHECK(f(0.9) == doctest::Approx(0.09));
    CHECK_THROWS(ConvexFn::dilate(ConvexFn::power(2), 0));
}

TEST_CASE("mu_transform sums over scaled arguments") {
    ConvexFn f = ConvexFn::mu_transform(ConvexFn::power(2), {0.5, 0.5});
    CHECK(f(0.8) == doctest::Approx(2 * 0.16));
    // sub-probability mu needs differentiability at 0; the kink has it, delta0 does not
    CHECK_NOTHROW(ConvexFn::mu_transform(ConvexFn::power(2), {0.25, 0.25}));
    CHECK_THROWS(ConvexFn::mu_transform(ConvexFn::delta0(), {0.25, 0.25}));
    CHECK_THROWS(ConvexFn::mu_transform(ConvexFn::power(2), {0.8, 0.8}));
}

TEST_CASE("operator convexity sampler accepts x^2 and rejects x^3") {
    CHECK(operator_convexity_test(ConvexFn::power(2), 2, 200, 5).passed);
    OpConvexReport r = operator_convexity_test(ConvexFn::power(3), 2, 500, 5);
    CHECK_FALSE(r.passed);
    CHECK(r.worst_violation < -1e-6);
    // the witness pair really violates midpoint operator convexity
    auto cube = [](double x) { return x * x * x; };
    Mat lhs = (spectral_apply(cube, r.witness_a) + spectral_apply(cube, r.witness_b)) * 0.5;
    Mat mid = (r.witness_a + r.witness_b) * 0.5;
    Mat gap = lhs - spectral_apply(cube, mid);
    CHECK(eigvals_hermitian(gap).back() == doctest::Approx(r.worst_violation).epsilon(1e-9));
}

TEST_CASE("function spec parsing round trip") {
    CHECK(parse_function_spec("power:5")(0.5) == doctest::Approx(std::pow(0.5, 5)));
    CHECK(parse_function_spec("negpower:0.5")(0.25) == doctest::Approx(-0.5));
    CHECK(parse_function_spec("xlogx")(0.5) == doctest::Approx(0.5 * std::log(0.5)));
    CHECK(parse_function_spec("xplogx:0.75")(0.5) ==
          doctest::Approx(std::pow(0.5, 0.75) * std::log(0.5)));
    CHECK(parse_function_spec("kink:0.30")(0.5) == doctest::Approx(0.2));
    CHECK(parse_function_spec("flambda:-0.5")(0.0) == doctest::Approx(2.0));
    CHECK(parse_function_spec("affine:2,1")(0.5) == doctest::Approx(2.0));
    CHECK(parse_function_spec("delta0")(0.0) == 1.0);
    CHECK_THROWS(parse_function_spec("power"));
    CHECK_THROWS(parse_function_spec("unknown:1"));
    CHECK(builtin_function_library().size() >= 10);
}
