#include <cmath>

#include "addlab/channel.hpp"
#include "addlab/eig.hpp"
#include "addlab/rng.hpp"
#include "doctest.h"

using namespace addlab;

namespace {

Mat apply_kraus(const std::vector<Mat>& ops, const Mat& rho) {
    Mat out = Mat::zero(ops.front().rows(), ops.front().rows());
    for (const Mat& k : ops) out += k * rho * k.dagger();
    return out;
}

}  // namespace

TEST_CASE("werner-holevo closed formula matches its Kraus form") {
    for (int d : {3, 4}) {
        Channel ch = Channel::werner_holevo(d);
        auto gen = rng_for(201, d);
        Mat rho = random_density(d, gen);
        Mat direct = ch.apply(rho);
        CHECK((direct - apply_kraus(ch.kraus(), rho)).max_norm() < 1e-12);
        CHECK(std::abs(direct.trace() - 1.0) < 1e-12);
    }
}

TEST_CASE("named channels are CPTP") {
    for (const Channel& ch : {Channel::identity(3), Channel::werner_holevo(3),
                              Channel::depolarize(Mat::diag({0.5, 0.3, 0.2}))}) {
        CptpReport r = check_cptp(ch);
        CHECK(r.trace_preserving);
        CHECK(r.completely_positive);
    }
}

TEST_CASE("the transpose map is positive but not completely positive") {
    // superoperator for rho -> rho^T at d = 2 (row-major vec)
    Mat s = Mat::zero(4, 4);
    s(0, 0) = 1;
    s(1, 2) = 1;
    s(2, 1) = 1;
    s(3, 3) = 1;
    Channel t = Channel::from_superoperator(s, 2, 2, "transpose");
    CptpReport r = check_cptp(t);
    CHECK(r.trace_preserving);
    CHECK_FALSE(r.completely_positive);
    CHECK_THROWS(t.kraus());  // no Kraus form exists
}

TEST_CASE("choi partial trace identifies trace preservation") {
    Channel ch = Channel::werner_holevo(3);
    Mat c = ch.choi();
    CHECK((partial_trace(c, 3, 3, Side::Left) - Mat::identity(3)).max_norm() < 1e-12);
}

TEST_CASE("tensor of channels acts as the tensor of actions") {
    Channel a = Channel::werner_holevo(3);
    Channel b = Channel::identity(2);
    Channel ab = tensor(a, b);
    CHECK(ab.dim_in() == 6);
    CHECK(ab.dim_out() == 6);
    auto gen = rng_for(205, 0);
    Mat ra = random_density(3, gen);
    Mat rb = random_density(2, gen);
    CHECK((ab.apply(kron(ra, rb)) - kron(a.apply(ra), b.apply(rb))).max_norm() < 1e-11);
}

TEST_CASE("unitary covariance holds for wh and fails for a skewed channel") {
    CHECK(check_unitary_covariance(Channel::werner_holevo(3), 6, 4, 303));
    CHECK(check_unitary_covariance(Channel::identity(3), 6, 4, 303));
    // amplitude-damping-like channel: spectrum depends on the input direction
    Mat k0 = Mat::zero(2, 2), k1 = Mat::zero(2, 2);
    const double g = 0.6;
    k0(0, 0) = 1;
    k0(1, 1) = std::sqrt(1 - g);
    k1(0, 1) = std::sqrt(g);
    Channel ad = Channel::from_kraus({k0, k1}, "amp-damp");
    CHECK(check_cptp(ad).completely_positive);
    CHECK_FALSE(check_unitary_covariance(ad, 6, 4, 303));
}

TEST_CASE("channel spec parsing") {
    CHECK(parse_channel_spec("wh:3").is_named(NamedKind::WernerHolevo, 3));
    CHECK(parse_channel_spec("id:4").is_named(NamedKind::Identity, 4));
    Channel dep = parse_channel_spec("depol:3");
    CHECK(dep.is_named(NamedKind::Depolarize));
    // depol target is the maximally mixed state
    auto gen = rng_for(207, 0);
    Mat rho = random_density(3, gen);
    CHECK((dep.apply(rho) - Mat::diag({1.0 / 3, 1.0 / 3, 1.0 / 3})).max_norm() < 1e-12);
    CHECK_THROWS(parse_channel_spec("wh:1"));
    CHECK_THROWS(parse_channel_spec("nope:3"));
}
