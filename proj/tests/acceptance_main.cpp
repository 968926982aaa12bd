// Acceptance gate: one pass/fail line per criterion, nonzero exit on any
// failure. Tolerances are pinned here and intentionally duplicated from the
// library so a library-side regression cannot silently relax the gate.
#include <chrono>
#include <cmath>
#include <cstdio>
#include <random>
#include <vector>

#include "addlab/channel.hpp"
#include "addlab/convex.hpp"
#include "addlab/eig.hpp"
#include "addlab/experiments.hpp"
#include "addlab/optimize.hpp"
#include "addlab/rng.hpp"
#include "addlab/wh3.hpp"

using namespace addlab;
using Clock = std::chrono::steady_clock;

namespace {

int g_failures = 0;

void report(int criterion, const char* name, bool ok, double elapsed_s) {
    std::printf("[%s] criterion %2d: %-58s (%.3fs)\n", ok ? "PASS" : "FAIL", criterion, name,
                elapsed_s);
    if (!ok) ++g_failures;
}

struct Timer {
    Clock::time_point t0 = Clock::now();
    double elapsed() const { return std::chrono::duration<double>(Clock::now() - t0).count(); }
};

const ChannelPair& wh3_pair() {
    static const ChannelPair p{Channel::werner_holevo(3), Channel::werner_holevo(3)};
    return p;
}

bool spectrum_matches(const SchmidtVector& s, const std::vector<double>& expect, double tol) {
    auto got = wh3_pair_spectrum(s).sorted_descending();
    if (got.size() != expect.size()) return false;
    for (size_t i = 0; i < got.size(); ++i)
        if (std::abs(got[i] - expect[i]) > tol) return false;
    return true;
}

// 1. product-input spectrum {1/4 x4, 0 x5} within 1e-10
void criterion_1() {
    Timer t;
    const bool ok =
        spectrum_matches(SchmidtVector(1, 0, 0), {0.25, 0.25, 0.25, 0.25, 0, 0, 0, 0, 0}, 1e-10) &&
        spectrum_matches(SchmidtVector(0, 1, 0), {0.25, 0.25, 0.25, 0.25, 0, 0, 0, 0, 0}, 1e-10);
    report(1, "product-input spectrum {1/4 x4, 0 x5}", ok && t.elapsed() < 0.001, t.elapsed());
}

// 2. maximally entangled spectrum {1/3, 1/12 x8} within 1e-10
void criterion_2() {
    Timer t;
    std::vector<double> expect{1.0 / 3};
    expect.insert(expect.end(), 8, 1.0 / 12);
    const bool ok = spectrum_matches(SchmidtVector(1.0 / 3, 1.0 / 3, 1.0 / 3), expect, 1e-10);
    report(2, "maximally entangled spectrum {1/3, 1/12 x8}", ok && t.elapsed() < 0.001, t.elapsed());
}

// 3. closed form vs numeric 9x9 eigendecomposition, 200 seeds, 1e-7, < 10 s
void criterion_3() {
    Timer t;
    const Channel joint = tensor(Channel::werner_holevo(3), Channel::werner_holevo(3));
    bool ok = true;
    double worst = 0;
    for (int trial = 0; trial < 200 && ok; ++trial) {
        auto gen = rng_for(7001, trial);
        std::uniform_real_distribution<double> u(0.0, 1.0);
        double a = u(gen), b = u(gen);
        if (a > b) std::swap(a, b);
        SchmidtVector s(a, b - a, 1.0 - b);
        std::vector<cplx> amp(9, 0.0);
        const auto l = s.as_array();
        for (int i = 0; i < 3; ++i) amp[i * 3 + i] = std::sqrt(l[i]);
        auto numeric = eigvals_hermitian(joint.apply(pure_density(amp)));
        auto closed = wh3_pair_spectrum(s).sorted_descending();
        for (int i = 0; i < 9; ++i) {
            worst = std::max(worst, std::abs(numeric[i] - closed[i]));
            if (std::abs(numeric[i] - closed[i]) > 1e-7) ok = false;
        }
    }
    std::printf("       worst closed-vs-numeric deviation: %.3e\n", worst);
    report(3, "closed form matches numeric output, 200 seeds, 1e-7", ok && t.elapsed() < 10.0,
           t.elapsed());
}

// 4. closed-form certificates: power:5 and kink:0.30 non-additive, power:2 not
void criterion_4() {
    Timer t;
    CertReport p5 = exhw_certificate(ConvexFn::power(5));
    CertReport p2 = exhw_certificate(ConvexFn::power(2));
    CertReport k3 = exhw_certificate(ConvexFn::kink(0.30));
    bool ok = p5.non_additive && std::abs(p5.lhs - 4.147376543209875e-3) < 1e-12 &&
              std::abs(p5.rhs - 3.90625e-3) < 1e-12;
    ok = ok && !p2.non_additive && std::abs(p2.lhs - 1.0 / 6) < 1e-12 &&
         std::abs(p2.rhs - 0.25) < 1e-12;
    ok = ok && k3.non_additive;
    report(4, "certificates: power:5 and kink:0.30 yes, power:2 no", ok && t.elapsed() < 0.01,
           t.elapsed());
}

// 5. operator convex family suite over 16 lambdas in (-0.99, 0], < 30 s
void criterion_5() {
    Timer t;
    OptimizerConfig cfg;
    SuiteReport r = operator_convex_suite(default_lambda_grid(), cfg);
    bool ok = r.passed && r.entries.size() == 16;
    for (const SuiteEntry& e : r.entries)
        ok = ok && e.lambda > -0.99 && e.lambda <= 0.0 && e.vertex_distance <= 1e-5 &&
             std::abs(e.gap) <= 1e-8;
    report(5, "operator convex family: vertex maxima, zero gap, monotone", ok && t.elapsed() < 30.0,
           t.elapsed());
}

// 6. identity pairs additive for every built-in f and both partner channels
void criterion_6() {
    Timer t;
    OptimizerConfig cfg;  // 64 restarts
    const std::vector<ChannelPair> pairs{
        {Channel::werner_holevo(3), Channel::identity(3)},
        {Channel::depolarize(Mat::diag({1.0 / 3, 1.0 / 3, 1.0 / 3})), Channel::identity(3)}};
    bool ok = true;
    for (const ChannelPair& pair : pairs)
        for (const ConvexFn& f : builtin_function_library()) {
            GapReport r = additivity_gap(f, pair, cfg);
            if (!(r.gap <= 1e-7)) {
                std::printf("       gap %.3e for %s on %s\n", r.gap, f.spec().c_str(),
                            pair.spec().c_str());
                ok = false;
            }
        }
    report(6, "identity pairs additive for all built-ins, gap <= 1e-7", ok && t.elapsed() < 120.0,
           t.elapsed());
}

// 7. kink scan: non-additive on (1/4, 1/3), gamma >= 1/3, Lambda = 1/3
void criterion_7() {
    Timer t;
    OptimizerConfig cfg;
    KinkScanReport r = kink_scan(default_kink_grid(), wh3_pair(), cfg);
    bool ok = r.gamma_lower_bound >= 1.0 / 3 - 1e-12 &&
              std::abs(r.lambda_max - 1.0 / 3) <= 1e-6 && r.lambda_entangled;
    for (const KinkScanEntry& e : r.grid) {
        if (e.x0 > 0.25 + 1e-9 && e.x0 < 1.0 / 3 - 1e-9 && !e.non_additive) ok = false;
        if (e.x0 > 1.0 / 3 + 1e-9 && e.non_additive) ok = false;
    }
    report(7, "kink scan: gamma >= 1/3 and Lambda = 1/3 certified", ok && t.elapsed() < 120.0,
           t.elapsed());
}

// 8. single-channel bound with the f(0) correction term, 1e-7
void criterion_8() {
    Timer t;
    OptimizerConfig cfg;
    bool ok = true;
    for (const char* spec : {"power:2", "power:5", "xlogx"})
        ok = ok && single_channel_bound_check(parse_function_spec(spec), wh3_pair(), cfg).holds;
    report(8, "single-channel bound holds for power:2, power:5, xlogx", ok && t.elapsed() < 60.0,
           t.elapsed());
}

// 9. mu-transform spectral identity on 100 random triples, 1e-9, < 5 s
void criterion_9() {
    Timer t;
    const std::vector<std::vector<double>> mus{{0.5, 0.5}, {0.7, 0.2, 0.1}, {1.0}};
    const std::vector<ConvexFn> fns{ConvexFn::power(2), ConvexFn::xlogx(), ConvexFn::kink(0.2)};
    bool ok = true;
    int trials_total = 0;
    for (size_t i = 0; i < mus.size(); ++i)
        for (size_t j = 0; j < fns.size(); ++j) {
            TensorCheckReport r = tensor_structure_check(fns[j], mus[i], 12, 9100 + 10 * i + j);
            trials_total += r.trials;
            ok = ok && r.passed && r.worst_diff <= 1e-9;
        }
    ok = ok && trials_total >= 100;
    report(9, "mu-transform identity on 100+ random triples, 1e-9", ok && t.elapsed() < 5.0,
           t.elapsed());
}

// 10. operator convexity sampler: x^2 and measure functions pass, x^3 fails
void criterion_10() {
    Timer t;
    bool ok = true;
    std::vector<ConvexFn> good{ConvexFn::power(2)};
    good.push_back(ConvexFn::from_measure(-0.25, 1.0, 0.25, DiscreteMeasure({0.0}, {1.0})));
    good.push_back(ConvexFn::from_measure(0.0, 0.0, 1.0, DiscreteMeasure({0.0, -0.5}, {0.5, 0.5})));
    good.push_back(
        ConvexFn::from_measure(0.1, -0.2, 2.0, DiscreteMeasure({-0.9, -0.3}, {0.25, 0.75})));
    for (const ConvexFn& f : good)
        for (int dim : {2, 3}) ok = ok && operator_convexity_test(f, dim, 500, 42).passed;
    OpConvexReport bad = operator_convexity_test(ConvexFn::power(3), 2, 500, 42);
    ok = ok && !bad.passed && bad.worst_violation < -1e-6 && bad.witness_a.rows() == 2;
    report(10, "operator convexity: x^2 and measures pass, x^3 fails", ok && t.elapsed() < 30.0,
           t.elapsed());
}

// 11. scope statement: results cover the dimension-3 named pair only
void criterion_11() {
    Timer t;
    std::printf(
        "       scope: non-additivity reproduced for the d=3 named channel pair and the\n"
        "       closed-form/search routes above; arbitrary channels and dimensions are\n"
        "       covered by the property suites, not by exhaustive search.\n");
    report(11, "scope statement recorded", true, t.elapsed());
}

}  // namespace

int main() {
    criterion_1();
    criterion_2();
    criterion_3();
    criterion_4();
    criterion_5();
    criterion_6();
    criterion_7();
    criterion_8();
    criterion_9();
    criterion_10();
    criterion_11();
    std::printf("%d of 11 criteria passed\n", 11 - g_failures);
    return g_failures == 0 ? 0 : 1;
}
