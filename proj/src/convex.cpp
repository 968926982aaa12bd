#include "addlab/convex.hpp"

#include <cmath>
#include <memory>
#include <sstream>

#include "addlab/eig.hpp"
#include "addlab/io.hpp"
#include "addlab/rng.hpp"

namespace addlab {

namespace {

constexpr double kZeroThreshold = 1e-9;  // eigenvalue counts as 0 / 1 within this

double flambda_value(double lambda, double x) {
    const double u = 2.0 * x - 1.0;
    return u * u / (1.0 - lambda * u);
}

double flambda_derivative(double lambda, double x) {
    const double u = 2.0 * x - 1.0;
    const double den = 1.0 - lambda * u;
    return 2.0 * (2.0 * u - lambda * u * u) / (den * den);
}

}  // namespace

DiscreteMeasure::DiscreteMeasure(std::vector<double> n, std::vector<double> w)
    : nodes(std::move(n)), weights(std::move(w)) {
    if (nodes.size() != weights.size() || nodes.empty())
        throw std::invalid_argument("DiscreteMeasure: nodes/weights mismatch");
    double s = 0;
    for (double x : nodes)
        if (!(x > -1.0 && x <= 0.0))
            throw std::invalid_argument("DiscreteMeasure: node outside (-1, 0]");
    for (double x : weights) {
        if (x < 0) throw std::invalid_argument("DiscreteMeasure: negative weight");
        s += x;
    }
    if (std::abs(s - 1.0) > 1e-12)
        throw std::invalid_argument("DiscreteMeasure: weights must sum to 1");
}

ConvexFn::ConvexFn(std::string spec, std::function<double(double)> fn, double f0, bool diff0,
                   double df0, bool check_convexity)
    : spec_(std::move(spec)), fn_(std::move(fn)), f0_(f0), diff0_(diff0), df0_(df0) {
    if (!check_convexity) return;
    constexpr int n = 101;
    double g[n];
    for (int i = 0; i < n; ++i) g[i] = fn_(i / 100.0);
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
            const double mid = fn_((i + j) / 200.0);
            if (mid > 0.5 * (g[i] + g[j]) + 1e-12)
                throw std::invalid_argument(spec_ + ": midpoint convexity violated on grid");
        }
}

double ConvexFn::operator()(double x) const {
    if (x < -1e-12 || x > 1.0 + 1e-12)
        throw std::domain_error(spec_ + ": argument outside [0,1]");
    return fn_(std::min(1.0, std::max(0.0, x)));
}

ConvexFn ConvexFn::affine(double b, double c) {
    std::ostringstream s;
    s << "affine:" << b << "," << c;
    return ConvexFn(s.str(), [b, c](double x) { return b * x + c; }, c, true, b);
}

ConvexFn ConvexFn::power(double p) {
    if (p < 1.0) throw std::invalid_argument("power: p must be >= 1");
    std::ostringstream s;
    s << "power:" << p;
    return ConvexFn(s.str(), [p](double x) { return std::pow(x, p); }, 0.0, true,
                    p == 1.0 ? 1.0 : 0.0);
}

ConvexFn ConvexFn::neg_power(double p) {
    if (!(p > 0.0 && p < 1.0)) throw std::invalid_argument("neg_power: p must be in (0,1)");
    std::ostringstream s;
    s << "negpower:" << p;
    return ConvexFn(s.str(), [p](double x) { return -std::pow(x, p); }, 0.0, false, 0.0);
}

ConvexFn ConvexFn::xlogx() {
    return ConvexFn("xlogx", [](double x) { return x > 0 ? x * std::log(x) : 0.0; }, 0.0, false,
                    0.0);
}

ConvexFn ConvexFn::xplogx(double p) {
    if (!(p >= 0.5 && p <= 1.0)) throw std::invalid_argument("xplogx: p must be in [1/2, 1]");
    std::ostringstream s;
    s << "xplogx:" << p;
    return ConvexFn(s.str(), [p](double x) { return x > 0 ? std::pow(x, p) * std::log(x) : 0.0; },
                    0.0, false, 0.0);
}

ConvexFn ConvexFn::kink(double x0) {
    if (!(x0 >= 0.0 && x0 <= 1.0)) throw std::invalid_argument("kink: x0 must be in [0,1]");
    std::ostringstream s;
    s << "kink:" << x0;
    return ConvexFn(s.str(), [x0](double x) { return std::max(0.0, x - x0); }, 0.0, true,
                    x0 > 0 ? 0.0 : 1.0);
}

ConvexFn ConvexFn::flambda(double lambda) {
    if (!(lambda > -1.0 && lambda <= 0.0))
        throw std::invalid_argument("flambda: lambda must be in (-1, 0]");
    std::ostringstream s;
    s << "flambda:" << lambda;
    return ConvexFn(s.str(), [lambda](double x) { return flambda_value(lambda, x); },
                    flambda_value(lambda, 0.0), true, flambda_derivative(lambda, 0.0));
}

ConvexFn ConvexFn::delta0() {
    return ConvexFn("delta0", [](double x) { return x <= kZeroThreshold ? 1.0 : 0.0; }, 1.0, false,
                    0.0, /*check_convexity=*/false);
}

ConvexFn ConvexFn::delta1() {
    return ConvexFn("delta1", [](double x) { return x >= 1.0 - kZeroThreshold ? 1.0 : 0.0; }, 0.0,
                    true, 0.0, /*check_convexity=*/false);
}

ConvexFn ConvexFn::from_measure(double alpha, double beta, double gamma,
                                const DiscreteMeasure& mu) {
    if (gamma < 0) throw std::invalid_argument("from_measure: gamma must be >= 0");
    auto m = std::make_shared<DiscreteMeasure>(mu);
    auto fn = [alpha, beta, gamma, m](double x) {
        double s = 0;
        for (size_t j = 0; j < m->nodes.size(); ++j)
            s += m->weights[j] * flambda_value(m->nodes[j], x);
        return alpha + beta * x + gamma * s;
    };
    double df0 = beta;
    for (size_t j = 0; j < mu.nodes.size(); ++j)
        df0 += gamma * mu.weights[j] * flambda_derivative(mu.nodes[j], 0.0);
    std::ostringstream s;
    s << "measure[" << mu.nodes.size() << "]:" << alpha << "," << beta << "," << gamma;
    return ConvexFn(s.str(), fn, fn(0.0), true, df0);
}

ConvexFn ConvexFn::normalize_affine(const ConvexFn& f, double a, double b, double c) {
    if (a <= 0) throw std::invalid_argument("normalize_affine: a must be > 0");
    auto inner = f.fn_;
    std::ostringstream s;
    s << "affinely-scaled(" << f.spec_ << ";" << a << "," << b << "," << c << ")";
    return ConvexFn(s.str(), [inner, a, b, c](double x) { return a * inner(x) + b * x + c; },
                    a * f.f0_ + c, f.diff0_, a * f.df0_ + b, /*check_convexity=*/false);
}

ConvexFn ConvexFn::dilate(const ConvexFn& f, int n) {
    if (n < 1) throw std::invalid_argument("dilate: n must be >= 1");
    auto inner = f.fn_;
    std::ostringstream s;
    s << "dilate(" << f.spec_ << ";" << n << ")";
    return ConvexFn(s.str(), [inner, n](double x) { return inner(x / n); }, f.f0_, f.diff0_,
                    f.df0_ / n, /*check_convexity=*/false);
}

ConvexFn ConvexFn::mu_transform(const ConvexFn& f, const std::vector<double>& mu) {
    double sum = 0;
    for (double m : mu) {
        if (m < 0) throw std::invalid_argument("mu_transform: negative weight");
        sum += m;
    }
    if (sum > 1.0 + 1e-12) throw std::invalid_argument("mu_transform: weights exceed 1");
    if (sum < 1.0 - 1e-12 && !f.diff0_)
        throw std::invalid_argument(
            "mu_transform: sub-probability weights require differentiability at 0");
    auto inner = f.fn_;
    auto weights = mu;
    std::ostringstream s;
    s << "mu-transform(" << f.spec_ << ";" << mu.size() << ")";
    auto fn = [inner, weights](double x) {
        double acc = 0;
        for (double m : weights) acc += inner(m * x);
        return acc;
    };
    double df0 = 0;
    for (double m : mu) df0 += m * f.df0_;
    return ConvexFn(s.str(), fn, mu.size() * f.f0_, f.diff0_, df0, /*check_convexity=*/false);
}

double trace_apply(const ConvexFn& f, const Mat& sigma) {
    require_hermitian(sigma, 1e-10, "trace_apply input");
    double s = 0;
    for (double lam : eigvals_hermitian(sigma)) s += f(clamp_eigenvalue(lam));
    return s;
}

OpConvexReport operator_convexity_test(const ConvexFn& f, int dim, int samples, uint64_t seed) {
    if (dim < 2) throw std::invalid_argument("operator_convexity_test: dim must be >= 2");
    OpConvexReport rep{true, 0.0, Mat(dim, dim), Mat(dim, dim)};
    auto fn = [&f](double x) { return f(x); };
    for (int s = 0; s < samples; ++s) {
        auto gen = rng_for(seed, s);
        Mat a = random_hermitian_01(dim, gen);
        Mat b = random_hermitian_01(dim, gen);
        Mat mid = (a + b) * cplx(0.5, 0.0);
        Mat diff = (spectral_apply(fn, a) + spectral_apply(fn, b)) * cplx(0.5, 0.0) -
                   spectral_apply(fn, mid);
        auto ev = eigvals_hermitian(diff);
        const double min_ev = ev.back();
        if (min_ev < rep.worst_violation) {
            rep.worst_violation = min_ev;
            rep.witness_a = a;
            rep.witness_b = b;
        }
    }
    rep.passed = rep.worst_violation >= -1e-8;
    return rep;
}

ConvexFn parse_function_spec(const std::string& spec) {
    auto colon = spec.find(':');
    const std::string name = colon == std::string::npos ? spec : spec.substr(0, colon);
    const std::string arg = colon == std::string::npos ? "" : spec.substr(colon + 1);
    if (name == "xlogx") return ConvexFn::xlogx();
    if (name == "delta0") return ConvexFn::delta0();
    if (name == "delta1") return ConvexFn::delta1();
    if (name == "power") return ConvexFn::power(std::stod(arg));
    if (name == "negpower") return ConvexFn::neg_power(std::stod(arg));
    if (name == "xplogx") return ConvexFn::xplogx(std::stod(arg));
    if (name == "kink") return ConvexFn::kink(std::stod(arg));
    if (name == "flambda") return ConvexFn::flambda(std::stod(arg));
    if (name == "affine") {
        auto comma = arg.find(',');
        if (comma == std::string::npos) throw std::invalid_argument("affine spec needs b,c");
        return ConvexFn::affine(std::stod(arg.substr(0, comma)), std::stod(arg.substr(comma + 1)));
    }
    if (name == "measure") {
        if (arg.empty() || arg[0] != '@')
            throw std::invalid_argument("measure spec needs @file.json");
        MeasureFile m = load_measure_file(arg.substr(1));
        return ConvexFn::from_measure(m.alpha, m.beta, m.gamma, DiscreteMeasure(m.nodes, m.weights));
    }
    throw std::invalid_argument("unknown function spec: " + spec);
}

std::vector<ConvexFn> builtin_function_library() {
    return {
        ConvexFn::affine(1.0, 0.0),
        ConvexFn::power(2.0),
        ConvexFn::power(5.0),
        ConvexFn::neg_power(0.5),
        ConvexFn::xlogx(),
        ConvexFn::xplogx(0.75),
        ConvexFn::kink(0.3),
        ConvexFn::flambda(-0.5),
        ConvexFn::delta0(),
        ConvexFn::delta1(),
    };
}

}  // namespace addlab
