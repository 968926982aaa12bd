#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "addlab/matrix.hpp"

namespace addlab {

// Point masses on (-1, 0], weights normalized to 1. Discretization of the
// integral representation underlying the operator convex family.
struct DiscreteMeasure {
    std::vector<double> nodes;
    std::vector<double> weights;
    DiscreteMeasure(std::vector<double> nodes, std::vector<double> weights);
};

// Immutable evaluable convex function on [0,1] with the metadata the
// experiments need (behaviour at 0).
class ConvexFn {
public:
    double operator()(double x) const;

    const std::string& spec() const { return spec_; }
    double value_at_0() const { return f0_; }
    bool differentiable_at_0() const { return diff0_; }
    double derivative_at_0() const { return df0_; }

    // --- base library ---
    static ConvexFn affine(double b, double c);          // bx + c
    static ConvexFn power(double p);                     // x^p, p >= 1
    static ConvexFn neg_power(double p);                 // -x^p, 0 < p < 1
    static ConvexFn xlogx();                             // x log x, 0 log 0 = 0
    static ConvexFn xplogx(double p);                    // x^p log x, 1/2 <= p <= 1
    static ConvexFn kink(double x0);                     // max(0, x - x0)
    static ConvexFn flambda(double lambda);              // (2x-1)^2 / (1 - lambda(2x-1)), lambda in (-1, 0]
    static ConvexFn delta0();                            // 1 at 0, else 0
    static ConvexFn delta1();                            // 1 at 1, else 0
    static ConvexFn from_measure(double alpha, double beta, double gamma,
                                 const DiscreteMeasure& mu);

    // --- transforms ---
    // a f(x) + b x + c, a > 0; additivity-equivalent to f.
    static ConvexFn normalize_affine(const ConvexFn& f, double a, double b, double c);
    // x -> f(x/n)
    static ConvexFn dilate(const ConvexFn& f, int n);
    // x -> sum_i f(mu_i x); sub-probability mu requires f differentiable at 0.
    static ConvexFn mu_transform(const ConvexFn& f, const std::vector<double>& mu);

private:
    ConvexFn(std::string spec, std::function<double(double)> fn, double f0, bool diff0,
             double df0, bool check_convexity = true);
    std::string spec_;
    std::function<double(double)> fn_;
    double f0_;
    bool diff0_;
    double df0_;
};

// sum_i f(clamp(lambda_i)) over all eigenvalues of sigma, zeros included.
double trace_apply(const ConvexFn& f, const Mat& sigma);

struct OpConvexReport {
    bool passed;
    double worst_violation;  // most negative eigenvalue observed (0 if none)
    Mat witness_a, witness_b;
};

// Sampled midpoint operator convexity: min eig of (f(A)+f(B))/2 - f((A+B)/2)
// over random Hermitian pairs with spectra in [0,1].
OpConvexReport operator_convexity_test(const ConvexFn& f, int dim, int samples, uint64_t seed);

// "power:5" | "negpower:0.5" | "xlogx" | "xplogx:0.75" | "kink:0.30" |
// "flambda:-0.5" | "affine:b,c" | "delta0" | "delta1" | "measure:@file.json"
ConvexFn parse_function_spec(const std::string& spec);

// The functions exercised by the blanket experiments ("every built-in f").
std::vector<ConvexFn> builtin_function_library();

}  // namespace addlab
