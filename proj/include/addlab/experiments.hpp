#pragma once

#include <optional>
#include <string>
#include <vector>

#include "addlab/channel.hpp"
#include "addlab/convex.hpp"
#include "addlab/optimize.hpp"

namespace addlab {

enum class Verdict { NonAdditiveCertified, AdditiveUpToSearch, NumericalEvidenceOnly };

std::string to_string(Verdict v);

struct GapReport {
    std::string function_spec;
    std::string pair_spec;
    double product_max;
    double entangled_max;
    double gap;  // entangled_max - product_max
    std::optional<SchmidtVector> witness_schmidt;
    Verdict verdict;
    bool search_converged;
};

// Runs the product and entangled searches (plus the covariance-reduced
// simplex scan for the named WH3 pair) and assembles the verdict. A positive
// gap is certified only when the product maximum is exact by covariance.
GapReport additivity_gap(const ConvexFn& f, const ChannelPair& pair, const OptimizerConfig& cfg);

struct CertReport {
    double lhs;  // f(1/3) + 8 f(1/12)
    double rhs;  // 5 f(0) + 4 f(1/4)
    bool non_additive;
};

// Closed-form non-additivity certificate for the WH3 pair.
CertReport exhw_certificate(const ConvexFn& f);

struct TensorCheckReport {
    int trials;
    int violations;
    double worst_diff;
    bool passed;
};

// |Tr (mu-transform f)(sigma) - Tr f(sigma (x) diag(mu))| <= 1e-9 on sampled
// density matrices.
TensorCheckReport tensor_structure_check(const ConvexFn& f, const std::vector<double>& mu,
                                         int trials, uint64_t seed);

struct SuiteEntry {
    double lambda;
    double scan_value;
    double product_value;
    double gap;
    SchmidtVector argmax{1, 0, 0};
    double vertex_distance;
    bool vertex_ok;        // argmax within 1e-5 of a simplex vertex
    bool gap_ok;           // |gap| <= 1e-8
    bool monotonicity_ok;  // theta-profile nondecreasing (constant for lambda = 0)
    double worst_monotonicity_violation;
};

struct SuiteReport {
    std::vector<SuiteEntry> entries;
    bool passed;
};

// Operator convex family f_lambda over a lambda grid in (-1, 0]: checks the
// vertex maximizer, zero gap to the product value, and theta-monotonicity of
// the G-part on a 1000-point grid of [0, pi].
SuiteReport operator_convex_suite(const std::vector<double>& lambda_grid,
                                  const OptimizerConfig& cfg);

struct KinkScanEntry {
    double x0;
    double entangled_value;
    double product_value;
    bool non_additive;
};

struct KinkScanReport {
    std::vector<KinkScanEntry> grid;
    double gamma_lower_bound;  // in [1/3, 1]
    double lambda_max;         // largest output eigenvalue over pure joint inputs
    bool lambda_entangled;     // lambda_max exceeds the product-input value
};

KinkScanReport kink_scan(const std::vector<double>& x0_grid, const ChannelPair& pair,
                         const OptimizerConfig& cfg);

// Default grids used by the CLI.
std::vector<double> default_kink_grid();    // 29 points on [0.05, 0.75]
std::vector<double> default_lambda_grid();  // 16 points on (-0.99, 0]

struct BoundReport {
    double pair_max;
    double bound_left;   // single-channel max + d_left (d_right - 1) f(0)
    double bound_right;  // symmetric
    bool holds;
};

BoundReport single_channel_bound_check(const ConvexFn& f, const ChannelPair& pair,
                                       const OptimizerConfig& cfg);

}  // namespace addlab
