#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

#include "addlab/channel.hpp"
#include "addlab/convex.hpp"
#include "addlab/matrix.hpp"
#include "addlab/wh3.hpp"

namespace addlab {

struct PureState {
    int dim = 0;
    std::vector<cplx> amplitudes;  // unit 2-norm
    Mat density() const;
};

struct OptimizerConfig {
    int restarts = 64;
    int max_iters = 2000;
    double tol = 1e-10;
    uint64_t seed = 0;
    int simplex_grid = 200;  // points per edge for Schmidt-simplex scans
    int threads = 0;         // 0 = auto (ADDLAB_THREADS / OpenMP default), 1 = serial reference
};

struct OptResult {
    double value = 0;
    PureState argmax;
    std::optional<SchmidtVector> schmidt;
    int restarts_agreeing = 0;
    bool converged = false;
    bool exact = false;  // value obtained by a complete/closed-form route, not local search
};

struct SchmidtDecomp {
    std::vector<double> coefficients;  // descending, squares sum to 1
    Mat left;                          // columns: left orthonormal vectors
    Mat right;                         // columns: right orthonormal vectors
};

// psi = sum_i c_i |iL> (x) |iR>, up to global phase.
SchmidtDecomp schmidt_decompose(const PureState& psi, int d1, int d2);

// Derivative-free simplex maximization; used by every search below.
struct NelderMeadResult {
    std::vector<double> x;
    double value;
    bool converged;
    int iterations;
};
NelderMeadResult nelder_mead_max(const std::function<double(const std::vector<double>&)>& f,
                                 const std::vector<double>& x0, double step, int max_iters,
                                 double tol);

// Maximum of Tr f(Phi(psi)) over pure inputs of a single channel.
OptResult max_trace_pure(const ConvexFn& f, const Channel& ch, const OptimizerConfig& cfg);

// Maximum over product pure inputs psi1 (x) psi2 (block coordinate ascent;
// short-circuits to one exact evaluation for covariance-verified pairs).
OptResult max_trace_product(const ConvexFn& f, const ChannelPair& pair,
                            const OptimizerConfig& cfg);

// Maximum over all pure inputs of the joint space.
OptResult max_trace_entangled(const ConvexFn& f, const ChannelPair& pair,
                              const OptimizerConfig& cfg);

// Covariance-reduced maximum for the named WH3 pair: grid scan over the
// Schmidt 2-simplex plus local refinement.
OptResult max_trace_schmidt_wh3(const ConvexFn& f, const OptimizerConfig& cfg);

// Maximum over pure joint inputs of the largest output eigenvalue.
OptResult max_output_eigenvalue(const ChannelPair& pair, const OptimizerConfig& cfg);

// Thread count used by the parallel restart/grid loops (honors
// ADDLAB_THREADS when cfg.threads == 0).
int resolve_threads(const OptimizerConfig& cfg);

}  // namespace addlab
