#include "addlab/optimize.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <numeric>
#include <tuple>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "addlab/eig.hpp"
#include "addlab/rng.hpp"

namespace addlab {

Mat PureState::density() const { return pure_density(amplitudes); }

int resolve_threads(const OptimizerConfig& cfg) {
    if (cfg.threads > 0) return cfg.threads;
    if (const char* env = std::getenv("ADDLAB_THREADS")) {
        const int n = std::atoi(env);
        if (n > 0) return n;
    }
#ifdef _OPENMP
    return omp_get_max_threads();
#else
    return 1;
#endif
}

SchmidtDecomp schmidt_decompose(const PureState& psi, int d1, int d2) {
    if (psi.dim != d1 * d2) throw std::invalid_argument("schmidt_decompose: dimension mismatch");
    Mat m(d1, d2);
    for (int i = 0; i < d1; ++i)
        for (int j = 0; j < d2; ++j) m(i, j) = psi.amplitudes[i * d2 + j];
    Mat rho_left = m * m.dagger();
    EigResult e = eig_hermitian(rho_left);
    SchmidtDecomp sd;
    const int r = std::min(d1, d2);
    sd.coefficients.resize(r);
    sd.left = Mat(d1, r);
    sd.right = Mat(d2, r);
    for (int k = 0; k < r; ++k) {
        const double c = std::sqrt(std::max(0.0, e.values[k]));
        sd.coefficients[k] = c;
        for (int i = 0; i < d1; ++i) sd.left(i, k) = e.vectors(i, k);
        if (c > 1e-9) {
            // right vector: conj(M^dagger u_k) / c, so psi = sum c_k uL (x) uR
            for (int j = 0; j < d2; ++j) {
                cplx acc = 0;
                for (int i = 0; i < d1; ++i) acc += std::conj(m(i, j)) * e.vectors(i, k);
                sd.right(j, k) = std::conj(acc) / c;
            }
        } else {
            sd.right(std::min(k, d2 - 1), k) = 1.0;  // arbitrary completion
        }
    }
    return sd;
}

NelderMeadResult nelder_mead_max(const std::function<double(const std::vector<double>&)>& f,
                                 const std::vector<double>& x0, double step, int max_iters,
                                 double tol) {
    const int n = static_cast<int>(x0.size());
    std::vector<std::vector<double>> xs(n + 1, x0);
    std::vector<double> ys(n + 1);
    for (int i = 1; i <= n; ++i) xs[i][i - 1] += step;
    for (int i = 0; i <= n; ++i) ys[i] = f(xs[i]);

    std::vector<int> order(n + 1);
    int iters = 0;
    bool converged = false;
    for (; iters < max_iters; ++iters) {
        std::iota(order.begin(), order.end(), 0);
        std::sort(order.begin(), order.end(), [&](int a, int b) { return ys[a] > ys[b]; });
        const double spread = ys[order[0]] - ys[order[n]];
        if (spread <= tol * (1.0 + std::abs(ys[order[0]]))) {
            converged = true;
            break;
        }
        const int iw = order[n];
        std::vector<double> centroid(n, 0.0);
        for (int k = 0; k < n; ++k)
            for (int j = 0; j < n; ++j) centroid[j] += xs[order[k]][j] / n;

        auto point = [&](double coeff) {
            std::vector<double> p(n);
            for (int j = 0; j < n; ++j) p[j] = centroid[j] + coeff * (centroid[j] - xs[iw][j]);
            return p;
        };
        std::vector<double> xr = point(1.0);
        const double yr = f(xr);
        if (yr > ys[order[0]]) {
            std::vector<double> xe = point(2.0);
            const double ye = f(xe);
            if (ye > yr) {
                xs[iw] = std::move(xe);
                ys[iw] = ye;
            } else {
                xs[iw] = std::move(xr);
                ys[iw] = yr;
            }
            continue;
        }
        if (yr > ys[order[n - 1]]) {
            xs[iw] = std::move(xr);
            ys[iw] = yr;
            continue;
        }
        const bool outside = yr > ys[iw];
        std::vector<double> xc = point(outside ? 0.5 : -0.5);
        const double yc = f(xc);
        if ((outside && yc >= yr) || (!outside && yc > ys[iw])) {
            xs[iw] = std::move(xc);
            ys[iw] = yc;
            continue;
        }
        // shrink toward the best vertex
        for (int k = 1; k <= n; ++k) {
            const int i = order[k];
            for (int j = 0; j < n; ++j) xs[i][j] = 0.5 * (xs[i][j] + xs[order[0]][j]);
            ys[i] = f(xs[i]);
        }
    }
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](int a, int b) { return ys[a] > ys[b]; });
    return NelderMeadResult{xs[order[0]], ys[order[0]], converged, iters};
}

namespace {

std::vector<double> params_from_state(const std::vector<cplx>& amp) {
    std::vector<double> x(2 * amp.size());
    for (size_t i = 0; i < amp.size(); ++i) {
        x[2 * i] = amp[i].real();
        x[2 * i + 1] = amp[i].imag();
    }
    return x;
}

bool state_from_params(const std::vector<double>& x, std::vector<cplx>& amp) {
    const size_t n = x.size() / 2;
    amp.resize(n);
    double nrm = 0;
    for (size_t i = 0; i < n; ++i) {
        amp[i] = cplx(x[2 * i], x[2 * i + 1]);
        nrm += std::norm(amp[i]);
    }
    if (nrm < 1e-16) return false;
    nrm = std::sqrt(nrm);
    for (auto& z : amp) z /= nrm;
    return true;
}

struct RestartOutcome {
    double value = -1e300;
    std::vector<cplx> amp;
    bool converged = false;
};

// Deterministic reduction over restart outcomes: strictly greater value wins,
// first restart index wins ties.
OptResult reduce_restarts(const std::vector<RestartOutcome>& outs, int dim) {
    OptResult r;
    int best = 0;
    for (int i = 1; i < static_cast<int>(outs.size()); ++i)
        if (outs[i].value > outs[best].value) best = i;
    r.value = outs[best].value;
    r.argmax.dim = dim;
    r.argmax.amplitudes = outs[best].amp;
    r.converged = outs[best].converged;
    r.restarts_agreeing = 0;
    for (const auto& o : outs)
        if (o.value >= r.value - 1e-7) ++r.restarts_agreeing;
    return r;
}

template <typename Fn>
std::vector<RestartOutcome> run_restarts(int restarts, int threads, Fn&& body) {
    std::vector<RestartOutcome> outs(restarts);
#ifdef _OPENMP
    if (threads > 1) {
#pragma omp parallel for schedule(dynamic) num_threads(threads)
        for (int r = 0; r < restarts; ++r) outs[r] = body(r);
        return outs;
    }
#endif
    (void)threads;
    for (int r = 0; r < restarts; ++r) outs[r] = body(r);
    return outs;
}

std::optional<SchmidtVector> schmidt_of_argmax(const PureState& psi, int d1, int d2) {
    if (psi.amplitudes.empty() || std::min(d1, d2) > 3) return std::nullopt;
    SchmidtDecomp sd = schmidt_decompose(psi, d1, d2);
    double l[3] = {0, 0, 0};
    double sum = 0;
    for (size_t k = 0; k < sd.coefficients.size() && k < 3; ++k) {
        l[k] = sd.coefficients[k] * sd.coefficients[k];
        sum += l[k];
    }
    if (sum <= 0) return std::nullopt;
    return SchmidtVector(l[0] / sum, l[1] / sum, l[2] / sum);
}

bool pair_is_covariant(const ChannelPair& pair, uint64_t seed) {
    return check_unitary_covariance(pair.left, 8, 8, seed) &&
           check_unitary_covariance(pair.right, 8, 8, seed + 1);
}

PureState basis_state(int dim, int index) {
    PureState s;
    s.dim = dim;
    s.amplitudes.assign(dim, cplx(0, 0));
    s.amplitudes[index] = 1.0;
    return s;
}

}  // namespace

OptResult max_trace_pure(const ConvexFn& f, const Channel& ch, const OptimizerConfig& cfg) {
    const int d = ch.dim_in();
    if (check_unitary_covariance(ch, 8, 8, cfg.seed)) {
        OptResult r;
        r.argmax = basis_state(d, 0);
        r.value = trace_apply(f, ch.apply(r.argmax.density()));
        r.restarts_agreeing = cfg.restarts;
        r.converged = true;
        r.exact = true;
        return r;
    }
    auto objective = [&](const std::vector<double>& x) {
        std::vector<cplx> amp;
        if (!state_from_params(x, amp)) return -1e300;
        return trace_apply(f, ch.apply(pure_density(amp)));
    };
    auto outs = run_restarts(cfg.restarts, resolve_threads(cfg), [&](int r) {
        auto gen = rng_for(cfg.seed, r);
        auto x0 = params_from_state(random_pure_state(d, gen));
        auto nm = nelder_mead_max(objective, x0, 0.3, cfg.max_iters, cfg.tol);
        RestartOutcome o;
        o.value = nm.value;
        o.converged = nm.converged;
        state_from_params(nm.x, o.amp);
        return o;
    });
    return reduce_restarts(outs, d);
}

OptResult max_trace_product(const ConvexFn& f, const ChannelPair& pair,
                            const OptimizerConfig& cfg) {
    const int d1 = pair.left.dim_in(), d2 = pair.right.dim_in();
    if (pair_is_covariant(pair, cfg.seed)) {
        // objective is constant on pure product inputs; one evaluation is exact
        Mat out = kron(pair.left.apply(pure_density(basis_state(d1, 0).amplitudes)),
                       pair.right.apply(pure_density(basis_state(d2, 0).amplitudes)));
        OptResult r;
        r.value = trace_apply(f, out);
        r.argmax = basis_state(d1 * d2, 0);
        r.schmidt = SchmidtVector(1.0, 0.0, 0.0);
        r.restarts_agreeing = cfg.restarts;
        r.converged = true;
        r.exact = true;
        return r;
    }
    auto outs = run_restarts(cfg.restarts, resolve_threads(cfg), [&](int rr) {
        auto gen = rng_for(cfg.seed, rr);
        std::vector<cplx> a1 = random_pure_state(d1, gen);
        std::vector<cplx> a2 = random_pure_state(d2, gen);
        double best = -1e300;
        bool conv = false;
        for (int round = 0; round < 10; ++round) {
            auto obj1 = [&](const std::vector<double>& x) {
                std::vector<cplx> amp;
                if (!state_from_params(x, amp)) return -1e300;
                return trace_apply(f, kron(pair.left.apply(pure_density(amp)),
                                           pair.right.apply(pure_density(a2))));
            };
            auto nm1 = nelder_mead_max(obj1, params_from_state(a1), 0.3, cfg.max_iters, cfg.tol);
            state_from_params(nm1.x, a1);
            auto obj2 = [&](const std::vector<double>& x) {
                std::vector<cplx> amp;
                if (!state_from_params(x, amp)) return -1e300;
                return trace_apply(f, kron(pair.left.apply(pure_density(a1)),
                                           pair.right.apply(pure_density(amp))));
            };
            auto nm2 = nelder_mead_max(obj2, params_from_state(a2), 0.3, cfg.max_iters, cfg.tol);
            state_from_params(nm2.x, a2);
            conv = nm1.converged && nm2.converged;
            if (nm2.value <= best + cfg.tol * (1.0 + std::abs(best))) {
                best = std::max(best, nm2.value);
                break;
            }
            best = nm2.value;
        }
        RestartOutcome o;
        o.value = best;
        o.converged = conv;
        o.amp.resize(d1 * d2);
        for (int i = 0; i < d1; ++i)
            for (int j = 0; j < d2; ++j) o.amp[i * d2 + j] = a1[i] * a2[j];
        return o;
    });
    OptResult r = reduce_restarts(outs, d1 * d2);
    r.schmidt = SchmidtVector(1.0, 0.0, 0.0);
    return r;
}

OptResult max_trace_entangled(const ConvexFn& f, const ChannelPair& pair,
                              const OptimizerConfig& cfg) {
    Channel joint = tensor(pair.left, pair.right);
    const int d = joint.dim_in();
    auto objective = [&](const std::vector<double>& x) {
        std::vector<cplx> amp;
        if (!state_from_params(x, amp)) return -1e300;
        return trace_apply(f, joint.apply(pure_density(amp)));
    };
    auto outs = run_restarts(cfg.restarts, resolve_threads(cfg), [&](int r) {
        auto gen = rng_for(cfg.seed, r);
        auto x0 = params_from_state(random_pure_state(d, gen));
        auto nm = nelder_mead_max(objective, x0, 0.3, cfg.max_iters, cfg.tol);
        RestartOutcome o;
        o.value = nm.value;
        o.converged = nm.converged;
        state_from_params(nm.x, o.amp);
        return o;
    });
    OptResult r = reduce_restarts(outs, d);
    r.schmidt = schmidt_of_argmax(r.argmax, pair.left.dim_in(), pair.right.dim_in());
    return r;
}

namespace {

// Generic scan + refinement over the Schmidt 2-simplex for the WH3 pair.
// objective maps the nine closed-form eigenvalues to the quantity maximized.
OptResult simplex_scan_wh3(const std::function<double(const WH3Spectrum&)>& objective,
                           const OptimizerConfig& cfg) {
    const int n = cfg.simplex_grid;
    auto eval_lambda = [&](double l1, double l2) {
        double l3 = 1.0 - l1 - l2;
        if (l1 < -1e-12 || l2 < -1e-12 || l3 < -1e-12) return -1e300;
        l1 = std::max(0.0, std::min(1.0, l1));
        l2 = std::max(0.0, std::min(1.0, l2 < 1.0 - l1 ? l2 : 1.0 - l1));
        l3 = std::max(0.0, 1.0 - l1 - l2);
        return objective(wh3_pair_spectrum(SchmidtVector(l1, l2, l3)));
    };

    struct RowBest {
        double value = -1e300;
        double l1 = 0, l2 = 0;
    };
    std::vector<RowBest> rows(n + 1);
    const int threads = resolve_threads(cfg);
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic) num_threads(threads) if (threads > 1)
#endif
    for (int i = 0; i <= n; ++i) {
        RowBest rb;
        for (int j = 0; j <= n - i; ++j) {
            const double l1 = static_cast<double>(i) / n;
            const double l2 = static_cast<double>(j) / n;
            const double v = eval_lambda(l1, l2);
            if (v > rb.value) {
                rb.value = v;
                rb.l1 = l1;
                rb.l2 = l2;
            }
        }
        rows[i] = rb;
    }
    // deterministic merge with lexicographic tie-break toward the largest vector
    RowBest best = rows[0];
    for (int i = 1; i <= n; ++i) {
        const RowBest& rb = rows[i];
        if (rb.value > best.value + 1e-12) {
            best = rb;
        } else if (rb.value >= best.value - 1e-12) {
            const double l3b = 1.0 - best.l1 - best.l2, l3r = 1.0 - rb.l1 - rb.l2;
            if (std::tie(rb.l1, rb.l2, l3r) > std::tie(best.l1, best.l2, l3b)) best = rb;
        }
    }

    // Local refinement around the winning grid point. The objective is
    // symmetric under coordinate permutations, so a single simplex can land on
    // three permutation-equivalent points and stall with zero spread; chaining
    // restarts with shrinking incommensurate steps breaks that degeneracy.
    auto nm_obj = [&](const std::vector<double>& x) { return eval_lambda(x[0], x[1]); };
    double rl1 = best.l1, rl2 = best.l2, rvalue = best.value;
    for (double step : {0.5 / n, 0.31 / n, 0.17 / n, 0.07 / n}) {
        auto nm = nelder_mead_max(nm_obj, {rl1, rl2}, step, cfg.max_iters, 1e-14);
        if (nm.value > rvalue) {
            rl1 = std::max(0.0, std::min(1.0, nm.x[0]));
            rl2 = std::max(0.0, std::min(1.0 - rl1, nm.x[1]));
            rvalue = nm.value;
        }
    }
    const double rl3 = std::max(0.0, 1.0 - rl1 - rl2);

    OptResult r;
    r.value = rvalue;
    r.schmidt = SchmidtVector(rl1, rl2, rl3);
    r.argmax.dim = 9;
    r.argmax.amplitudes.assign(9, cplx(0, 0));
    r.argmax.amplitudes[0] = std::sqrt(rl1);
    r.argmax.amplitudes[4] = std::sqrt(rl2);
    r.argmax.amplitudes[8] = std::sqrt(rl3);
    r.restarts_agreeing = cfg.restarts;
    r.converged = true;
    r.exact = true;  // covariance reduction makes the scan complete up to grid resolution
    return r;
}

}  // namespace

OptResult max_trace_schmidt_wh3(const ConvexFn& f, const OptimizerConfig& cfg) {
    return simplex_scan_wh3(
        [&f](const WH3Spectrum& w) {
            double s = 0;
            for (double e : w.e) s += f(e);
            for (double g : w.g) s += f(g);
            return s;
        },
        cfg);
}

OptResult max_output_eigenvalue(const ChannelPair& pair, const OptimizerConfig& cfg) {
    if (pair.is_wh3_pair()) {
        return simplex_scan_wh3(
            [](const WH3Spectrum& w) {
                double m = 0;
                for (double e : w.e) m = std::max(m, e);
                for (double g : w.g) m = std::max(m, g);
                return m;
            },
            cfg);
    }
    Channel joint = tensor(pair.left, pair.right);
    const int d = joint.dim_in();
    auto objective = [&](const std::vector<double>& x) {
        std::vector<cplx> amp;
        if (!state_from_params(x, amp)) return -1e300;
        return eigvals_hermitian(joint.apply(pure_density(amp))).front();
    };
    auto outs = run_restarts(cfg.restarts, resolve_threads(cfg), [&](int r) {
        auto gen = rng_for(cfg.seed, r);
        auto x0 = params_from_state(random_pure_state(d, gen));
        auto nm = nelder_mead_max(objective, x0, 0.3, cfg.max_iters, cfg.tol);
        RestartOutcome o;
        o.value = nm.value;
        o.converged = nm.converged;
        state_from_params(nm.x, o.amp);
        return o;
    });
    OptResult r = reduce_restarts(outs, d);
    r.schmidt = schmidt_of_argmax(r.argmax, pair.left.dim_in(), pair.right.dim_in());
    return r;
}

}  // namespace addlab
