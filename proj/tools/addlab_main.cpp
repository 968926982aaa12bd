// addlab: additivity laboratory for convex trace functions on channel pairs.
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "addlab/channel.hpp"
#include "addlab/convex.hpp"
#include "addlab/experiments.hpp"
#include "addlab/optimize.hpp"
#include "addlab/report_json.hpp"
#include "addlab/wh3.hpp"

namespace {

using namespace addlab;

std::vector<double> parse_double_list(const std::string& s) {
    std::vector<double> out;
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, ',')) out.push_back(std::stod(item));
    return out;
}

ChannelPair parse_pair(const std::string& s) {
    auto comma = s.find(',');
    if (comma == std::string::npos)
        throw CLI::ValidationError("--pair", "expected two channel specs separated by a comma");
    return ChannelPair{parse_channel_spec(s.substr(0, comma)), parse_channel_spec(s.substr(comma + 1))};
}

void emit(const std::string& text, const std::string& out_path) {
    if (out_path.empty() || out_path == "-") {
        std::cout << text << "\n";
        return;
    }
    std::ofstream f(out_path);
    if (!f) throw std::runtime_error("cannot write " + out_path);
    f << text << "\n";
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"additivity laboratory for convex trace functions on quantum channel pairs"};
    app.require_subcommand(1);
    app.fallthrough();

    OptimizerConfig cfg;
    std::string out_path;
    std::string format = "json";
    app.add_option("--out", out_path, "output file (default: stdout)")->capture_default_str();
    app.add_option("--format", format, "json|csv")->check(CLI::IsMember({"json", "csv"}));
    app.add_option("--seed", cfg.seed, "RNG seed")->capture_default_str();
    app.add_option("--restarts", cfg.restarts, "optimizer restarts")->capture_default_str();
    app.add_option("--iters", cfg.max_iters, "max iterations per restart")->capture_default_str();
    app.add_option("--tol", cfg.tol, "convergence tolerance")->capture_default_str();
    app.add_option("--grid", cfg.simplex_grid, "simplex grid points per edge")->capture_default_str();
    app.add_option("--threads", cfg.threads, "restart concurrency (0 = auto/ADDLAB_THREADS)")
        ->capture_default_str();

    // spectrum
    auto* sp = app.add_subcommand("spectrum", "closed-form WH3 pair output spectrum");
    std::string schmidt_arg = "1,0,0";
    sp->add_option("--schmidt", schmidt_arg, "Schmidt coefficients l1,l2,l3")->required();

    // optimize
    auto* opt = app.add_subcommand("optimize", "maximize a trace objective");
    std::string pair_arg = "wh:3,wh:3", fn_arg = "power:2", mode = "entangled";
    opt->add_option("--pair", pair_arg, "channel pair spec");
    opt->add_option("--fn", fn_arg, "function spec");
    opt->add_option("--mode", mode, "product|entangled|schmidt|maxeig")
        ->check(CLI::IsMember({"product", "entangled", "schmidt", "maxeig"}));

    // gap
    auto* gp = app.add_subcommand("gap", "additivity gap report");
    std::string gp_pair = "wh:3,wh:3", gp_fn = "power:5";
    gp->add_option("--pair", gp_pair, "channel pair spec");
    gp->add_option("--fn", gp_fn, "function spec")->required();

    // certify
    auto* ct = app.add_subcommand("certify", "closed-form WH3 non-additivity certificate");
    std::string ct_fn;
    ct->add_option("--fn", ct_fn, "function spec")->required();

    // kink-scan
    auto* ks = app.add_subcommand("kink-scan", "scan kink locations for non-additivity");
    std::string ks_pair = "wh:3,wh:3", ks_grid;
    ks->add_option("--pair", ks_pair, "channel pair spec");
    ks->add_option("--x0-grid", ks_grid, "comma-separated kink locations (default: 29 on [0.05,0.75])");

    // suite
    auto* su = app.add_subcommand("suite", "operator convex family suite on the WH3 pair");
    std::string su_grid;
    su->add_option("--lambda-grid", su_grid, "comma-separated lambdas in (-1,0]");

    // tensor-check
    auto* tc = app.add_subcommand("tensor-check", "mu-transform spectral identity check");
    std::string tc_fn = "power:2", tc_mu = "0.5,0.5";
    int tc_trials = 100;
    tc->add_option("--fn", tc_fn, "function spec");
    tc->add_option("--mu", tc_mu, "probability vector");
    tc->add_option("--trials", tc_trials, "number of sampled states")->capture_default_str();

    // convexity
    auto* cv = app.add_subcommand("convexity", "sampled operator convexity test");
    std::string cv_fn = "power:2";
    int cv_dim = 2, cv_samples = 500;
    cv->add_option("--fn", cv_fn, "function spec");
    cv->add_option("--dim", cv_dim, "matrix dimension")->capture_default_str();
    cv->add_option("--samples", cv_samples, "sample count")->capture_default_str();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        std::cerr << e.what() << "\n" << app.help();
        return 1;
    }

    try {
        if (*sp) {
            auto l = parse_double_list(schmidt_arg);
            if (l.size() != 3) throw std::invalid_argument("--schmidt needs three values");
            WH3Spectrum w = wh3_pair_spectrum(SchmidtVector(l[0], l[1], l[2]));
            emit(format == "csv" ? spectrum_to_csv(w) : spectrum_to_json(w), out_path);
        } else if (*opt) {
            ChannelPair pair = parse_pair(pair_arg);
            ConvexFn f = parse_function_spec(fn_arg);
            OptResult r;
            if (mode == "product")
                r = max_trace_product(f, pair, cfg);
            else if (mode == "entangled")
                r = max_trace_entangled(f, pair, cfg);
            else if (mode == "maxeig")
                r = max_output_eigenvalue(pair, cfg);
            else {
                if (!pair.is_wh3_pair())
                    throw std::invalid_argument("--mode schmidt requires the wh:3,wh:3 pair");
                r = max_trace_schmidt_wh3(f, cfg);
            }
            emit(to_json(r), out_path);
            if (!r.converged && !r.exact) return 2;
        } else if (*gp) {
            GapReport r = additivity_gap(parse_function_spec(gp_fn), parse_pair(gp_pair), cfg);
            emit(to_json(r), out_path);
            if (!r.search_converged) return 2;
        } else if (*ct) {
            emit(to_json(exhw_certificate(parse_function_spec(ct_fn))), out_path);
        } else if (*ks) {
            auto grid = ks_grid.empty() ? default_kink_grid() : parse_double_list(ks_grid);
            KinkScanReport r = kink_scan(grid, parse_pair(ks_pair), cfg);
            emit(format == "csv" ? kink_scan_to_csv(r) : to_json(r), out_path);
        } else if (*su) {
            auto grid = su_grid.empty() ? default_lambda_grid() : parse_double_list(su_grid);
            SuiteReport r = operator_convex_suite(grid, cfg);
            emit(format == "csv" ? suite_to_csv(r) : to_json(r), out_path);
        } else if (*tc) {
            TensorCheckReport r = tensor_structure_check(parse_function_spec(tc_fn),
                                                         parse_double_list(tc_mu), tc_trials,
                                                         cfg.seed);
            emit(to_json(r), out_path);
        } else if (*cv) {
            OpConvexReport r =
                operator_convexity_test(parse_function_spec(cv_fn), cv_dim, cv_samples, cfg.seed);
            emit(to_json(r), out_path);
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
