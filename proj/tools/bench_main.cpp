// Compares the serial reference path (--threads 1) against the parallel
// restart/grid loops and verifies the results agree bitwise.
#include <chrono>
#include <cstdio>
#include <cstring>

#include "addlab/channel.hpp"
#include "addlab/convex.hpp"
#include "addlab/optimize.hpp"

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) {
    return std::chrono::duration<double>(Clock::now() - t0).count();
}

template <typename F>
void bench(const char* name, F&& run) {
    addlab::OptimizerConfig serial;
    serial.threads = 1;
    addlab::OptimizerConfig parallel;
    parallel.threads = 0;

    auto t0 = Clock::now();
    addlab::OptResult a = run(serial);
    const double ts = seconds_since(t0);

    t0 = Clock::now();
    addlab::OptResult b = run(parallel);
    const double tp = seconds_since(t0);

    const bool same = std::memcmp(&a.value, &b.value, sizeof(double)) == 0;
    std::printf("%-28s serial %7.3fs  parallel %7.3fs  speedup %5.2fx  identical=%s\n", name, ts,
                tp, tp > 0 ? ts / tp : 0.0, same ? "yes" : "NO");
}

}  // namespace

int main() {
    using namespace addlab;
    const ChannelPair wh3{Channel::werner_holevo(3), Channel::werner_holevo(3)};
    const ConvexFn p5 = ConvexFn::power(5);
    const ConvexFn xl = ConvexFn::xlogx();

    bench("simplex scan power:5", [&](const OptimizerConfig& cfg) {
        OptimizerConfig c = cfg;
        c.simplex_grid = 600;
        return max_trace_schmidt_wh3(p5, c);
    });
    bench("entangled search xlogx", [&](const OptimizerConfig& cfg) {
        OptimizerConfig c = cfg;
        c.restarts = 32;
        return max_trace_entangled(xl, wh3, c);
    });
    bench("max output eigenvalue", [&](const OptimizerConfig& cfg) {
        OptimizerConfig c = cfg;
        c.simplex_grid = 600;
        return max_output_eigenvalue(wh3, c);
    });
    return 0;
}
