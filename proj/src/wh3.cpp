#include "addlab/wh3.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

namespace addlab {

SchmidtVector::SchmidtVector(double a, double b, double c) : l1(a), l2(b), l3(c) {
    if (l1 < 0 || l2 < 0 || l3 < 0 || l1 > 1 || l2 > 1 || l3 > 1)
        throw std::invalid_argument("SchmidtVector: coefficients must lie in [0,1]");
    if (std::abs(l1 + l2 + l3 - 1.0) > 1e-12)
        throw std::invalid_argument("SchmidtVector: coefficients must sum to 1");
}

std::vector<double> WH3Spectrum::sorted_descending() const {
    std::vector<double> v(e.begin(), e.end());
    v.insert(v.end(), g.begin(), g.end());
    std::sort(v.begin(), v.end(), std::greater<double>());
    return v;
}

double theta_of_t(double t) {
    constexpr double tmax = 1.0 / 27.0;
    if (t < -1e-14 || t > tmax + 1e-14) throw std::domain_error("theta_of_t: t outside [0, 1/27]");
    t = std::min(tmax, std::max(0.0, t));
    return std::atan2(std::sqrt(t * (tmax - t)), t - 1.0 / 54.0);
}

WH3Spectrum wh3_pair_spectrum(const SchmidtVector& s) {
    WH3Spectrum w;
    const std::array<double, 3> l = s.as_array();
    int k = 0;
    for (int a = 0; a < 3; ++a)
        for (int b = 0; b < 3; ++b)
            if (a != b) w.e[k++] = (1.0 - l[a] - l[b]) / 4.0;
    w.t = std::min(1.0 / 27.0, std::max(0.0, l[0] * l[1] * l[2]));
    w.theta = theta_of_t(w.t);
    for (int a = 0; a < 3; ++a) {
        const double c = std::cos(w.theta / 6.0 - std::numbers::pi * a / 3.0);
        w.g[a] = c * c / 3.0;
    }
    return w;
}

std::vector<double> wh_product_spectrum(int d) {
    if (d < 2) throw std::invalid_argument("wh_product_spectrum: d < 2");
    std::vector<double> v((d - 1) * (d - 1), 1.0 / ((d - 1.0) * (d - 1.0)));
    v.insert(v.end(), 2 * d - 1, 0.0);
    return v;
}

std::vector<double> wh_maxent_spectrum(int d) {
    if (d < 2) throw std::invalid_argument("wh_maxent_spectrum: d < 2");
    const double dd = d;
    std::vector<double> v{(2.0 - 2.0 / dd) / ((dd - 1) * (dd - 1))};
    v.insert(v.end(), d * d - 1, (1.0 - 2.0 / dd) / ((dd - 1) * (dd - 1)));
    std::sort(v.begin(), v.end(), std::greater<double>());
    return v;
}

}  // namespace addlab
