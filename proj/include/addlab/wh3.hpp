#pragma once

#include <array>
#include <vector>

namespace addlab {

// Schmidt coefficients of a pure input on C^3 (x) C^3; nonnegative, sum 1.
struct SchmidtVector {
    double l1, l2, l3;
    SchmidtVector(double a, double b, double c);
    std::array<double, 3> as_array() const { return {l1, l2, l3}; }
};

// Closed-form output spectrum of the Werner-Holevo pair at dimension 3:
// six e-values over ordered pairs (alpha != beta) and three G-values.
struct WH3Spectrum {
    std::array<double, 6> e;
    std::array<double, 3> g;
    double t;      // l1 l2 l3 in [0, 1/27]
    double theta;  // in [0, pi]
    std::vector<double> sorted_descending() const;
};

// Branch-unambiguous angle: atan2(sqrt(t(1/27 - t)), t - 1/54).
double theta_of_t(double t);

WH3Spectrum wh3_pair_spectrum(const SchmidtVector& s);

// {0 x(2d-1)} u {1/(d-1)^2 x(d-1)^2}, descending.
std::vector<double> wh_product_spectrum(int d);

// {(2-2/d)/(d-1)^2} u {(1-2/d)/(d-1)^2 x(d^2-1)}, descending.
std::vector<double> wh_maxent_spectrum(int d);

}  // namespace addlab
