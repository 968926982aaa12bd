#pragma once

#include <string>
#include <vector>

#include "addlab/matrix.hpp"

namespace addlab {

// Matrix wire format: {"dim": n, "re": [...], "im": [...]} row-major.
// Rectangular matrices additionally carry "rows"/"cols" instead of "dim".
std::string mat_to_json(const Mat& m);
Mat mat_from_json_text(const std::string& text);

struct KrausFile {
    int dim_in;
    int dim_out;
    std::vector<Mat> kraus;
};

// {"dim_in": n, "dim_out": m, "kraus": [matrix, ...]}
KrausFile load_kraus_file(const std::string& path);

struct MeasureFile {
    double alpha, beta, gamma;
    std::vector<double> nodes;
    std::vector<double> weights;
};

// {"alpha":..., "beta":..., "gamma":..., "nodes":[...], "weights":[...]}
MeasureFile load_measure_file(const std::string& path);

std::string read_file(const std::string& path);

}  // namespace addlab
