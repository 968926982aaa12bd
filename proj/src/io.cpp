#include "addlab/io.hpp"

#include <fstream>
#include <sstream>

#include "json.hpp"

namespace addlab {

using nlohmann::json;

std::string mat_to_json(const Mat& m) {
    json j;
    if (m.rows() == m.cols()) {
        j["dim"] = m.rows();
    } else {
        j["rows"] = m.rows();
        j["cols"] = m.cols();
    }
    std::vector<double> re, im;
    re.reserve(m.data().size());
    im.reserve(m.data().size());
    for (const cplx& z : m.data()) {
        re.push_back(z.real());
        im.push_back(z.imag());
    }
    j["re"] = re;
    j["im"] = im;
    return j.dump();
}

static Mat mat_from_json(const json& j) {
    int rows, cols;
    if (j.contains("dim")) {
        rows = cols = j.at("dim").get<int>();
    } else {
        rows = j.at("rows").get<int>();
        cols = j.at("cols").get<int>();
    }
    auto re = j.at("re").get<std::vector<double>>();
    std::vector<double> im;
    if (j.contains("im"))
        im = j.at("im").get<std::vector<double>>();
    else
        im.assign(re.size(), 0.0);
    if (static_cast<int>(re.size()) != rows * cols || im.size() != re.size())
        throw std::invalid_argument("matrix JSON: entry count mismatch");
    Mat m(rows, cols);
    for (int i = 0; i < rows; ++i)
        for (int k = 0; k < cols; ++k) {
            size_t idx = static_cast<size_t>(i) * cols + k;
            m(i, k) = cplx(re[idx], im[idx]);
        }
    if (!m.all_finite()) throw std::invalid_argument("matrix JSON: non-finite entries");
    return m;
}

Mat mat_from_json_text(const std::string& text) { return mat_from_json(json::parse(text)); }

std::string read_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open file: " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

KrausFile load_kraus_file(const std::string& path) {
    json j = json::parse(read_file(path));
    KrausFile f;
    f.dim_in = j.at("dim_in").get<int>();
    f.dim_out = j.at("dim_out").get<int>();
    for (const auto& jm : j.at("kraus")) {
        Mat m = mat_from_json(jm);
        if (m.rows() != f.dim_out || m.cols() != f.dim_in)
            throw std::invalid_argument("Kraus file: operator shape mismatch");
        f.kraus.push_back(std::move(m));
    }
    if (f.kraus.empty()) throw std::invalid_argument("Kraus file: no operators");
    return f;
}

MeasureFile load_measure_file(const std::string& path) {
    json j = json::parse(read_file(path));
    MeasureFile f;
    f.alpha = j.at("alpha").get<double>();
    f.beta = j.at("beta").get<double>();
    f.gamma = j.at("gamma").get<double>();
    f.nodes = j.at("nodes").get<std::vector<double>>();
    f.weights = j.at("weights").get<std::vector<double>>();
    return f;
}

}  // namespace addlab
