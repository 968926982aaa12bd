#include "addlab/report_json.hpp"

#include <sstream>

#include "addlab/json_writer.hpp"

namespace addlab {

namespace {

void schmidt_field(JsonWriter& w, const std::optional<SchmidtVector>& s) {
    if (!s) {
        w.null_value();
        return;
    }
    w.begin_array().value(s->l1).value(s->l2).value(s->l3).end_array();
}

}  // namespace

std::string to_json(const GapReport& r) {
    JsonWriter w;
    w.begin_object();
    w.key("function").value(r.function_spec);
    w.key("pair").value(r.pair_spec);
    w.key("product_max").value(r.product_max);
    w.key("entangled_max").value(r.entangled_max);
    w.key("gap").value(r.gap);
    w.key("witness_schmidt");
    schmidt_field(w, r.witness_schmidt);
    w.key("verdict").value(to_string(r.verdict));
    w.key("search_converged").value(r.search_converged);
    w.end_object();
    return w.str();
}

std::string to_json(const CertReport& r) {
    JsonWriter w;
    w.begin_object();
    w.key("lhs").value(r.lhs);
    w.key("rhs").value(r.rhs);
    w.key("non_additive").value(r.non_additive);
    w.end_object();
    return w.str();
}

std::string to_json(const TensorCheckReport& r) {
    JsonWriter w;
    w.begin_object();
    w.key("trials").value(r.trials);
    w.key("violations").value(r.violations);
    w.key("worst_diff").value(r.worst_diff);
    w.key("passed").value(r.passed);
    w.end_object();
    return w.str();
}

std::string to_json(const SuiteReport& r) {
    JsonWriter w;
    w.begin_object();
    w.key("entries").begin_array();
    for (const SuiteEntry& e : r.entries) {
        w.begin_object();
        w.key("lambda").value(e.lambda);
        w.key("scan_value").value(e.scan_value);
        w.key("product_value").value(e.product_value);
        w.key("gap").value(e.gap);
        w.key("argmax");
        schmidt_field(w, e.argmax);
        w.key("vertex_distance").value(e.vertex_distance);
        w.key("vertex_ok").value(e.vertex_ok);
        w.key("gap_ok").value(e.gap_ok);
        w.key("monotonicity_ok").value(e.monotonicity_ok);
        w.key("worst_monotonicity_violation").value(e.worst_monotonicity_violation);
        w.end_object();
    }
    w.end_array();
    w.key("passed").value(r.passed);
    w.end_object();
    return w.str();
}

std::string to_json(const KinkScanReport& r) {
    JsonWriter w;
    w.begin_object();
    w.key("grid").begin_array();
    for (const KinkScanEntry& e : r.grid) {
        w.begin_object();
        w.key("x0").value(e.x0);
        w.key("entangled_value").value(e.entangled_value);
        w.key("product_value").value(e.product_value);
        w.key("non_additive").value(e.non_additive);
        w.end_object();
    }
    w.end_array();
    w.key("gamma_lower_bound").value(r.gamma_lower_bound);
    w.key("lambda_max").value(r.lambda_max);
    w.key("lambda_entangled").value(r.lambda_entangled);
    w.end_object();
    return w.str();
}

std::string to_json(const BoundReport& r) {
    JsonWriter w;
    w.begin_object();
    w.key("pair_max").value(r.pair_max);
    w.key("bound_left").value(r.bound_left);
    w.key("bound_right").value(r.bound_right);
    w.key("holds").value(r.holds);
    w.end_object();
    return w.str();
}

std::string to_json(const OptResult& r) {
    JsonWriter w;
    w.begin_object();
    w.key("value").value(r.value);
    w.key("argmax_re").begin_array();
    for (const cplx& z : r.argmax.amplitudes) w.value(z.real());
    w.end_array();
    w.key("argmax_im").begin_array();
    for (const cplx& z : r.argmax.amplitudes) w.value(z.imag());
    w.end_array();
    w.key("schmidt");
    schmidt_field(w, r.schmidt);
    w.key("restarts_agreeing").value(r.restarts_agreeing);
    w.key("converged").value(r.converged);
    w.key("exact").value(r.exact);
    w.end_object();
    return w.str();
}

std::string to_json(const OpConvexReport& r) {
    JsonWriter w;
    w.begin_object();
    w.key("passed").value(r.passed);
    w.key("worst_violation").value(r.worst_violation);
    w.key("witness_a_re").begin_array();
    for (const cplx& z : r.witness_a.data()) w.value(z.real());
    w.end_array();
    w.key("witness_a_im").begin_array();
    for (const cplx& z : r.witness_a.data()) w.value(z.imag());
    w.end_array();
    w.key("witness_b_re").begin_array();
    for (const cplx& z : r.witness_b.data()) w.value(z.real());
    w.end_array();
    w.key("witness_b_im").begin_array();
    for (const cplx& z : r.witness_b.data()) w.value(z.imag());
    w.end_array();
    w.end_object();
    return w.str();
}

std::string spectrum_to_json(const WH3Spectrum& w) {
    JsonWriter j;
    j.begin_object();
    j.key("e").begin_array();
    for (double x : w.e) j.value(x);
    j.end_array();
    j.key("g").begin_array();
    for (double x : w.g) j.value(x);
    j.end_array();
    j.key("eigenvalues").begin_array();
    for (double x : w.sorted_descending()) j.value(x);
    j.end_array();
    j.key("t").value(w.t);
    j.key("theta").value(w.theta);
    j.end_object();
    return j.str();
}

std::string spectrum_to_csv(const WH3Spectrum& w) {
    std::ostringstream s;
    s << "e1,e2,e3,e4,e5,e6,g1,g2,g3,t,theta\n";
    for (double x : w.e) s << JsonWriter::format_double(x) << ",";
    for (double x : w.g) s << JsonWriter::format_double(x) << ",";
    s << JsonWriter::format_double(w.t) << "," << JsonWriter::format_double(w.theta) << "\n";
    return s.str();
}

std::string kink_scan_to_csv(const KinkScanReport& r) {
    std::ostringstream s;
    s << "x0,entangled_value,product_value,non_additive\n";
    for (const KinkScanEntry& e : r.grid)
        s << JsonWriter::format_double(e.x0) << "," << JsonWriter::format_double(e.entangled_value)
          << "," << JsonWriter::format_double(e.product_value) << "," << (e.non_additive ? 1 : 0)
          << "\n";
    return s.str();
}

std::string suite_to_csv(const SuiteReport& r) {
    std::ostringstream s;
    s << "lambda,scan_value,product_value,gap,vertex_distance,vertex_ok,gap_ok,monotonicity_ok\n";
    for (const SuiteEntry& e : r.entries)
        s << JsonWriter::format_double(e.lambda) << "," << JsonWriter::format_double(e.scan_value)
          << "," << JsonWriter::format_double(e.product_value) << ","
          << JsonWriter::format_double(e.gap) << "," << JsonWriter::format_double(e.vertex_distance)
          << "," << (e.vertex_ok ? 1 : 0) << "," << (e.gap_ok ? 1 : 0) << ","
          << (e.monotonicity_ok ? 1 : 0) << "\n";
    return s.str();
}

}  // namespace addlab
