#include "addlab/json_writer.hpp"

#include <cmath>
#include <cstdio>

namespace addlab {

std::string JsonWriter::format_double(double v) {
    if (!std::isfinite(v)) return "null";
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

void JsonWriter::comma() {
    if (!needs_comma_.empty() && needs_comma_.back()) out_ += ',';
    if (!needs_comma_.empty()) needs_comma_.back() = true;
}

JsonWriter& JsonWriter::begin_object() {
    comma();
    out_ += '{';
    needs_comma_.push_back(false);
    return *this;
}

JsonWriter& JsonWriter::end_object() {
    out_ += '}';
    needs_comma_.pop_back();
    return *this;
}

JsonWriter& JsonWriter::begin_array() {
    comma();
    out_ += '[';
    needs_comma_.push_back(false);
    return *this;
}

JsonWriter& JsonWriter::end_array() {
    out_ += ']';
    needs_comma_.pop_back();
    return *this;
}

JsonWriter& JsonWriter::key(const std::string& name) {
    comma();
    out_ += '"';
    out_ += name;
    out_ += "\":";
    needs_comma_.back() = false;  // next value attaches without a comma
    return *this;
}

JsonWriter& JsonWriter::value(double v) {
    comma();
    out_ += format_double(v);
    return *this;
}

JsonWriter& JsonWriter::value(int v) {
    comma();
    out_ += std::to_string(v);
    return *this;
}

JsonWriter& JsonWriter::value(bool v) {
    comma();
    out_ += v ? "true" : "false";
    return *this;
}

JsonWriter& JsonWriter::value(const std::string& v) {
    comma();
    out_ += '"';
    for (char c : v) {
        if (c == '"' || c == '\\') out_ += '\\';
        out_ += c;
    }
    out_ += '"';
    return *this;
}

JsonWriter& JsonWriter::null_value() {
    comma();
    out_ += "null";
    return *this;
}

}  // namespace addlab
