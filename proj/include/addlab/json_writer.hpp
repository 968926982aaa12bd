#pragma once

#include <string>
#include <vector>

namespace addlab {

// Minimal JSON emitter with fixed field order and floats printed with 17
// significant digits, so identical inputs produce byte-identical reports.
class JsonWriter {
public:
    JsonWriter& begin_object();
    JsonWriter& end_object();
    JsonWriter& begin_array();
    JsonWriter& end_array();
    JsonWriter& key(const std::string& name);
    JsonWriter& value(double v);
    JsonWriter& value(int v);
    JsonWriter& value(bool v);
    JsonWriter& value(const std::string& v);
    JsonWriter& value(const char* v) { return value(std::string(v)); }
    JsonWriter& null_value();

    const std::string& str() const { return out_; }

    static std::string format_double(double v);

private:
    void comma();
    std::string out_;
    std::vector<bool> needs_comma_;
};

}  // namespace addlab
