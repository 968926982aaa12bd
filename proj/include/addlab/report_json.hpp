#pragma once

#include <string>

#include "addlab/convex.hpp"
#include "addlab/experiments.hpp"
#include "addlab/optimize.hpp"
#include "addlab/wh3.hpp"

namespace addlab {

// Fixed field order, 17-significant-digit floats: identical inputs yield
// byte-identical reports.
std::string to_json(const GapReport& r);
std::string to_json(const CertReport& r);
std::string to_json(const TensorCheckReport& r);
std::string to_json(const SuiteReport& r);
std::string to_json(const KinkScanReport& r);
std::string to_json(const BoundReport& r);
std::string to_json(const OptResult& r);
std::string to_json(const OpConvexReport& r);
std::string spectrum_to_json(const WH3Spectrum& w);

std::string spectrum_to_csv(const WH3Spectrum& w);
std::string kink_scan_to_csv(const KinkScanReport& r);
std::string suite_to_csv(const SuiteReport& r);

}  // namespace addlab
