#pragma once

#include <string>

#include "json.hpp"
#include "vamod/errors.hpp"
#include "vamod/modbuild.hpp"
#include "vamod/twist.hpp"
#include "vamod/verify.hpp"

namespace vamod {

using Json = nlohmann::ordered_json;

// Scalars travel as their text form; matrices as {"n", "rows"} with row-major
// string entries; series as {"ram", "lo", "trunc", "coeffs"} where coeffs[k]
// sits at exponent (lo+k)/ram and trunc is null for exact series.

Json matrix_to_json(const UTMatrix& m);
UTMatrix matrix_from_json(const Json& j);

Json series_to_json(const ScalarSeries& s);
Json series_to_json(const MatrixSeries& s);
ScalarSeries scalar_series_from_json(const Json& j);
// Matrix coefficients carry their own dimension; n disambiguates series whose
// window holds no coefficients.
MatrixSeries matrix_series_from_json(const Json& j, int n);

Json module_to_json(const ModuleData& m);
ModuleData module_from_json(const Json& j);

Json structure_to_json(const TwistedStructure& ts);
TwistedStructure structure_from_json(const Json& j);

Json case_report_to_json(const CaseReport& r);
Json twist_report_to_json(const TwistReport& r);

Json verify_report_to_json(const VerifyReport& r);
VerifyReport verify_report_from_json(const Json& j);

Json error_to_json(const Error& e);

void write_json_file(const std::string& path, const Json& j);
Json read_json_file(const std::string& path);

} // namespace vamod
