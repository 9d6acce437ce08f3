#pragma once

#include <string>
#include <vector>

#include "json.hpp"

#include "pluripot/common.hpp"
#include "pluripot/verify.hpp"

namespace pluripot {

inline constexpr int kSchemaVersion = 1;

// %.17g; non-finite values become "nan", "inf", "-inf".
std::string format_double(double x);
// "a+bi" with both parts at 17 digits
std::string format_complex(cplx z);
// components joined by ';'
std::string format_vector(const CVec& z);

// JSON text with sorted keys and every floating-point number printed with 17
// significant digits. Non-finite numbers are emitted as strings.
std::string dump_json(const nlohmann::json& j, int indent = 2);

// {"schema": 1, "check": ..., "reports": [...], "passed": bool}
nlohmann::json report_bundle(const std::string& name, const std::vector<VerificationReport>& reports,
                             bool with_details = false);

}  // namespace pluripot
