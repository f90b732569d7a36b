// Serialization of verification and conjecture reports. Output is a pure
// function of the report: keys are sorted and rows keep report order, so the
// same report always yields the same bytes.

#ifndef PENTATAIL_REPORT_HPP
#define PENTATAIL_REPORT_HPP

#include <string>

#include <json.hpp>

#include "pentatail/bivariate.hpp"
#include "pentatail/verifier.hpp"

namespace pentatail {

enum class Format { json, csv, text };

/// Throws std::invalid_argument for anything but json, csv or text.
Format parse_format(const std::string& name);

nlohmann::json to_json(const VerificationReport& r);
nlohmann::json to_json(const TheoremReport& r);
nlohmann::json to_json(const ConjectureReport& r);

std::string emit_report(const VerificationReport& r, Format f);
std::string emit_report(const TheoremReport& r, Format f);
std::string emit_report(const ConjectureReport& r, Format f);

}  // namespace pentatail

#endif  // PENTATAIL_REPORT_HPP
