// JSON and CSV renderings shared by the command-line front end.
#pragma once

#include <string>
#include <vector>

#include "json.hpp"

#include "cellkit/lusztig.hpp"

namespace cellkit {

using Json = nlohmann::json;

constexpr const char* kReportSchema = "cellkit-report/1";

/// [[perm, laurent], ...] over the nonzero coefficients, in index order.
Json hecke_json(const HeckeElt& h);
/// "v*C(s1s2s1) + C(s1s2s1s3)" with reduced words.
std::string hecke_words(const HeckeElt& h);

/// Envelope for every JSON document: schema, command, n, results, summary.
Json report_doc(const std::string& command, int n, Json results, bool pass, Json failures = Json::array());

Json property_report_json(const PropertyReport& report, const SymmetricGroup& g, const std::string& reproduce_prefix);

/// Quotes a CSV field when it contains a comma, quote or newline.
std::string csv_field(const std::string& s);
std::string csv_row(const std::vector<std::string>& fields);

}  // namespace cellkit
