#include "cellkit/report.hpp"

namespace cellkit {

Json hecke_json(const HeckeElt& h) {
    Json out = Json::array();
    for (int w : h.support()) out.push_back(Json::array({h.group()->element(w).to_string(), h.coeff(w)}));
    return out;
}

std::string hecke_words(const HeckeElt& h) {
    std::string out;
    const std::string tag = h.basis() == Basis::Cprime ? "C'" : basis_name(h.basis());
    for (int w : h.support()) {
        const Laurent& c = h.coeff(w);
        if (!out.empty()) out += " + ";
        if (!c.is_one()) out += (c.size() == 1 ? c.to_string() : "(" + c.to_string() + ")") + "*";
        out += tag + "(" + h.group()->element(w).word_string() + ")";
    }
    return out.empty() ? "0" : out;
}

Json report_doc(const std::string& command, int n, Json results, bool pass, Json failures) {
    Json doc;
    doc["schema"] = kReportSchema;
    doc["command"] = command;
    doc["n"] = n;
    doc["results"] = std::move(results);
    doc["summary"] = {{"status", pass ? "pass" : "fail"}, {"failures", std::move(failures)}};
    return doc;
}

Json property_report_json(const PropertyReport& report, const SymmetricGroup& g, const std::string& reproduce_prefix) {
    Json props = Json::array();
    for (const auto& r : report.results) {
        Json p;
        p["property"] = "P" + std::to_string(r.number);
        p["status"] = status_name(r.status);
        p["scope"] = r.scope;
        p["checked"] = r.checked;
        if (r.status == PropertyResult::Status::fail) {
            Json witness = Json::array();
            for (int w : r.witness) witness.push_back(g.element(w).to_string());
            p["witness"] = witness;
            p["detail"] = r.detail;
            p["reproduce"] = reproduce_prefix + " --props " + std::to_string(r.number);
        }
        props.push_back(p);
    }
    return props;
}

std::string csv_field(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string out = "\"";
    for (char c : s) {
        if (c == '"') out += '"';
        out += c;
    }
    return out + "\"";
}

std::string csv_row(const std::vector<std::string>& fields) {
    std::string out;
    for (size_t k = 0; k < fields.size(); ++k) {
        if (k) out += ",";
        out += csv_field(fields[k]);
    }
    return out + "\n";
}

}  // namespace cellkit
