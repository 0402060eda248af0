#include <qseries/macdonald.hpp>

#include <sstream>

#include <json.hpp>

namespace qseries {

std::string to_text_record(const VerificationReport& report)
{
    std::ostringstream out;
    out << "identity=" << report.identity_name << " params=";
    if (report.parameters.empty()) {
        out << '-';
    }
    bool first = true;
    for (const auto& [key, value] : report.parameters) {
        out << (first ? "" : ",") << key << '=' << value;
        first = false;
    }
    out << " order=" << to_string(report.order) << " constant=" << to_string(report.constant_found)
        << " match=" << (report.match ? "true" : "false") << " first_mismatch="
        << (report.first_mismatch_exponent ? to_string(*report.first_mismatch_exponent) : std::string("-"))
        << " terms_compared=" << report.terms_compared;
    return out.str();
}

std::string to_json(const VerificationReport& report)
{
    nlohmann::ordered_json doc;
    doc["identity"] = report.identity_name;
    doc["params"] = nlohmann::ordered_json::object();
    for (const auto& [key, value] : report.parameters) {
        doc["params"][key] = value;
    }
    doc["order"] = to_string(report.order);
    doc["constant"] = to_string(report.constant_found);
    doc["match"] = report.match;
    doc["first_mismatch"] = report.first_mismatch_exponent ? nlohmann::ordered_json(to_string(*report.first_mismatch_exponent))
                                                           : nlohmann::ordered_json(nullptr);
    doc["terms_compared"] = report.terms_compared;
    return doc.dump();
}

} // namespace qseries
