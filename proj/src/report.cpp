#include "fibsum/report.hpp"

#include <ostream>

#include "json.hpp"

namespace fibsum {

std::string csv_quote(const std::string& cell) {
    std::string out = "\"";
    for (char ch : cell) {
        if (ch == '"') {
            out += '"';
        }
        out += ch;
    }
    out += '"';
    return out;
}

void write_audit_report(const AuditReport& report, OutputFormat format, std::ostream& out) {
    switch (format) {
        case OutputFormat::Json: {
            auto doc = nlohmann::ordered_json::array();
            for (const auto& e : report.entries) {
                doc.push_back({
                    {"family", std::string(family_name(e.family))},
                    {"n", e.n},
                    {"p", e.p},
                    {"reading", e.reading},
                    {"lhs", e.lhs.to_string()},
                    {"rhs", e.rhs.to_string()},
                    {"verdict", verdict_name(e.verdict)},
                    {"note", e.note},
                });
            }
            out << doc.dump(2) << '\n';
            break;
        }
        case OutputFormat::Csv:
            out << "family,n,p,reading,lhs,rhs,verdict,note\n";
            for (const auto& e : report.entries) {
                out << family_name(e.family) << ',' << e.n << ',' << e.p << ',' << csv_quote(e.reading) << ','
                    << csv_quote(e.lhs.to_string()) << ',' << csv_quote(e.rhs.to_string()) << ','
                    << verdict_name(e.verdict) << ',' << csv_quote(e.note) << '\n';
            }
            break;
        case OutputFormat::Text:
            for (const auto& e : report.entries) {
                out << verdict_name(e.verdict) << "  " << family_name(e.family) << " n=" << e.n << " p=" << e.p
                    << " [" << e.reading << "]  lhs=" << e.lhs << "  rhs=" << e.rhs;
                if (!e.note.empty()) {
                    out << "  # " << e.note;
                }
                out << '\n';
            }
            break;
    }
}

}  // namespace fibsum
