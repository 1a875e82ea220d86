#pragma once

#include <iosfwd>
#include <string>

#include "fibsum/audit.hpp"

namespace fibsum {

enum class OutputFormat { Json, Csv, Text };

// JSON: array of {family, n, p, reading, lhs, rhs, verdict, note}, values as
// decimal strings. CSV: header "family,n,p,reading,lhs,rhs,verdict,note",
// value and note cells always quoted. Text: one line per entry.
void write_audit_report(const AuditReport& report, OutputFormat format, std::ostream& out);

// RFC 4180 quoting.
std::string csv_quote(const std::string& cell);

}  // namespace fibsum
