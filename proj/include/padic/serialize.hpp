#pragma once

#include <string>

#include "padic/record.hpp"

namespace padic {

enum class OutputFormat { json_lines, csv, human };

OutputFormat parse_format(const std::string& name);  // throws bad_parameters_error

// One line per record.  JSON lines carry big integers as decimal strings;
// CSV flattens params and witness into "k=v;k=v" cells with a stable column
// order (claim, params, status, witness).
std::string serialize_record(const VerificationRecord& record, OutputFormat format);

// Inverse of the json-lines serialization.
VerificationRecord parse_record_json(const std::string& line);

}  // namespace padic
