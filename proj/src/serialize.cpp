#include "padic/serialize.hpp"

#include <sstream>

#include <nlohmann/json.hpp>

#include "padic/errors.hpp"

namespace padic {

namespace {

using ordered_json = nlohmann::ordered_json;

std::string join_pairs(const std::vector<std::pair<std::string, long long>>& kv) {
  std::ostringstream os;
  for (std::size_t i = 0; i < kv.size(); ++i) {
    if (i) os << ";";
    os << kv[i].first << "=" << kv[i].second;
  }
  return os.str();
}

std::string join_pairs(const std::vector<std::pair<std::string, std::string>>& kv) {
  std::ostringstream os;
  for (std::size_t i = 0; i < kv.size(); ++i) {
    if (i) os << ";";
    os << kv[i].first << "=" << kv[i].second;
  }
  return os.str();
}

}  // namespace

OutputFormat parse_format(const std::string& name) {
  if (name == "json-lines") return OutputFormat::json_lines;
  if (name == "csv") return OutputFormat::csv;
  if (name == "human") return OutputFormat::human;
  throw bad_parameters_error("unknown output format: " + name);
}

std::string serialize_record(const VerificationRecord& record, OutputFormat format) {
  switch (format) {
    case OutputFormat::json_lines: {
      ordered_json j;
      j["claim"] = record.claim_id;
      ordered_json params = ordered_json::object();
      for (const auto& [k, v] : record.params) params[k] = v;
      j["params"] = std::move(params);
      j["status"] = to_string(record.status);
      ordered_json witness = ordered_json::object();
      for (const auto& [k, v] : record.witness) witness[k] = v;
      j["witness"] = std::move(witness);
      return j.dump();
    }
    case OutputFormat::csv: {
      std::ostringstream os;
      os << record.claim_id << "," << join_pairs(record.params) << ","
         << to_string(record.status) << "," << join_pairs(record.witness);
      return os.str();
    }
    case OutputFormat::human: {
      std::ostringstream os;
      const char* tag = record.status == RecordStatus::pass      ? "PASS"
                        : record.status == RecordStatus::vacuous ? "VACUOUS"
                                                                 : "FAIL";
      os << tag << " " << record.claim_id;
      for (const auto& [k, v] : record.params) os << " " << k << "=" << v;
      if (!record.witness.empty()) {
        os << "  [";
        for (std::size_t i = 0; i < record.witness.size(); ++i) {
          if (i) os << " ";
          os << record.witness[i].first << "=" << record.witness[i].second;
        }
        os << "]";
      }
      return os.str();
    }
  }
  throw bad_parameters_error("unknown output format");
}

VerificationRecord parse_record_json(const std::string& line) {
  ordered_json j = ordered_json::parse(line);
  VerificationRecord rec;
  rec.claim_id = j.at("claim").get<std::string>();
  for (const auto& [k, v] : j.at("params").items()) rec.param(k, v.get<long long>());
  const std::string status = j.at("status").get<std::string>();
  if (status == "pass")
    rec.status = RecordStatus::pass;
  else if (status == "fail")
    rec.status = RecordStatus::fail;
  else if (status == "vacuous")
    rec.status = RecordStatus::vacuous;
  else
    throw bad_parameters_error("unknown record status: " + status);
  for (const auto& [k, v] : j.at("witness").items()) rec.note(k, v.get<std::string>());
  return rec;
}

}  // namespace padic
