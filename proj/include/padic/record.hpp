#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

namespace padic {

enum class RecordStatus { pass, fail, vacuous };

const char* to_string(RecordStatus s);

// One executable claim check: which claim, at which parameters, with the
// computed and expected values as witnesses.  Parameter and witness order is
// part of the serialized format, so both are kept as ordered lists.
struct VerificationRecord {
  std::string claim_id;
  std::vector<std::pair<std::string, long long>> params;
  RecordStatus status = RecordStatus::pass;
  std::vector<std::pair<std::string, std::string>> witness;  // decimal strings

  bool passed() const { return status != RecordStatus::fail; }

  VerificationRecord& param(std::string name, long long v) {
    params.emplace_back(std::move(name), v);
    return *this;
  }
  VerificationRecord& note(std::string name, std::string v) {
    witness.emplace_back(std::move(name), std::move(v));
    return *this;
  }
};

// Total order used for deterministic output.
bool record_less(const VerificationRecord& a, const VerificationRecord& b);

}  // namespace padic
