#include "padic/record.hpp"

namespace padic {

const char* to_string(RecordStatus s) {
  switch (s) {
    case RecordStatus::pass: return "pass";
    case RecordStatus::fail: return "fail";
    case RecordStatus::vacuous: return "vacuous";
  }
  return "?";
}

bool record_less(const VerificationRecord& a, const VerificationRecord& b) {
  if (a.claim_id != b.claim_id) return a.claim_id < b.claim_id;
  return a.params < b.params;
}

}  // namespace padic
