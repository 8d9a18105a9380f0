#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "padic/record.hpp"
#include "padic/verifier.hpp"

namespace padic {

// Range overrides for a claim run; anything unset falls back to the claim's
// default range (the acceptance ranges, so a bare run reproduces the full
// suite).
struct ClaimOptions {
  std::optional<std::uint64_t> n_max;
  std::optional<long> m;
  std::optional<std::pair<long, long>> m_range;
  std::optional<std::uint64_t> p;
  std::optional<std::vector<std::uint64_t>> p_set;
  std::optional<unsigned> a_max;
  std::optional<std::uint64_t> bound;
  std::optional<std::uint64_t> p_max;
  unsigned workers = 1;
};

using ClaimTask = std::function<std::vector<VerificationRecord>()>;

// Claim identifiers accepted by `verify` (and, for the conjectures, `scan`).
const std::vector<std::string>& known_claims();

bool is_known_claim(const std::string& claim);

// Builds the deterministic task list for one claim; throws
// bad_parameters_error for unknown claims or invalid overrides.
std::vector<ClaimTask> build_claim_tasks(const std::string& claim, const ClaimOptions& opt);

// Runs tasks across `workers` threads and returns all records sorted by
// (claim_id, parameters); the result is identical for any worker count.
std::vector<VerificationRecord> run_claim_tasks(std::vector<ClaimTask> tasks, unsigned workers);

}  // namespace padic
