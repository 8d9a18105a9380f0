#pragma once

#include <cstdint>

#include <gmpxx.h>

#include "padic/errors.hpp"

namespace padic {

// Deterministic Miller-Rabin, valid for every 64-bit input.
bool is_prime_u64(std::uint64_t n);

// Accepts any nonnegative mpz that fits 64 bits; larger inputs are rejected
// (desk scale never needs them).
bool is_prime(const mpz_class& n);

void require_prime(std::uint64_t p, const char* context);

}  // namespace padic
