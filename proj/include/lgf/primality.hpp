#pragma once

#include <cstdint>
#include <utility>
#include <vector>

namespace lgf {

// Ground-truth primality, independent of the witnesses under test.

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t m);
std::uint64_t powmod(std::uint64_t base, std::uint64_t exp, std::uint64_t m);

inline constexpr std::uint64_t kTrialDivisionLimit = 1'000'000;

bool is_prime_trial_division(std::uint64_t n);

/// Miller-Rabin with the first twelve prime bases; deterministic for all 64-bit n.
bool is_prime_miller_rabin(std::uint64_t n);

/// Trial division up to kTrialDivisionLimit, Miller-Rabin above.
bool is_prime(std::uint64_t n);

/// Prime factorization by trial division as (prime, exponent), ascending.
std::vector<std::pair<std::uint64_t, unsigned>> factorize(std::uint64_t n);

}  // namespace lgf
