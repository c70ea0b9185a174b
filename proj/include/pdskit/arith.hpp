#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

namespace pdskit {

/// Floor of sqrt(n) for n >= 0.
std::int64_t isqrt(std::int64_t n);

bool is_perfect_square(std::int64_t n);

/// Deterministic trial-division primality test, adequate for desk-scale n.
bool is_prime(std::int64_t n);

/// Prime factorization of n >= 1 as (prime, exponent) pairs, primes ascending.
std::vector<std::pair<std::int64_t, int>> factorize(std::int64_t n);

/// Euler totient of n >= 1.
std::int64_t totient(std::int64_t n);

struct PrimePower {
    std::int64_t p;
    int e;
};

/// Decomposes n as p^e when n >= 2 is a prime power; nullopt otherwise.
std::optional<PrimePower> as_prime_power(std::int64_t n);

/// base^exp with exp >= 0; overflow is the caller's problem.
std::int64_t ipow(std::int64_t base, int exp);

}  // namespace pdskit
