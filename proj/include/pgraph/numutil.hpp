#pragma once

#include <cstdint>
#include <map>
#include <vector>

namespace pgraph {

// Word-level number theory shared by the group model, the closed forms and
// the modular characteristic-polynomial engine.

std::uint64_t mul_mod_u64(std::uint64_t a, std::uint64_t b, std::uint64_t m);
std::uint64_t pow_mod_u64(std::uint64_t base, std::uint64_t exp, std::uint64_t m);
std::uint64_t inv_mod_u64(std::uint64_t a, std::uint64_t p);  // p prime, a != 0 mod p

std::uint64_t gcd_u64(std::uint64_t a, std::uint64_t b);
// lcm with overflow detection; throws std::overflow_error.
std::uint64_t lcm_u64_checked(std::uint64_t a, std::uint64_t b);
// a*b with overflow detection; throws std::overflow_error.
std::uint64_t mul_u64_checked(std::uint64_t a, std::uint64_t b);
// base^exp with overflow detection; throws std::overflow_error.
std::uint64_t pow_u64_checked(std::uint64_t base, std::uint64_t exp);

bool is_prime_u64(std::uint64_t n);

// Prime factorization as {prime -> exponent}; trial division plus
// Pollard rho for the stubborn cofactors.
std::map<std::uint64_t, unsigned> factorize_u64(std::uint64_t n);

// All divisors of n, ascending. Throws std::length_error if n has more
// than `limit` divisors.
std::vector<std::uint64_t> divisors_u64(std::uint64_t n, std::size_t limit = 1u << 20);

// If n is a prime power p^k (k >= 1), returns {p, k}.
struct PrimePower {
    std::uint64_t p;
    unsigned k;
};
bool as_prime_power(std::uint64_t n, PrimePower& out);

}  // namespace pgraph
