#pragma once
#include <cstdint>
#include <vector>
#include <gmpxx.h>

namespace galcov {

using u64 = std::uint64_t;
using u128 = unsigned __int128;

inline u64 mulmod(u64 a, u64 b, u64 m) { return (u64)((u128)a * b % m); }
u64 powmod(u64 a, u64 e, u64 m);
u64 gcd_u64(u64 a, u64 b);
u64 inv_mod(u64 a, u64 p);  // p prime

// deterministic Miller-Rabin, valid for all 64-bit inputs
bool is_prime_u64(u64 n);
bool is_prime_mpz(const mpz_class& n);  // BPSW-style via mpz_probab_prime_p, reps 40
u64 next_prime_u64(u64 n);              // smallest prime > n

// splitmix64: deterministic seed expansion
u64 splitmix64(u64& state);
u64 hash64(u64 x);
u64 hash_combine(u64 h, u64 x);

// Pollard rho + trial division; returns prime factorization of |n| sorted by prime.
// Factors up to the 63-bit cap per prime; throws on failure (cannot happen below 2^126).
std::vector<std::pair<mpz_class, int>> factor_mpz(const mpz_class& n);

// ramified primes of a discriminant: trial division to 10^6 then Miller-Rabin/rho on cofactor
std::vector<std::pair<mpz_class, int>> ramified_primes(const mpz_class& disc);

// primes in [2, bound] via sieve
std::vector<u64> primes_upto(u64 bound);

mpz_class binom_mpz(unsigned n, unsigned k);

}  // namespace galcov
