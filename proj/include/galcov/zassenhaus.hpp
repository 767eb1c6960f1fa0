#pragma once
#include "galcov/zpoly.hpp"
#include "galcov/modpoly.hpp"
#include <optional>

namespace galcov {

struct zfact { zpoly f; int mult; };

// Yun squarefree decomposition of primitive f: list of (squarefree factor, multiplicity)
std::vector<std::pair<zpoly, int>> zz_squarefree(const zpoly& f);

// good primes for f squarefree primitive: p not dividing lc(f)*disc(f), ascending from 2
std::vector<u64> zz_good_primes(const zpoly& f, int count);

// possible factor degrees of squarefree primitive f from modular degree-set sieving over
// `nprimes` good primes: out[d] = 1 iff a degree-d rational factor is not excluded
std::vector<char> zz_degree_sieve(const zpoly& f, int nprimes);

// quadratic multifactor Hensel: lift the canonical mod-p factorization of squarefree
// primitive f to factors mod p^k with p^k > bound (monic lifted factors of f/lc over Z_{p^k})
struct hensel_result {
    u64 p;
    int k;
    mpz_class pk;
    std::vector<zpoly> factors;  // monic mod p^k, coefficients in [0, p^k)
};
hensel_result hensel_lift(const zpoly& f, u64 p, const mpz_class& bound);

// full factorization of nonzero f over Q up to sign: returns primitive factors with lc>0.
// content/sign are dropped (callers verify products themselves where needed).
std::vector<zfact> zz_factorize(const zpoly& f);

bool zz_irreducible(const zpoly& f);

// the (unique, if any) degree-d irreducible factor of squarefree f; nullopt if none.
// If several exist, the one with lexicographically smallest coefficient list.
std::optional<zpoly> zz_target_degree_factor(const zpoly& f, int d);

// rational roots of f (exact), sorted
std::vector<mpq_class> zz_rational_roots(const zpoly& f);

}  // namespace galcov
