#pragma once
#include "galcov/intutil.hpp"
#include <vector>
#include <string>

namespace galcov {

// dense polynomials over F_p, p an odd (or =2) prime < 2^63; coefficients low-to-high,
// normalized (no trailing zeros); the zero polynomial is the empty vector.
struct modpoly {
    u64 p;
    std::vector<u64> c;

    modpoly(u64 p_ = 2) : p(p_) {}
    modpoly(u64 p_, std::vector<u64> cs) : p(p_), c(std::move(cs)) { trim(); }
    void trim() { while (!c.empty() && c.back() == 0) c.pop_back(); }
    int deg() const { return (int)c.size() - 1; }
    bool zero() const { return c.empty(); }
    u64 lc() const { return c.back(); }
    bool operator==(const modpoly& o) const { return p == o.p && c == o.c; }
    bool operator<(const modpoly& o) const {  // canonical order: degree, then coeffs low-to-high lex
        if (c.size() != o.c.size()) return c.size() < o.c.size();
        return c < o.c;
    }
};

modpoly mp_from_mpz(const std::vector<mpz_class>& f, u64 p);
modpoly mp_add(const modpoly& a, const modpoly& b);
modpoly mp_sub(const modpoly& a, const modpoly& b);
modpoly mp_mul(const modpoly& a, const modpoly& b);
modpoly mp_scale(const modpoly& a, u64 k);
modpoly mp_monic(const modpoly& a);
// division with remainder, b nonzero
std::pair<modpoly, modpoly> mp_divmod(const modpoly& a, const modpoly& b);
modpoly mp_mod(const modpoly& a, const modpoly& b);
modpoly mp_gcd(modpoly a, modpoly b);         // monic gcd
modpoly mp_deriv(const modpoly& a);
modpoly mp_powmod(modpoly base, const mpz_class& e, const modpoly& mod);
u64 mp_eval(const modpoly& a, u64 x);
u64 mp_resultant(modpoly a, modpoly b);       // by PRS over F_p
modpoly mp_squarefree_part(const modpoly& a);

struct mp_factor { modpoly f; int mult; };

// distinct-degree decomposition of monic squarefree a: list of (product, degree)
std::vector<std::pair<modpoly, int>> mp_ddf(const modpoly& a);
// full canonical factorization (Yun + DDF + deterministic EDF); factors monic,
// sorted by (degree, coeff lex), multiplicity attached
std::vector<mp_factor> mp_factorize(const modpoly& a);
// factor degree multiset (with multiplicity), sorted descending: cheap, DDF-only
std::vector<int> mp_factor_degrees(const modpoly& a);
bool mp_irreducible(const modpoly& a);
std::vector<u64> mp_roots(const modpoly& a);  // sorted

std::string mp_to_string(const modpoly& a);

}  // namespace galcov
