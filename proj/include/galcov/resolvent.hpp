#pragma once
#include "galcov/qpoly.hpp"
#include "galcov/modpoly.hpp"

namespace galcov {

// resolvent whose roots are the sums of k distinct roots of f (degree C(n,k));
// exact EGF/Newton method over Q
qpoly subset_sum_resolvent(const qpoly& f, int k);

// resolvent whose roots are the products of k distinct roots of f (degree C(n,k))
qpoly subset_product_resolvent(const qpoly& f, int k);

// classical resolvent cubic of a monic quartic, in the depressed pair-sum form:
// for x^4 + a3 x^3 + a2 x^2 + a1 x + a0 with depressed parameters p, q, r the
// resolvent is z^3 - 2p z^2 + (p^2 - 4r) z + q^2 (roots (a+b)(c+d) of the
// depressed quartic's root pairs)
qpoly cubic_resolvent(const qpoly& f);

// deterministic seeded Tschirnhausen transform: T has coefficients
// (splitmix64 stream % 7) - 3, degree < deg f; g is the characteristic
// polynomial of T(theta) on Q[x]/(f); retries seed+1 while T is degenerate or
// g is not squarefree (at most 40 attempts)
struct tschirn_result {
    qpoly g;
    zpoly T;
    u64 seed_eff;
};
tschirn_result tschirnhausen(const qpoly& f, u64 seed);

// trace-zero shift followed by a subset-sum resolvent; the shifted roots sum to
// zero, so complementary subsets give opposite sums, the resolvent is even, and
// the even split (roots = squared subset sums) is returned with the shift used.
// requires deg f = 2k.
struct even_subset_result {
    qpoly g;
    mpq_class shift;
};
even_subset_result trace_zero_subset_even(const qpoly& f, int k);

// degree-15 block-design resolvents for degree-7/8 polynomials: the invariant is
// the sum over blocks of the product of the roots indexed by the block, evaluated
// over the 15 relabelings of the base design (one A_n-orbit).  kind "fano7": the
// 7 lines of the Fano plane on points 0..6 (labels <-> nonzero F_2^3 vectors);
// kind "ag32": the 14 affine planes of AG(3,2) on points 0..7.  Computed by
// p-adic replay at two fully split primes: roots mod p in ascending order,
// Hensel-lifted past twice the coefficient bound, values assembled exactly.
// The design orbit and its mirror (points 0,1 swapped) are both evaluated and
// the lexicographically smaller coefficient list is returned, making the result
// independent of the root labeling.
struct design_result {
    zpoly g;
    std::vector<u64> primes_used;
};
design_result design_resolvent(const zpoly& f, const std::string& kind);

// minimal polynomial of the squared sum of pair-values over a 5-cycle edge set,
// for a monic integer quintic f: pair-sum resolvent (degree 10) -> seeded
// Tschirnhausen -> trace-zero shift -> integral model B -> at two fully split
// primes of f, lift the roots p-adically, form the 10 pair values
// b_ij = s*(T(r_i + r_j) - shift), take the 12 edge sets of 5-cycles on K5
// (6 complement pairs with opposite sums), and assemble prod(y - S^2) over the
// 6 squared sums.  Exact: modulus exceeds twice the coefficient bound and both
// primes must agree.
struct pentagon_result {
    zpoly g;          // the degree-6 result
    zpoly B;          // integral model whose root pairs are summed
    zpoly T;          // Tschirnhausen transform used
    mpq_class shift;  // trace-zero shift
    mpz_class scale;  // integral-model scale
    u64 seed_eff;
    std::vector<u64> primes_used;
};
pentagon_result pentagon_sextic(const zpoly& f, u64 seed);

// smallest `count` primes p > deg f, p not dividing disc, at which monic f
// splits into deg f distinct linear factors
std::vector<u64> fully_split_primes(const zpoly& f, int count, const mpz_class& avoid_divisor_of = 1);

}  // namespace galcov
