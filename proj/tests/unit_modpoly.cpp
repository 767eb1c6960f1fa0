#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "galcov/modpoly.hpp"
#include "galcov/zpoly.hpp"

using namespace galcov;

namespace {

struct rng {
    u64 s;
    explicit rng(u64 seed) : s(seed) {}
    u64 next() { return splitmix64(s); }
};

modpoly random_poly(rng& r, u64 p, int deg) {
    std::vector<u64> c(deg + 1);
    for (int i = 0; i < deg; i++) c[i] = r.next() % p;
    c[deg] = 1 + r.next() % (p - 1);
    return modpoly(p, c);
}

modpoly product_of(const std::vector<modpoly>& fs) {
    modpoly acc(fs[0].p, {1});
    for (const auto& f : fs) acc = mp_mul(acc, f);
    return acc;
}

}  // namespace

TEST_CASE("ring operations mod p") {
    for (u64 p : {2ULL, 3ULL, 13ULL, 9973ULL}) {
        rng r(p);
        for (int i = 0; i < 20; i++) {
            modpoly a = random_poly(r, p, 1 + (int)(r.next() % 5));
            modpoly b = random_poly(r, p, 1 + (int)(r.next() % 5));
            modpoly c = random_poly(r, p, 1 + (int)(r.next() % 3));
            CHECK(mp_sub(mp_add(a, b), b) == a);
            CHECK(mp_mul(a, b) == mp_mul(b, a));
            CHECK(mp_mul(mp_add(a, b), c) == mp_add(mp_mul(a, c), mp_mul(b, c)));
            auto [q, rem] = mp_divmod(a, b);
            CHECK(mp_add(mp_mul(q, b), rem) == a);
            CHECK(rem.deg() < b.deg());
        }
    }
    modpoly z(7);
    CHECK(z.zero());
    CHECK(z.deg() == -1);
    CHECK(mp_add(z, z).zero());
}

TEST_CASE("reduction from Z and evaluation") {
    zpoly f = {4, 1, -5, 0, 1};
    modpoly f3 = mp_from_mpz(f, 3);
    CHECK(f3.c == std::vector<u64>{1, 1, 1, 0, 1});
    for (u64 x = 0; x < 3; x++) {
        mpz_class v = zp_eval(f, (long)x);
        CHECK(mp_eval(f3, x) == mpz_fdiv_ui(v.get_mpz_t(), 3));
    }
    // negative coefficients land in [0, p)
    modpoly g = mp_from_mpz(zpoly{-1, -23}, 5);
    CHECK(g.c == std::vector<u64>{4, 2});
}

TEST_CASE("gcd is monic and divides both") {
    rng r(7);
    for (int i = 0; i < 25; i++) {
        u64 p = (i % 2) ? 13 : 101;
        modpoly h = random_poly(r, p, 1 + (int)(r.next() % 3));
        modpoly a = mp_mul(h, random_poly(r, p, 1 + (int)(r.next() % 3)));
        modpoly b = mp_mul(h, random_poly(r, p, 1 + (int)(r.next() % 3)));
        modpoly g = mp_gcd(a, b);
        CHECK(g.lc() == 1);
        CHECK(mp_mod(a, g).zero());
        CHECK(mp_mod(b, g).zero());
        CHECK(mp_mod(g, mp_monic(h)).zero());  // h | gcd
    }
}

TEST_CASE("powmod and Frobenius") {
    // x^(p^d) == x mod m for irreducible m of degree d
    struct probe { u64 p; std::vector<u64> c; };
    for (auto& pr : {probe{2, {1, 1, 1}}, probe{3, {1, 0, 1}}, probe{5, {2, 0, 1}},
                     probe{7, {1, 1, 0, 1}}}) {
        modpoly m(pr.p, pr.c);
        REQUIRE(mp_irreducible(m));
        mpz_class e;
        mpz_ui_pow_ui(e.get_mpz_t(), pr.p, m.deg());
        modpoly x(pr.p, {0, 1});
        CHECK(mp_powmod(x, e, m) == x);
    }
    modpoly m(11, {1, 0, 1});
    modpoly x(11, {0, 1});
    CHECK(mp_powmod(x, 2, m) == modpoly(11, {10}));  // x^2 = -1 mod x^2+1
}

TEST_CASE("resultant mod p matches exact resultant") {
    rng r(31);
    for (int i = 0; i < 30; i++) {
        zpoly a(3 + r.next() % 3), b(2 + r.next() % 3);
        for (auto& c : a) c = (long)(r.next() % 19) - 9;
        for (auto& c : b) c = (long)(r.next() % 19) - 9;
        a.back() = 1;
        b.back() = 1;
        mpz_class res = zp_resultant(a, b);
        for (u64 p : {13ULL, 10007ULL}) {
            modpoly am = mp_from_mpz(a, p), bm = mp_from_mpz(b, p);
            CHECK(mp_resultant(am, bm) == mpz_fdiv_ui(res.get_mpz_t(), p));
        }
    }
}

TEST_CASE("derivative and squarefree part") {
    modpoly f(5, {1, 2, 3, 4});
    CHECK(mp_deriv(f) == modpoly(5, {2, 1, 2}));
    // (x+1)^2 (x+2) mod 5: squarefree part (x+1)(x+2)
    modpoly a = product_of({modpoly(5, {1, 1}), modpoly(5, {1, 1}), modpoly(5, {2, 1})});
    CHECK(mp_squarefree_part(a) == product_of({modpoly(5, {1, 1}), modpoly(5, {2, 1})}));
    // char-p wrinkle: d/dx(x^p + c) = 0
    modpoly xp(3, {1, 0, 0, 1});
    CHECK(mp_deriv(xp).zero());
}

TEST_CASE("factorization is canonical, complete, and respects multiplicity") {
    // assembled product with a repeated factor
    modpoly l1(7, {2, 1}), l2(7, {5, 1}), q(7, {1, 0, 1});  // x^2+1 irreducible mod 7? 7 = 3 mod 4: yes
    REQUIRE(mp_irreducible(q));
    modpoly f = product_of({l1, l1, l2, q});
    auto fac = mp_factorize(f);
    REQUIRE(fac.size() == 3);
    // canonical order: by degree, then coefficients
    CHECK(fac[0].f == l1);
    CHECK(fac[0].mult == 2);
    CHECK(fac[1].f == l2);
    CHECK(fac[1].mult == 1);
    CHECK(fac[2].f == q);
    CHECK(fac[2].mult == 1);
    // reconstruction
    modpoly prod(7, {1});
    for (auto& pf : fac)
        for (int m = 0; m < pf.mult; m++) prod = mp_mul(prod, pf.f);
    CHECK(prod == mp_monic(f));

    // x^4 + 1: (x+1)^4 mod 2, two quadratics mod every odd prime
    modpoly x41_2 = mp_from_mpz(zpoly{1, 0, 0, 0, 1}, 2);
    auto f2 = mp_factorize(x41_2);
    REQUIRE(f2.size() == 1);
    CHECK(f2[0].f == modpoly(2, {1, 1}));
    CHECK(f2[0].mult == 4);
    for (u64 p : {3ULL, 5ULL, 7ULL, 11ULL, 13ULL}) {
        auto fp = mp_factorize(mp_from_mpz(zpoly{1, 0, 0, 0, 1}, p));
        REQUIRE(fp.size() == 2);
        CHECK(fp[0].f.deg() == 2);
        CHECK(fp[1].f.deg() == 2);
        CHECK(fp[0].f < fp[1].f);
    }
}

TEST_CASE("factorization on random inputs: product and determinism") {
    rng r(59);
    for (int i = 0; i < 40; i++) {
        u64 p = (i % 3 == 0) ? 2 : ((i % 3 == 1) ? 5 : 409);
        modpoly f = random_poly(r, p, 2 + (int)(r.next() % 6));
        auto fac1 = mp_factorize(f);
        auto fac2 = mp_factorize(f);
        REQUIRE(fac1.size() == fac2.size());
        modpoly prod(p, {1});
        int degsum = 0;
        for (size_t j = 0; j < fac1.size(); j++) {
            CHECK(fac1[j].f == fac2[j].f);
            CHECK(fac1[j].mult == fac2[j].mult);
            CHECK(fac1[j].f.lc() == 1);
            CHECK(mp_irreducible(fac1[j].f));
            if (j) CHECK(!(fac1[j].f < fac1[j - 1].f));  // sorted
            for (int m = 0; m < fac1[j].mult; m++) prod = mp_mul(prod, fac1[j].f);
            degsum += fac1[j].f.deg() * fac1[j].mult;
        }
        CHECK(prod == mp_monic(f));
        CHECK(degsum == f.deg());
    }
}

TEST_CASE("roots, ddf, and degree lists") {
    // (x-1)(x-3)(x^2+x+1) mod 11; x^2+x+1 has roots iff 11 = 1 mod 3 (it is not)
    modpoly f = product_of({modpoly(11, {10, 1}), modpoly(11, {8, 1}), modpoly(11, {1, 1, 1})});
    auto rts = mp_roots(f);
    CHECK(rts == std::vector<u64>{1, 3});
    auto degs = mp_factor_degrees(f);
    CHECK(degs == std::vector<int>{2, 1, 1});  // descending
    auto ddf = mp_ddf(mp_monic(f));
    int total = 0;
    for (auto& [g, d] : ddf) {
        CHECK(mp_mod(mp_monic(f), g).zero());
        total += g.deg();
    }
    CHECK(total == 4);

    CHECK(mp_roots(modpoly(13, {1})).empty());
    CHECK(mp_irreducible(modpoly(2, {1, 1, 1})));
    CHECK_FALSE(mp_irreducible(modpoly(2, {1, 0, 1})));  // (x+1)^2
}

TEST_CASE("string rendering") {
    CHECK(mp_to_string(modpoly(7, {1, 0, 3})) == std::string("[1,0,3] mod 7"));
}
