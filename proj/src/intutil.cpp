#include "galcov/intutil.hpp"
#include <stdexcept>
#include <algorithm>

namespace galcov {

u64 powmod(u64 a, u64 e, u64 m) {
    u64 r = 1 % m;
    a %= m;
    while (e) {
        if (e & 1) r = mulmod(r, a, m);
        a = mulmod(a, a, m);
        e >>= 1;
    }
    return r;
}

u64 gcd_u64(u64 a, u64 b) {
    while (b) { u64 t = a % b; a = b; b = t; }
    return a;
}

u64 inv_mod(u64 a, u64 p) { return powmod(a % p, p - 2, p); }

static bool mr_witness(u64 n, u64 a, u64 d, int r) {
    a %= n;
    if (a == 0) return false;
    u64 x = powmod(a, d, n);
    if (x == 1 || x == n - 1) return false;
    for (int i = 1; i < r; i++) {
        x = mulmod(x, x, n);
        if (x == n - 1) return false;
    }
    return true;
}

bool is_prime_u64(u64 n) {
    if (n < 2) return false;
    for (u64 p : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
        if (n % p == 0) return n == p;
    }
    u64 d = n - 1;
    int r = 0;
    while (!(d & 1)) { d >>= 1; r++; }
    // deterministic base set for 64-bit
    for (u64 a : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull})
        if (mr_witness(n, a, d, r)) return false;
    return true;
}

bool is_prime_mpz(const mpz_class& n) {
    if (n.fits_ulong_p()) return is_prime_u64(n.get_ui());
    return mpz_probab_prime_p(n.get_mpz_t(), 40) > 0;
}

u64 next_prime_u64(u64 n) {
    u64 c = n + 1;
    if (c <= 2) return 2;
    if (!(c & 1)) c++;
    while (!is_prime_u64(c)) c += 2;
    return c;
}

u64 splitmix64(u64& state) {
    u64 z = (state += 0x9e3779b97f4a7c15ull);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
}

u64 hash64(u64 x) { u64 s = x; return splitmix64(s); }
u64 hash_combine(u64 h, u64 x) { return hash64(h ^ (x + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2))); }

static u64 pollard_rho(u64 n) {
    if (!(n & 1)) return 2;
    u64 seed = n;
    for (int attempt = 0; attempt < 64; attempt++) {
        u64 c = splitmix64(seed) % (n - 1) + 1;
        u64 x = splitmix64(seed) % n, y = x, d = 1;
        auto f = [&](u64 v) { return (mulmod(v, v, n) + c) % n; };
        while (d == 1) {
            x = f(x);
            y = f(f(y));
            d = gcd_u64(x > y ? x - y : y - x, n);
        }
        if (d != n) return d;
    }
    throw std::runtime_error("pollard_rho failed");
}

static void factor_u64_into(u64 n, std::vector<mpz_class>& out) {
    if (n == 1) return;
    if (is_prime_u64(n)) { out.emplace_back((unsigned long)n); return; }
    u64 d = pollard_rho(n);
    factor_u64_into(d, out);
    factor_u64_into(n / d, out);
}

std::vector<std::pair<mpz_class, int>> factor_mpz(const mpz_class& n) {
    mpz_class m = abs(n);
    if (m <= 1) return {};
    std::vector<mpz_class> fl;
    for (u64 p = 2; p < 100000 && m > 1; p = (p == 2 ? 3 : p + 2)) {
        if (mpz_divisible_ui_p(m.get_mpz_t(), p)) {
            while (mpz_divisible_ui_p(m.get_mpz_t(), p)) {
                fl.emplace_back((unsigned long)p);
                mpz_divexact_ui(m.get_mpz_t(), m.get_mpz_t(), p);
            }
        }
        if (mpz_class(p) * p > m) break;
    }
    if (m > 1) {
        if (is_prime_mpz(m)) fl.push_back(m);
        else if (m.fits_ulong_p()) factor_u64_into(m.get_ui(), fl);
        else {
            // square / small-prime leftovers beyond the word cap
            mpz_class r;
            if (mpz_perfect_square_p(m.get_mpz_t())) {
                mpz_sqrt(r.get_mpz_t(), m.get_mpz_t());
                if (is_prime_mpz(r)) { fl.push_back(r); fl.push_back(r); }
                else throw std::runtime_error("factor_mpz: composite square cofactor");
            } else
                throw std::runtime_error("factor_mpz: unfactored cofactor");
        }
    }
    std::sort(fl.begin(), fl.end());
    std::vector<std::pair<mpz_class, int>> out;
    for (auto& p : fl) {
        if (!out.empty() && out.back().first == p) out.back().second++;
        else out.push_back({p, 1});
    }
    return out;
}

std::vector<std::pair<mpz_class, int>> ramified_primes(const mpz_class& disc) {
    if (disc == 0) throw std::runtime_error("ramified_primes: zero discriminant");
    return factor_mpz(disc);
}

std::vector<u64> primes_upto(u64 bound) {
    std::vector<bool> comp(bound + 1, false);
    std::vector<u64> out;
    for (u64 i = 2; i <= bound; i++) {
        if (!comp[i]) {
            out.push_back(i);
            for (u64 j = i * i; j <= bound; j += i) comp[j] = true;
        }
    }
    return out;
}

mpz_class binom_mpz(unsigned n, unsigned k) {
    mpz_class r;
    mpz_bin_uiui(r.get_mpz_t(), n, k);
    return r;
}

}  // namespace galcov
