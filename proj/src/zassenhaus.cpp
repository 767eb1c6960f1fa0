#include "galcov/zassenhaus.hpp"
#include <algorithm>
#include <functional>
#include <stdexcept>

namespace galcov {

static zpoly zp_gcd_primitive(zpoly a, zpoly b) {
    if (a.empty()) return b;
    if (b.empty()) return a;
    a = zp_primitive(a);
    b = zp_primitive(b);
    if (zp_deg(a) < zp_deg(b)) std::swap(a, b);
    while (!b.empty()) {
        zpoly r = a;
        int db = zp_deg(b);
        mpz_class lb = b.back();
        while (!r.empty() && zp_deg(r) >= db) {
            int k = zp_deg(r) - db;
            mpz_class top = r.back();
            for (auto& c : r) c *= lb;
            for (int j = 0; j <= db; j++) r[k + j] -= top * b[j];
            zp_trim(r);
        }
        a = std::move(b);
        b = r.empty() ? zpoly{} : zp_primitive(r);
    }
    return a;
}

std::vector<std::pair<zpoly, int>> zz_squarefree(const zpoly& f0) {
    zpoly f = zp_primitive(f0);
    std::vector<std::pair<zpoly, int>> out;
    if (zp_deg(f) < 1) return out;
    zpoly d = zp_deriv(f);
    zpoly a = zp_gcd_primitive(f, d);
    if (zp_deg(a) == 0) { out.push_back({f, 1}); return out; }
    zpoly w = zp_divexact(f, a);  // product of distinct factors
    zpoly c = a;
    int i = 1;
    while (zp_deg(w) > 0) {
        zpoly y = zp_gcd_primitive(w, c);
        zpoly z = zp_divexact(w, y);
        if (zp_deg(z) > 0) out.push_back({zp_primitive(z), i});
        i++;
        w = y;
        if (zp_deg(w) == 0) break;
        c = zp_divexact(c, y);
    }
    return out;
}

std::vector<u64> zz_good_primes(const zpoly& f, int count) {
    mpz_class lead = f.back();
    mpz_class disc = zp_discriminant(f);
    if (disc == 0) throw std::runtime_error("zz_good_primes: not squarefree");
    std::vector<u64> out;
    u64 p = 1;
    while ((int)out.size() < count) {
        p = next_prime_u64(p);
        if (mpz_divisible_ui_p(lead.get_mpz_t(), p)) continue;
        if (mpz_divisible_ui_p(disc.get_mpz_t(), p)) continue;
        out.push_back(p);
    }
    return out;
}

std::vector<char> zz_degree_sieve(const zpoly& f, int nprimes) {
    int n = zp_deg(f);
    std::vector<char> possible(n + 1, 1);
    for (u64 p : zz_good_primes(f, nprimes)) {
        auto degs = mp_factor_degrees(mp_from_mpz(f, p));
        std::vector<char> reach(n + 1, 0);
        reach[0] = 1;
        for (int d : degs)
            for (int s = n; s >= d; s--)
                if (reach[s - d]) reach[s] = 1;
        for (int d = 0; d <= n; d++) possible[d] &= reach[d];
    }
    return possible;
}

static zpoly zp_mod_coeffs(const zpoly& a, const mpz_class& m) {
    zpoly r = a;
    for (auto& c : r) { c %= m; if (c < 0) c += m; }
    zp_trim(r);
    return r;
}

static zpoly mulred(const zpoly& a, const zpoly& b, const mpz_class& m) {
    return zp_mod_coeffs(zp_mul(a, b), m);
}

// division by monic b over Z/m
static std::pair<zpoly, zpoly> divmod_monic(const zpoly& a, const zpoly& b, const mpz_class& m) {
    zpoly r = zp_mod_coeffs(a, m), q;
    int db = zp_deg(b);
    if (db == 0) return {r, {}};
    if (zp_deg(r) >= db) q.resize(zp_deg(r) - db + 1);
    while (!r.empty() && zp_deg(r) >= db) {
        int k = zp_deg(r) - db;
        mpz_class c = r.back();
        q[k] = c;
        for (int j = 0; j < db; j++) {
            r[k + j] = (r[k + j] - c * b[j]) % m;
            if (r[k + j] < 0) r[k + j] += m;
        }
        r.pop_back();
        zp_trim(r);
    }
    zp_trim(q);
    return {q, r};
}

// one Hensel step from modulus m to m2 (m | m2, m2 | m^2): f ≡ g h, s g + t h ≡ 1 (mod m),
// h monic -> same invariants mod m2. All of g,h,s,t updated in place.
static void hensel_step(const zpoly& f, zpoly& g, zpoly& h, zpoly& s, zpoly& t, const mpz_class& m2) {
    zpoly e = zp_mod_coeffs(zp_sub(f, zp_mul(g, h)), m2);
    auto [q, r] = divmod_monic(mulred(s, e, m2), h, m2);
    zpoly gp = zp_mod_coeffs(zp_add(g, zp_add(mulred(t, e, m2), mulred(q, g, m2))), m2);
    zpoly hp = zp_mod_coeffs(zp_add(h, r), m2);
    zpoly b = zp_mod_coeffs(zp_sub(zp_add(mulred(s, gp, m2), mulred(t, hp, m2)), zpoly{1}), m2);
    auto [c, d] = divmod_monic(mulred(s, b, m2), hp, m2);
    zpoly sp = zp_mod_coeffs(zp_sub(s, d), m2);
    zpoly tp = zp_mod_coeffs(zp_sub(t, zp_add(mulred(t, b, m2), mulred(c, gp, m2))), m2);
    g = std::move(gp);
    h = std::move(hp);
    s = std::move(sp);
    t = std::move(tp);
}

// Bezout mod p for coprime monic g,h: s g + t h = 1, deg s < deg h, deg t < deg g
static void bezout_mod_p(const zpoly& g, const zpoly& h, u64 p, zpoly& s_out, zpoly& t_out) {
    modpoly gm(p), hm(p);
    gm.c.reserve(g.size());
    for (auto& c : g) gm.c.push_back(mpz_class(((c % (long)p) + (long)p) % (long)p).get_ui());
    hm.c.reserve(h.size());
    for (auto& c : h) hm.c.push_back(mpz_class(((c % (long)p) + (long)p) % (long)p).get_ui());
    gm.trim();
    hm.trim();
    modpoly r0 = gm, r1 = hm, s0(p, {1}), s1(p), t0(p), t1(p, {1});
    while (!r1.zero()) {
        auto [qq, rr] = mp_divmod(r0, r1);
        modpoly s2 = mp_sub(s0, mp_mul(qq, s1));
        modpoly t2 = mp_sub(t0, mp_mul(qq, t1));
        r0 = r1; r1 = rr;
        s0 = s1; s1 = s2;
        t0 = t1; t1 = t2;
    }
    if (r0.deg() != 0) throw std::runtime_error("bezout_mod_p: not coprime");
    u64 inv = inv_mod(r0.c[0], p);
    s0 = mp_scale(s0, inv);
    t0 = mp_scale(t0, inv);
    s_out.assign(s0.c.size(), 0);
    for (size_t i = 0; i < s0.c.size(); i++) s_out[i] = (unsigned long)s0.c[i];
    t_out.assign(t0.c.size(), 0);
    for (size_t i = 0; i < t0.c.size(); i++) t_out[i] = (unsigned long)t0.c[i];
    zp_trim(s_out);
    zp_trim(t_out);
}

// recursively lift: F monic mod pk, flist[lo..hi) its monic factorization mod p
static void lift_rec(const zpoly& F, std::vector<zpoly>& flist, int lo, int hi, u64 p, const mpz_class& pk) {
    if (hi - lo == 1) { flist[lo] = zp_mod_coeffs(F, pk); return; }
    int mid = (lo + hi + 1) / 2;
    mpz_class pm((unsigned long)p);
    zpoly g{1}, h{1};
    for (int i = lo; i < mid; i++) g = mulred(g, flist[i], pm);
    for (int i = mid; i < hi; i++) h = mulred(h, flist[i], pm);
    zpoly s, t;
    bezout_mod_p(g, h, p, s, t);
    mpz_class m((unsigned long)p);
    while (m < pk) {
        mpz_class m2 = m * m;
        if (m2 > pk) m2 = pk;
        hensel_step(zp_mod_coeffs(F, m2), g, h, s, t, m2);
        m = m2;
    }
    lift_rec(g, flist, lo, mid, p, pk);
    lift_rec(h, flist, mid, hi, p, pk);
}

hensel_result hensel_lift(const zpoly& f, u64 p, const mpz_class& bound) {
    hensel_result out;
    out.p = p;
    out.k = 1;
    mpz_class pk((unsigned long)p);
    while (pk <= bound) { pk *= (unsigned long)p; out.k++; }
    out.pk = pk;
    mpz_class lc = f.back() % pk;
    if (lc < 0) lc += pk;
    mpz_class lcinv;
    if (!mpz_invert(lcinv.get_mpz_t(), lc.get_mpz_t(), pk.get_mpz_t()))
        throw std::runtime_error("hensel_lift: lc not invertible");
    zpoly F(f.size());
    for (size_t i = 0; i < f.size(); i++) F[i] = ((f[i] * lcinv) % pk + pk) % pk;
    zp_trim(F);
    auto mf = mp_factorize(mp_from_mpz(f, p));
    std::vector<zpoly> factors;
    for (auto& [g, m] : mf) {
        if (m != 1) throw std::runtime_error("hensel_lift: not squarefree mod p");
        zpoly gz(g.c.size());
        for (size_t i = 0; i < g.c.size(); i++) gz[i] = (unsigned long)g.c[i];
        factors.push_back(gz);
    }
    if (factors.size() == 1) factors[0] = F;
    else lift_rec(F, factors, 0, (int)factors.size(), p, pk);
    out.factors = factors;
    return out;
}

static zpoly sym_lift(const zpoly& a, const mpz_class& pk) {
    zpoly r = a;
    mpz_class half = pk / 2;
    for (auto& c : r) {
        c %= pk;
        if (c < 0) c += pk;
        if (c > half) c -= pk;
    }
    zp_trim(r);
    return r;
}

// factor a squarefree primitive polynomial; returns primitive irreducible factors, lc>0
static std::vector<zpoly> zz_factor_squarefree(const zpoly& f_in) {
    zpoly f = zp_primitive(f_in);
    int n = zp_deg(f);
    std::vector<zpoly> out;
    if (n < 1) return out;
    if (n == 1) { out.push_back(f); return out; }
    auto cands = zz_good_primes(f, 7);
    u64 best = cands[0];
    size_t bestcnt = SIZE_MAX;
    for (u64 p : cands) {
        auto degs = mp_factor_degrees(mp_from_mpz(f, p));
        if (degs.size() == 1) { out.push_back(f); return out; }
        if (degs.size() < bestcnt) { bestcnt = degs.size(); best = p; }
    }
    if (bestcnt > 28) throw std::runtime_error("zz_factor_squarefree: too many modular factors");
    auto possible = zz_degree_sieve(f, 7);
    mpz_class bound = zp_factor_bound(f, n);
    auto hl = hensel_lift(f, best, bound * 2);
    std::vector<zpoly> rem = hl.factors;  // available lifted factors
    mpz_class pk = hl.pk;
    size_t cap = 12;
    size_t size = 1;
    while (2 * size <= rem.size()) {
        if (size > cap) throw std::runtime_error("zz_factor_squarefree: recombination cap exceeded");
        bool found = false;
        std::vector<size_t> idx(size);
        for (size_t i = 0; i < size; i++) idx[i] = i;
        while (true) {
            int dsum = 0;
            for (size_t i : idx) dsum += zp_deg(rem[i]);
            if (dsum <= n / 1 && possible[dsum]) {
                // trailing-coefficient pretest
                mpz_class tc = f.back();
                for (size_t i : idx) tc = (tc * rem[i][0]) % pk;
                tc %= pk;
                if (tc < 0) tc += pk;
                if (tc > pk / 2) tc -= pk;
                mpz_class t0 = f.back() * f[0];
                if (tc == 0 ? t0 == 0 : mpz_divisible_p(t0.get_mpz_t(), tc.get_mpz_t())) {
                    zpoly cand{f.back()};
                    for (size_t i : idx) cand = mulred(cand, rem[i], pk);
                    cand = sym_lift(cand, pk);
                    if (!cand.empty()) {
                        zpoly pp = zp_primitive(cand);
                        if (zp_divides(pp, f)) {
                            out.push_back(pp);
                            f = zp_divexact(f, pp);
                            std::vector<zpoly> nr;
                            for (size_t i = 0, j = 0; i < rem.size(); i++) {
                                if (j < idx.size() && idx[j] == i) { j++; continue; }
                                nr.push_back(rem[i]);
                            }
                            rem = std::move(nr);
                            found = true;
                            break;
                        }
                    }
                }
            }
            // next combination
            int i = (int)size - 1;
            while (i >= 0 && idx[i] == rem.size() - size + i) i--;
            if (i < 0) break;
            idx[i]++;
            for (size_t j = i + 1; j < size; j++) idx[j] = idx[j - 1] + 1;
        }
        if (!found) size++;
    }
    if (zp_deg(f) > 0) out.push_back(zp_primitive(f));
    return out;
}

std::vector<zfact> zz_factorize(const zpoly& f0) {
    std::vector<zfact> out;
    zpoly f = zp_primitive(f0);
    if (zp_deg(f) < 1) return out;
    for (auto& [sf, mult] : zz_squarefree(f))
        for (auto& g : zz_factor_squarefree(sf)) out.push_back({g, mult});
    std::sort(out.begin(), out.end(), [](const zfact& a, const zfact& b) {
        if (a.f.size() != b.f.size()) return a.f.size() < b.f.size();
        for (size_t i = 0; i < a.f.size(); i++)
            if (a.f[i] != b.f[i]) return a.f[i] < b.f[i];
        return a.mult < b.mult;
    });
    return out;
}

bool zz_irreducible(const zpoly& f0) {
    zpoly f = zp_primitive(f0);
    int n = zp_deg(f);
    if (n < 1) return false;
    if (n == 1) return true;
    mpz_class disc = zp_discriminant(f);
    if (disc == 0) return false;
    for (u64 p : zz_good_primes(f, 10))
        if (mp_irreducible(mp_from_mpz(f, p))) return true;
    auto poss = zz_degree_sieve(f, 15);
    bool only_trivial = true;
    for (int d = 1; d < n; d++)
        if (poss[d]) { only_trivial = false; break; }
    if (only_trivial) return true;
    return zz_factor_squarefree(f).size() == 1;
}

std::optional<zpoly> zz_target_degree_factor(const zpoly& f0, int d) {
    zpoly f = zp_primitive(f0);
    int n = zp_deg(f);
    if (d < 1 || d > n) return std::nullopt;
    if (d == n) return zz_irreducible(f) ? std::optional<zpoly>(f) : std::nullopt;
    auto poss = zz_degree_sieve(f, 7);
    if (!poss[d]) return std::nullopt;
    auto cands = zz_good_primes(f, 7);
    u64 best = cands[0];
    size_t bestcnt = SIZE_MAX;
    for (u64 p : cands) {
        auto degs = mp_factor_degrees(mp_from_mpz(f, p));
        size_t small = 0;
        for (int dd : degs)
            if (dd <= d) small++;
        if (small < bestcnt) { bestcnt = small; best = p; }
    }
    auto hl = hensel_lift(f, best, zp_factor_bound(f, d) * 2);
    // keep only factors of degree <= d, deterministic order
    std::vector<zpoly> pool;
    for (auto& g : hl.factors)
        if (zp_deg(g) <= d) pool.push_back(g);
    mpz_class pk = hl.pk;
    std::optional<zpoly> bestf;
    // DFS over subsets with degree sum exactly d
    std::vector<size_t> chosen;
    std::function<void(size_t, int)> dfs = [&](size_t start, int need) {
        if (need == 0) {
            zpoly cand{f.back()};
            for (size_t i : chosen) cand = mulred(cand, pool[i], pk);
            cand = sym_lift(cand, pk);
            if (cand.empty()) return;
            zpoly pp = zp_primitive(cand);
            if (zp_deg(pp) == d && zp_divides(pp, f) && zz_irreducible(pp)) {
                if (!bestf) bestf = pp;
                else {
                    const zpoly& a = *bestf;
                    bool lt = false;
                    for (size_t i = 0; i < pp.size(); i++) {
                        if (pp[i] != a[i]) { lt = pp[i] < a[i]; break; }
                    }
                    if (lt) bestf = pp;
                }
            }
            return;
        }
        for (size_t i = start; i < pool.size(); i++) {
            int dg = zp_deg(pool[i]);
            if (dg > need) continue;
            chosen.push_back(i);
            dfs(i + 1, need - dg);
            chosen.pop_back();
        }
    };
    dfs(0, d);
    return bestf;
}

std::vector<mpq_class> zz_rational_roots(const zpoly& f0) {
    zpoly f = zp_primitive(f0);
    std::vector<mpq_class> out;
    if (zp_deg(f) < 1) return out;
    size_t z = 0;
    while (z < f.size() && f[z] == 0) z++;
    if (z > 0) {
        out.push_back(0);
        f.erase(f.begin(), f.begin() + z);
        if (f.size() <= 1) return out;
    }
    auto fr = factor_mpz(f[0]);
    auto fs = factor_mpz(f.back());
    std::vector<mpz_class> rs{1}, ss{1};
    auto expand = [](std::vector<mpz_class>& v, const std::vector<std::pair<mpz_class, int>>& fl) {
        for (auto& [p, e] : fl) {
            size_t sz = v.size();
            mpz_class pe = 1;
            for (int i = 0; i < e; i++) {
                pe *= p;
                for (size_t j = 0; j < sz; j++) v.push_back(v[j] * pe);
            }
        }
    };
    expand(rs, fr);
    expand(ss, fs);
    for (auto& r : rs)
        for (auto& s : ss) {
            for (int sgn = 0; sgn < 2; sgn++) {
                mpq_class c(sgn ? mpz_class(-r) : r, s);
                c.canonicalize();
                mpq_class v = 0;
                for (auto it = f.rbegin(); it != f.rend(); ++it) v = v * c + mpq_class(*it);
                if (v == 0) out.push_back(c);
            }
        }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

}  // namespace galcov
