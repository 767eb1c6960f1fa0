#include "galcov/modpoly.hpp"
#include <algorithm>
#include <stdexcept>
#include <sstream>

namespace galcov {

modpoly mp_from_mpz(const std::vector<mpz_class>& f, u64 p) {
    modpoly r(p);
    r.c.resize(f.size());
    for (size_t i = 0; i < f.size(); i++) {
        mpz_class m = f[i] % mpz_class((unsigned long)p);
        if (m < 0) m += (unsigned long)p;
        r.c[i] = m.get_ui();
    }
    r.trim();
    return r;
}

modpoly mp_add(const modpoly& a, const modpoly& b) {
    modpoly r(a.p);
    r.c.resize(std::max(a.c.size(), b.c.size()), 0);
    for (size_t i = 0; i < a.c.size(); i++) r.c[i] = a.c[i];
    for (size_t i = 0; i < b.c.size(); i++) { r.c[i] += b.c[i]; if (r.c[i] >= r.p) r.c[i] -= r.p; }
    r.trim();
    return r;
}

modpoly mp_sub(const modpoly& a, const modpoly& b) {
    modpoly r(a.p);
    r.c.resize(std::max(a.c.size(), b.c.size()), 0);
    for (size_t i = 0; i < a.c.size(); i++) r.c[i] = a.c[i];
    for (size_t i = 0; i < b.c.size(); i++) { r.c[i] = (r.c[i] + r.p - b.c[i]) % r.p; }
    r.trim();
    return r;
}

modpoly mp_mul(const modpoly& a, const modpoly& b) {
    if (a.zero() || b.zero()) return modpoly(a.p);
    modpoly r(a.p);
    r.c.assign(a.c.size() + b.c.size() - 1, 0);
    for (size_t i = 0; i < a.c.size(); i++) {
        if (!a.c[i]) continue;
        for (size_t j = 0; j < b.c.size(); j++)
            r.c[i + j] = (r.c[i + j] + (u128)a.c[i] * b.c[j]) % r.p;
    }
    r.trim();
    return r;
}

modpoly mp_scale(const modpoly& a, u64 k) {
    modpoly r(a.p);
    k %= a.p;
    r.c.resize(a.c.size());
    for (size_t i = 0; i < a.c.size(); i++) r.c[i] = mulmod(a.c[i], k, a.p);
    r.trim();
    return r;
}

modpoly mp_monic(const modpoly& a) {
    if (a.zero() || a.lc() == 1) return a;
    return mp_scale(a, inv_mod(a.lc(), a.p));
}

std::pair<modpoly, modpoly> mp_divmod(const modpoly& a, const modpoly& b) {
    if (b.zero()) throw std::runtime_error("mp_divmod by zero");
    modpoly q(a.p), r = a;
    if (a.deg() < b.deg()) return {q, r};
    q.c.assign(a.deg() - b.deg() + 1, 0);
    u64 inv = inv_mod(b.lc(), a.p);
    for (int i = a.deg() - b.deg(); i >= 0; i--) {
        if ((int)r.c.size() - 1 < i + b.deg()) continue;
        u64 coef = mulmod(r.c[i + b.deg()], inv, a.p);
        if (!coef) continue;
        q.c[i] = coef;
        for (int j = 0; j <= b.deg(); j++)
            r.c[i + j] = (r.c[i + j] + a.p - mulmod(coef, b.c[j], a.p)) % a.p;
        r.trim();
    }
    q.trim();
    r.trim();
    return {q, r};
}

modpoly mp_mod(const modpoly& a, const modpoly& b) { return mp_divmod(a, b).second; }

modpoly mp_gcd(modpoly a, modpoly b) {
    while (!b.zero()) {
        modpoly r = mp_mod(a, b);
        a = std::move(b);
        b = std::move(r);
    }
    return mp_monic(a);
}

modpoly mp_deriv(const modpoly& a) {
    modpoly r(a.p);
    if (a.deg() < 1) return r;
    r.c.resize(a.deg());
    for (int i = 1; i <= a.deg(); i++) r.c[i - 1] = mulmod(a.c[i], i % a.p, a.p);
    r.trim();
    return r;
}

modpoly mp_powmod(modpoly base, const mpz_class& e, const modpoly& mod) {
    modpoly r(base.p, {1});
    base = mp_mod(base, mod);
    mpz_class k = e;
    std::vector<int> bits;
    while (k > 0) { bits.push_back(mpz_tstbit(k.get_mpz_t(), 0)); k >>= 1; }
    for (auto it = bits.rbegin(); it != bits.rend(); ++it) {
        r = mp_mod(mp_mul(r, r), mod);
        if (*it) r = mp_mod(mp_mul(r, base), mod);
    }
    return r;
}

u64 mp_eval(const modpoly& a, u64 x) {
    u64 r = 0;
    for (auto it = a.c.rbegin(); it != a.c.rend(); ++it) r = (mulmod(r, x, a.p) + *it) % a.p;
    return r;
}

u64 mp_resultant(modpoly a, modpoly b) {
    u64 p = a.p;
    if (a.zero() || b.zero()) return 0;
    u64 res = 1;
    bool neg = false;
    while (true) {
        if (b.deg() == 0) {
            res = mulmod(res, powmod(b.c[0], a.deg(), p), p);
            break;
        }
        modpoly r = mp_mod(a, b);
        if (r.zero()) return 0;
        // res(a,b) = (-1)^{da db} lc(b)^{da - dr} res(b, r)
        if ((a.deg() & 1) && (b.deg() & 1)) neg = !neg;
        res = mulmod(res, powmod(b.lc(), a.deg() - r.deg(), p), p);
        a = std::move(b);
        b = std::move(r);
    }
    if (neg && res) res = p - res;
    return res;
}

// Yun over F_p handling p-th power dips: returns (squarefree factor, multiplicity) list
static std::vector<std::pair<modpoly, int>> mp_squarefree_decomp(const modpoly& f0) {
    std::vector<std::pair<modpoly, int>> out;
    u64 p = f0.p;
    modpoly f = mp_monic(f0);
    int pmult = 1;
    while (f.deg() > 0) {
        modpoly d = mp_deriv(f);
        if (d.zero()) {
            // f is a p-th power: deflate
            modpoly g(p);
            g.c.resize(f.deg() / p + 1, 0);
            for (int i = 0; i * (int)p <= f.deg(); i++) g.c[i] = f.c[i * p];
            g.trim();
            f = g;
            pmult *= (int)p;
            continue;
        }
        modpoly c = mp_gcd(f, d);
        modpoly w = mp_divmod(f, c).first;
        int i = 1;
        while (w.deg() > 0) {
            modpoly y = mp_gcd(w, c);
            modpoly z = mp_divmod(w, y).first;
            if (z.deg() > 0) out.push_back({mp_monic(z), i * pmult});
            i++;
            w = y;
            c = mp_divmod(c, y).first;
        }
        f = c;  // what's left is a p-th power (or constant)
    }
    return out;
}

std::vector<std::pair<modpoly, int>> mp_ddf(const modpoly& a) {
    // a monic squarefree
    std::vector<std::pair<modpoly, int>> out;
    modpoly f = a;
    u64 p = a.p;
    modpoly x(p, {0, 1});
    modpoly h = x;  // x^{p^i} mod f
    int i = 0;
    while (f.deg() >= 2 * (i + 1)) {
        i++;
        h = mp_powmod(h, mpz_class((unsigned long)p), f);
        modpoly g = mp_gcd(mp_sub(h, x), f);
        if (g.deg() > 0) {
            out.push_back({g, i});
            f = mp_divmod(f, g).first;
            h = mp_mod(h, f);
        }
    }
    if (f.deg() > 0) out.push_back({f, f.deg()});
    return out;
}

// deterministic equal-degree splitting: seed derived from (p, f)
static void mp_edf(const modpoly& f, int d, std::vector<modpoly>& out) {
    if (f.deg() == d) { out.push_back(mp_monic(f)); return; }
    u64 p = f.p;
    u64 seed = hash64(p);
    for (u64 ci : f.c) seed = hash_combine(seed, ci);
    seed = hash_combine(seed, (u64)d);
    mpz_class pd;
    mpz_ui_pow_ui(pd.get_mpz_t(), p, d);
    while (true) {
        // deterministic pseudorandom poly of degree < 2d (degree < deg f is enough)
        modpoly r(p);
        int rd = std::min(f.deg() - 1, 2 * d);
        r.c.resize(rd + 1);
        for (int i = 0; i <= rd; i++) r.c[i] = splitmix64(seed) % p;
        r.trim();
        if (r.deg() < 1) continue;
        modpoly g;
        if (p == 2) {
            // trace map: r + r^2 + r^4 + ... + r^{2^{d-1}}
            modpoly t = mp_mod(r, f), acc = t;
            for (int i = 1; i < d; i++) {
                t = mp_mod(mp_mul(t, t), f);
                acc = mp_add(acc, t);
            }
            g = mp_gcd(acc, f);
        } else {
            mpz_class e = (pd - 1) / 2;
            modpoly s = mp_powmod(r, e, f);
            g = mp_gcd(mp_sub(s, modpoly(p, {1})), f);
        }
        if (g.deg() > 0 && g.deg() < f.deg()) {
            mp_edf(g, d, out);
            mp_edf(mp_divmod(f, g).first, d, out);
            return;
        }
    }
}

modpoly mp_squarefree_part(const modpoly& a) {
    modpoly out(a.p, {1});
    for (auto& [sf, mult] : mp_squarefree_decomp(a)) out = mp_mul(out, sf);
    return out;
}

std::vector<mp_factor> mp_factorize(const modpoly& a) {
    if (a.deg() < 1) return {};
    std::vector<mp_factor> out;
    for (auto& [sf, mult] : mp_squarefree_decomp(a)) {
        for (auto& [prod, d] : mp_ddf(sf)) {
            std::vector<modpoly> irr;
            mp_edf(prod, d, irr);
            for (auto& f : irr) out.push_back({f, mult});
        }
    }
    std::sort(out.begin(), out.end(), [](const mp_factor& x, const mp_factor& y) { return x.f < y.f; });
    return out;
}

std::vector<int> mp_factor_degrees(const modpoly& a) {
    std::vector<int> out;
    for (auto& [sf, mult] : mp_squarefree_decomp(a))
        for (auto& [prod, d] : mp_ddf(sf))
            for (int i = 0; i < prod.deg() / d; i++)
                for (int m = 0; m < mult; m++) out.push_back(d);
    std::sort(out.rbegin(), out.rend());
    return out;
}

bool mp_irreducible(const modpoly& a) {
    if (a.deg() < 1) return false;
    if (a.deg() == 1) return true;
    auto sf = mp_squarefree_decomp(a);
    if (sf.size() != 1 || sf[0].second != 1 || sf[0].first.deg() != a.deg()) return false;
    auto dd = mp_ddf(sf[0].first);
    return dd.size() == 1 && dd[0].second == a.deg();
}

std::vector<u64> mp_roots(const modpoly& a) {
    std::vector<u64> out;
    if (a.deg() < 1) return out;
    u64 p = a.p;
    if (p <= 4096 || (u64)a.deg() * a.deg() > p / 4) {
        for (u64 x = 0; x < p; x++)
            if (mp_eval(a, x) == 0) out.push_back(x);
        return out;
    }
    // gcd with x^p - x, then factor the all-linear part
    modpoly f = mp_monic(a);
    modpoly xp = mp_powmod(modpoly(p, {0, 1}), mpz_class((unsigned long)p), f);
    modpoly lin = mp_gcd(mp_sub(xp, modpoly(p, {0, 1})), f);
    // repeated roots of a beyond squarefree part are still roots; lin has each root once
    if (lin.deg() < 1) return out;
    std::vector<modpoly> stack{lin};
    u64 seed = hash64(p ^ 0x5eedULL);
    for (u64 ci : a.c) seed = hash_combine(seed, ci);
    while (!stack.empty()) {
        modpoly f2 = stack.back();
        stack.pop_back();
        if (f2.deg() == 1) {
            out.push_back(mulmod(p - f2.c[0] % p, inv_mod(f2.c[1], p), p));
            continue;
        }
        while (true) {
            u64 sh = splitmix64(seed) % p;
            modpoly r(p, {sh, 1});
            modpoly s = mp_powmod(r, mpz_class((unsigned long)((p - 1) / 2)), f2);
            modpoly g = mp_gcd(mp_sub(s, modpoly(p, {1})), f2);
            if (g.deg() > 0 && g.deg() < f2.deg()) {
                stack.push_back(g);
                stack.push_back(mp_divmod(f2, g).first);
                break;
            }
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::string mp_to_string(const modpoly& a) {
    std::ostringstream os;
    os << "[";
    for (size_t i = 0; i < a.c.size(); i++) os << (i ? "," : "") << a.c[i];
    os << "] mod " << a.p;
    return os.str();
}

}  // namespace galcov
