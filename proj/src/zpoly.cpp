#include "galcov/zpoly.hpp"
#include "galcov/modpoly.hpp"
#include <algorithm>
#include <stdexcept>
#include <sstream>

namespace galcov {

void zp_trim(zpoly& a) { while (!a.empty() && a.back() == 0) a.pop_back(); }
int zp_deg(const zpoly& a) { return (int)a.size() - 1; }

zpoly zp_add(const zpoly& a, const zpoly& b) {
    zpoly r(std::max(a.size(), b.size()));
    for (size_t i = 0; i < a.size(); i++) r[i] += a[i];
    for (size_t i = 0; i < b.size(); i++) r[i] += b[i];
    zp_trim(r);
    return r;
}

zpoly zp_sub(const zpoly& a, const zpoly& b) {
    zpoly r(std::max(a.size(), b.size()));
    for (size_t i = 0; i < a.size(); i++) r[i] += a[i];
    for (size_t i = 0; i < b.size(); i++) r[i] -= b[i];
    zp_trim(r);
    return r;
}

zpoly zp_mul(const zpoly& a, const zpoly& b) {
    if (a.empty() || b.empty()) return {};
    zpoly r(a.size() + b.size() - 1);
    for (size_t i = 0; i < a.size(); i++) {
        if (a[i] == 0) continue;
        for (size_t j = 0; j < b.size(); j++) r[i + j] += a[i] * b[j];
    }
    zp_trim(r);
    return r;
}

zpoly zp_scale(const zpoly& a, const mpz_class& k) {
    if (k == 0) return {};
    zpoly r = a;
    for (auto& c : r) c *= k;
    return r;
}

zpoly zp_neg(const zpoly& a) {
    zpoly r = a;
    for (auto& c : r) c = -c;
    return r;
}

zpoly zp_deriv(const zpoly& a) {
    if (a.size() <= 1) return {};
    zpoly r(a.size() - 1);
    for (size_t i = 1; i < a.size(); i++) r[i - 1] = a[i] * (long)i;
    zp_trim(r);
    return r;
}

mpz_class zp_eval(const zpoly& a, const mpz_class& x) {
    mpz_class r = 0;
    for (auto it = a.rbegin(); it != a.rend(); ++it) r = r * x + *it;
    return r;
}

mpz_class zp_content(const zpoly& a) {
    mpz_class g = 0;
    for (auto& c : a) { mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t()); if (g == 1) break; }
    return g;
}

zpoly zp_primitive(const zpoly& a) {
    if (a.empty()) return a;
    mpz_class g = zp_content(a);
    if (a.back() < 0) g = -g;
    zpoly r(a.size());
    for (size_t i = 0; i < a.size(); i++) mpz_divexact(r[i].get_mpz_t(), a[i].get_mpz_t(), g.get_mpz_t());
    return r;
}

zpoly zp_shift(const zpoly& a, const mpz_class& s) {
    // Horner: a(x+s) built from the top
    zpoly r;
    for (auto it = a.rbegin(); it != a.rend(); ++it) {
        // r = r*(x+s) + coeff
        zpoly nr(r.size() + 1);
        for (size_t i = 0; i < r.size(); i++) {
            nr[i + 1] += r[i];
            nr[i] += r[i] * s;
        }
        if (nr.empty()) nr.resize(1);
        nr[0] += *it;
        zp_trim(nr);
        r = std::move(nr);
    }
    return r;
}

zpoly zp_divexact(const zpoly& a, const zpoly& b) {
    if (b.empty()) throw std::runtime_error("zp_divexact by zero");
    if (a.empty()) return {};
    if (zp_deg(a) < zp_deg(b)) throw std::runtime_error("zp_divexact: not divisible");
    zpoly r = a, q(zp_deg(a) - zp_deg(b) + 1);
    for (int i = zp_deg(a) - zp_deg(b); i >= 0; i--) {
        mpz_class num = r[i + zp_deg(b)];
        if (num == 0) { q[i] = 0; continue; }
        mpz_class c;
        mpz_class rem;
        mpz_fdiv_qr(c.get_mpz_t(), rem.get_mpz_t(), num.get_mpz_t(), b.back().get_mpz_t());
        if (rem != 0) throw std::runtime_error("zp_divexact: not divisible");
        q[i] = c;
        for (int j = 0; j <= zp_deg(b); j++) r[i + j] -= c * b[j];
    }
    zp_trim(r);
    if (!r.empty()) throw std::runtime_error("zp_divexact: nonzero remainder");
    zp_trim(q);
    return q;
}

bool zp_divides(const zpoly& b, const zpoly& a) {
    if (b.empty()) return a.empty();
    if (a.empty()) return true;
    if (zp_deg(a) < zp_deg(b)) return false;
    try { zp_divexact(a, b); return true; } catch (...) { return false; }
}

static mpz_class pow_mpz(const mpz_class& b, unsigned e) {
    mpz_class r;
    mpz_pow_ui(r.get_mpz_t(), b.get_mpz_t(), e);
    return r;
}

// pseudo-remainder: lc(b)^(deg a - deg b + 1) * a ≡ r mod b
static zpoly pseudo_rem(const zpoly& a, const zpoly& b) {
    zpoly r = a;
    int db = zp_deg(b);
    mpz_class lb = b.back();
    int e = zp_deg(a) - db + 1;
    while (!r.empty() && zp_deg(r) >= db) {
        int k = zp_deg(r) - db;
        mpz_class top = r.back();
        for (auto& c : r) c *= lb;
        for (int j = 0; j <= db; j++) r[k + j] -= top * b[j];
        zp_trim(r);
        e--;
    }
    if (e > 0) {
        mpz_class m = pow_mpz(lb, e);
        for (auto& c : r) c *= m;
    }
    return r;
}

mpz_class zp_resultant_prs(zpoly a, zpoly b) {
    if (a.empty() || b.empty()) return 0;
    if (zp_deg(a) == 0) return pow_mpz(a[0], zp_deg(b));
    if (zp_deg(b) == 0) return pow_mpz(b[0], zp_deg(a));
    int s = 1;
    if (zp_deg(a) < zp_deg(b)) {
        if ((zp_deg(a) & 1) && (zp_deg(b) & 1)) s = -s;
        std::swap(a, b);
    }
    // positive contents keep polynomial signs intact
    mpz_class ca = abs(zp_content(a)), cb = abs(zp_content(b));
    mpz_class t = pow_mpz(ca, zp_deg(b)) * pow_mpz(cb, zp_deg(a));
    for (auto& c : a) mpz_divexact(c.get_mpz_t(), c.get_mpz_t(), ca.get_mpz_t());
    for (auto& c : b) mpz_divexact(c.get_mpz_t(), c.get_mpz_t(), cb.get_mpz_t());
    mpz_class g = 1, h = 1;
    while (true) {
        int da = zp_deg(a), db = zp_deg(b), d = da - db;
        if ((da & 1) && (db & 1)) s = -s;
        zpoly r = pseudo_rem(a, b);
        a = std::move(b);
        mpz_class div = g * pow_mpz(h, d);
        b.resize(r.size());
        for (size_t i = 0; i < r.size(); i++) mpz_divexact(b[i].get_mpz_t(), r[i].get_mpz_t(), div.get_mpz_t());
        g = a.back();
        if (d > 0) {
            // h = g^d / h^(d-1), exact
            mpz_class num = pow_mpz(g, d);
            if (d > 1) mpz_divexact(num.get_mpz_t(), num.get_mpz_t(), pow_mpz(h, d - 1).get_mpz_t());
            h = num;
        }
        if (b.empty()) return 0;
        if (zp_deg(b) == 0) {
            // final: res = s * t * lc(B)^deg(A) / h^(deg(A)-1)
            int dA = zp_deg(a);
            mpz_class num = pow_mpz(b[0], dA);
            if (dA > 1) mpz_divexact(num.get_mpz_t(), num.get_mpz_t(), pow_mpz(h, dA - 1).get_mpz_t());
            return s < 0 ? mpz_class(-t * num) : mpz_class(t * num);
        }
    }
}

mpz_class zp_resultant(const zpoly& a, const zpoly& b) {
    // dispatch: small → PRS, large → CRT
    mpz_class ma = zp_max_abs(a), mb = zp_max_abs(b);
    size_t bits = mpz_sizeinbase(ma.get_mpz_t(), 2) + mpz_sizeinbase(mb.get_mpz_t(), 2);
    if ((zp_deg(a) + zp_deg(b) <= 24) && bits <= 256) return zp_resultant_prs(a, b);
    return zp_resultant_crt(a, b);
}

mpz_class zp_discriminant(const zpoly& a) {
    int n = zp_deg(a);
    if (n < 1) throw std::runtime_error("discriminant of constant");
    mpz_class res = zp_resultant(a, zp_deriv(a));
    mpz_class d;
    mpz_divexact(d.get_mpz_t(), res.get_mpz_t(), a.back().get_mpz_t());
    int s = (n * (n - 1) / 2) % 2;
    return s ? mpz_class(-d) : d;
}

mpz_class zp_max_abs(const zpoly& a) {
    mpz_class m = 0;
    for (auto& c : a) { mpz_class t = abs(c); if (t > m) m = t; }
    return m;
}

mpz_class zp_norm2_ceil(const zpoly& a) {
    mpz_class s = 0;
    for (auto& c : a) s += c * c;
    mpz_class r;
    mpz_sqrt(r.get_mpz_t(), s.get_mpz_t());
    if (r * r < s) r += 1;
    return r;
}

mpz_class zp_factor_bound(const zpoly& a, int k) {
    // |b_i| <= binom(k, floor(k/2)) * ||a||_2 * |lc| guard for any degree-k divisor over Z
    mpz_class b = binom_mpz(k, k / 2) * zp_norm2_ceil(a);
    mpz_class la = abs(a.back());
    return b * la;
}

mpz_class zp_root_bound(const zpoly& a) {
    mpz_class m = 0;
    for (size_t i = 0; i + 1 < a.size(); i++) { mpz_class t = abs(a[i]); if (t > m) m = t; }
    mpz_class lc = abs(a.back());
    mpz_class q;
    mpz_cdiv_q(q.get_mpz_t(), m.get_mpz_t(), lc.get_mpz_t());
    return q + 1;
}

std::string zp_to_string(const zpoly& a) {
    std::ostringstream os;
    os << "[";
    for (size_t i = 0; i < a.size(); i++) os << (i ? "," : "") << a[i].get_str();
    os << "]";
    return os.str();
}

mpz_class zp_resultant_crt(const zpoly& a, const zpoly& b) {
    if (a.empty() || b.empty()) return 0;
    int da = zp_deg(a), db = zp_deg(b);
    // Hadamard-style bound: |Res| <= (da+db)! is too lax; use product of norms
    mpz_class na = zp_norm2_ceil(a) + 1, nb = zp_norm2_ceil(b) + 1;
    mpz_class bound = pow_mpz(na, db) * pow_mpz(nb, da) * 2 + 1;
    mpz_class mod = 1, res = 0;
    u64 p = (1ull << 62);
    while (mod < bound) {
        p = next_prime_u64(p);
        // p must not kill either leading coefficient
        if (mpz_divisible_ui_p(a.back().get_mpz_t(), p) || mpz_divisible_ui_p(b.back().get_mpz_t(), p))
            continue;
        u64 rp = mp_resultant(mp_from_mpz(a, p), mp_from_mpz(b, p));
        // CRT combine
        if (mod == 1) {
            res = rp;
            mod = (unsigned long)p;
        } else {
            // res' ≡ res (mod), res' ≡ rp (p)
            mpz_class pc((unsigned long)p);
            mpz_class minv;
            if (!mpz_invert(minv.get_mpz_t(), mod.get_mpz_t(), pc.get_mpz_t()))
                throw std::runtime_error("crt invert");
            mpz_class diff = ((mpz_class((unsigned long)rp) - res) % pc + pc) % pc;
            res += mod * ((diff * minv) % pc);
            mod *= pc;
        }
    }
    // symmetric lift
    if (res * 2 > mod) res -= mod;
    return res;
}

}  // namespace galcov
