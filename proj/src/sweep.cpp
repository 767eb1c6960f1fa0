#include "galcov/sweep.hpp"
#include "galcov/modpoly.hpp"
#include <algorithm>
#include <stdexcept>

namespace galcov {

static int vp(mpz_class x, u64 p) {
    int v = 0;
    while (x != 0 && mpz_divisible_ui_p(x.get_mpz_t(), p)) {
        mpz_divexact_ui(x.get_mpz_t(), x.get_mpz_t(), p);
        v++;
    }
    return v;
}

// p does not divide Res(h, h'): a root mod p lifts uniquely (Hensel), so the
// mod-p root count decides Q_p
static bool root_mod_p(const zpoly& h, u64 p) {
    modpoly hp = mp_from_mpz(h, p);
    if (hp.deg() <= 1) return hp.deg() == 1;
    modpoly x(p, {0, 1});
    modpoly xp = mp_powmod(x, mpz_class((unsigned long)p), hp);
    modpoly d = mp_gcd(mp_sub(xp, x), hp);
    return d.deg() > 0;
}

// bounded lifting tree at a prime dividing Res(h, h'); sound and complete for
// monic integral h, decision depth at most 2*v_p(Res) + 1
static sweep_decision decide_ramified(const zpoly& h, const zpoly& dh, u64 p, const mpz_class& R) {
    int v = vp(R, p);
    int kstar = 2 * v + 1;
    struct node {
        mpz_class a;
        int k;
    };
    std::vector<node> frontier;
    for (u64 r : mp_roots(mp_from_mpz(h, p))) frontier.push_back({mpz_class((unsigned long)r), 1});
    int depth = 1;
    while (!frontier.empty()) {
        std::vector<node> next;
        for (auto& nd : frontier) {
            mpz_class ha = zp_eval(h, nd.a);
            if (ha == 0) return {p, true, nd.k};  // exact integer root
            mpz_class da = zp_eval(dh, nd.a);
            int vh = vp(ha, p);
            if (da != 0) {
                int vd = vp(da, p);
                if (vh > 2 * vd) return {p, true, nd.k};  // Newton criterion
            }
            if (nd.k >= kstar)
                throw std::runtime_error("sweep: lifting tree exceeded its sound depth");
            // children a + t*p^k with h == 0 mod p^{k+1}:
            // linearize h(a + t p^k) == h(a) + t p^k h'(a) (mod p^{k+1})
            mpz_class pk;
            mpz_ui_pow_ui(pk.get_mpz_t(), p, nd.k);
            mpz_class c = ha / pk;
            u64 cm = mpz_fdiv_ui(c.get_mpz_t(), p);
            u64 dm = mpz_fdiv_ui(da.get_mpz_t(), p);
            if (dm != 0) {
                u64 t = mulmod(p - cm, inv_mod(dm, p), p);
                next.push_back({nd.a + mpz_class((unsigned long)t) * pk, nd.k + 1});
            } else if (cm == 0) {
                for (u64 t = 0; t < p; t++)
                    next.push_back({nd.a + mpz_class((unsigned long)t) * pk, nd.k + 1});
            }
            // dm == 0, cm != 0: dead branch
        }
        frontier = std::move(next);
        depth++;
        if (frontier.size() > 100000) throw std::runtime_error("sweep: lifting tree too wide");
    }
    return {p, false, depth};
}

// all integer roots of monic h (monic => every rational root is an integer),
// found by lifting the roots at one unramified prime past the Cauchy bound;
// avoids factoring the constant term
static std::vector<mpz_class> monic_integer_roots(const zpoly& h, const mpz_class& R) {
    u64 p = 2;
    while (mpz_divisible_ui_p(R.get_mpz_t(), p)) p = next_prime_u64(p);
    mpz_class bound = 0;
    for (const auto& c : h) {
        mpz_class a = abs(c);
        if (a > bound) bound = a;
    }
    bound = 2 * (bound + 1);
    std::vector<mpz_class> cur;
    for (u64 r : mp_roots(mp_from_mpz(h, p))) cur.emplace_back((unsigned long)r);
    zpoly dh = zp_deriv(h);
    mpz_class M = p;
    while (M <= bound) {
        M = M * M;
        for (auto& r : cur) {  // simple roots: h'(r) invertible mod M
            mpz_class inv;
            if (!mpz_invert(inv.get_mpz_t(), mpz_class(zp_eval(dh, r) % M).get_mpz_t(), M.get_mpz_t()))
                throw std::runtime_error("sweep: root lift lost invertibility");
            r = ((r - zp_eval(h, r) % M * inv) % M + M) % M;
        }
    }
    std::vector<mpz_class> out;
    for (auto& r : cur) {
        if (2 * r > M) r -= M;
        if (zp_eval(h, r) == 0) out.push_back(r);
    }
    std::sort(out.begin(), out.end());
    return out;
}

sweep_report sweep_product(const std::vector<zpoly>& factors, u64 B) {
    struct decider {
        zpoly b, db;
        mpz_class R;
    };
    std::vector<decider> ds;
    sweep_report rep;
    rep.bound = B;
    for (const auto& h : factors) {
        if (zp_deg(h) < 1 || h[zp_deg(h)] != 1)
            throw std::runtime_error("sweep: need monic integral polynomials");
        decider d{h, zp_deriv(h), 0};
        d.R = zp_resultant(d.b, d.db);
        if (d.R == 0) throw std::runtime_error("sweep: polynomial is not squarefree");
        for (const auto& r : monic_integer_roots(d.b, d.R)) rep.rational_roots.push_back(r.get_str());
        ds.push_back(std::move(d));
    }
    std::sort(rep.rational_roots.begin(), rep.rational_roots.end());
    rep.no_rational_root = rep.rational_roots.empty();
    for (u64 p : primes_upto(B)) {
        bool any = false, treed = false;
        int prec = 0;
        for (const auto& d : ds) {  // unramified factors first: cheap and decisive
            if (!mpz_divisible_ui_p(d.R.get_mpz_t(), p) && root_mod_p(d.b, p)) {
                any = true;
                break;
            }
        }
        for (const auto& d : ds) {
            if (any) break;
            if (!mpz_divisible_ui_p(d.R.get_mpz_t(), p)) continue;
            sweep_decision sd = decide_ramified(d.b, d.db, p, d.R);
            treed = true;
            prec = std::max(prec, sd.precision);
            any = sd.has_root;
        }
        if (treed) rep.ramified.push_back({p, any, prec});
        if (!any) rep.failures.push_back(p);
    }
    rep.pass = rep.failures.empty() && rep.no_rational_root;
    return rep;
}

sweep_report sweep_roots_everywhere(const zpoly& h, u64 B) {
    return sweep_product({h}, B);
}

}  // namespace galcov
