#include "galcov/resolvent.hpp"
#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>

namespace galcov {

qpoly subset_sum_resolvent(const qpoly& f0, int k) {
    qpoly f = qp_monic(f0);
    int n = qp_deg(f);
    if (n < 1 || k < 1 || k > n) throw std::runtime_error("subset_sum_resolvent: bad degree/k");
    mpz_class nz = binom_mpz(n, k);
    if (nz > 5000) throw std::runtime_error("subset_sum_resolvent: resolvent degree too large");
    int N = (int)nz.get_si();

    std::vector<mpq_class> ps = qp_power_sums(f, N);  // p_1..p_N
    std::vector<mpz_class> fact(N + 1);
    fact[0] = 1;
    for (int m = 1; m <= N; m++) fact[m] = fact[m - 1] * m;

    // EGF of elementary symmetric sums of k-subset sums:
    // P_j[m] = p_m * j^m / m!  (p_0 = n);  E_0 = 1;
    // E_kk = (1/kk) * sum_{j=1..kk} (-1)^{j-1} E_{kk-j} * P_j  (series product mod t^{N+1});
    // the resolvent's m-th power sum is E_k[m] * m!.
    std::vector<std::vector<mpq_class>> P(k + 1), E(k + 1);
    for (int j = 1; j <= k; j++) {
        P[j].assign(N + 1, 0);
        mpz_class jp = 1;
        for (int m = 0; m <= N; m++) {
            mpq_class top = (m == 0 ? mpq_class((long)n) : ps[m - 1]) * mpq_class(jp);
            P[j][m] = top / mpq_class(fact[m]);
            jp *= j;
        }
    }
    E[0].assign(N + 1, 0);
    E[0][0] = 1;
    for (int kk = 1; kk <= k; kk++) {
        E[kk].assign(N + 1, 0);
        for (int j = 1; j <= kk; j++) {
            const auto& A = E[kk - j];
            const auto& B = P[j];
            bool pos = (j & 1);
            for (int a = 0; a <= N; a++) {
                if (A[a] == 0) continue;
                for (int b = 0; a + b <= N; b++) {
                    if (B[b] == 0) continue;
                    mpq_class t = A[a] * B[b];
                    if (pos) E[kk][a + b] += t;
                    else E[kk][a + b] -= t;
                }
            }
        }
        mpq_class inv_kk(1, (long)kk);
        for (auto& c : E[kk]) c *= inv_kk;
    }
    std::vector<mpq_class> q(N);
    for (int m = 1; m <= N; m++) q[m - 1] = E[k][m] * mpq_class(fact[m]);
    return qp_from_power_sums(q, N);
}

qpoly subset_product_resolvent(const qpoly& f0, int k) {
    qpoly f = qp_monic(f0);
    int n = qp_deg(f);
    if (n < 1 || k < 1 || k > n) throw std::runtime_error("subset_product_resolvent: bad degree/k");
    mpz_class nz = binom_mpz(n, k);
    if (nz > 2000) throw std::runtime_error("subset_product_resolvent: resolvent degree too large");
    int N = (int)nz.get_si();

    // power sum of the subset products at exponent m is e_k applied to the m-th
    // powers of the roots; Newton from p_{m*j}
    std::vector<mpq_class> ps = qp_power_sums(f, k * N);
    std::vector<mpq_class> q(N);
    std::vector<mpq_class> e(k + 1);
    for (int m = 1; m <= N; m++) {
        e.assign(k + 1, 0);
        e[0] = 1;
        for (int i = 1; i <= k; i++) {
            mpq_class s = 0;
            for (int j = 1; j <= i; j++) {
                mpq_class t = e[i - j] * ps[(size_t)m * j - 1];
                if (j & 1) s += t;
                else s -= t;
            }
            e[i] = s / mpq_class((long)i);
        }
        q[m - 1] = e[k];
    }
    return qp_from_power_sums(q, N);
}

qpoly cubic_resolvent(const qpoly& f0) {
    qpoly f = qp_monic(f0);
    if (qp_deg(f) != 4) throw std::runtime_error("cubic_resolvent: need a quartic");
    const mpq_class &a3 = f[3], &a2 = f[2], &a1 = f[1], &a0 = f[0];
    mpq_class p = a2 - 3 * a3 * a3 / 8;
    mpq_class q = a1 - a3 * a2 / 2 + a3 * a3 * a3 / 8;
    mpq_class r = a0 - a1 * a3 / 4 + a2 * a3 * a3 / 16 - 3 * a3 * a3 * a3 * a3 / 256;
    return qpoly{q * q, p * p - 4 * r, -2 * p, 1};
}

tschirn_result tschirnhausen(const qpoly& f0, u64 seed) {
    qpoly f = qp_monic(f0);
    int n = qp_deg(f);
    if (n < 2) throw std::runtime_error("tschirnhausen: degree too small");
    std::vector<mpq_class> ps = qp_power_sums(f, n);  // p_1..p_n
    for (int attempt = 0; attempt < 40; attempt++) {
        u64 state = seed + (u64)attempt;
        zpoly T(n);
        for (int j = 0; j < n; j++) T[j] = (long)((int)(splitmix64(state) % 7) - 3);
        zp_trim(T);
        if (zp_deg(T) < 1) continue;
        qpoly tq = qp_from_z(T);
        // power sums of T(theta): reduce T^m mod f, contract against power sums of f
        std::vector<mpq_class> q(n);
        qpoly cur{1};
        for (int m = 1; m <= n; m++) {
            cur = qp_divmod(qp_mul(cur, tq), f).second;
            mpq_class s = 0;
            if (!cur.empty()) s = cur[0] * mpq_class((long)n);
            for (int j = 1; j < (int)cur.size(); j++) s += cur[j] * ps[j - 1];
            q[m - 1] = s;
        }
        qpoly g = qp_from_power_sums(q, n);
        if (!qp_is_squarefree(g)) continue;
        return {g, T, seed + (u64)attempt};
    }
    throw std::runtime_error("tschirnhausen: no squarefree transform found in 40 attempts");
}

even_subset_result trace_zero_subset_even(const qpoly& f0, int k) {
    qpoly f = qp_monic(f0);
    int n = qp_deg(f);
    if (n != 2 * k) throw std::runtime_error("trace_zero_subset_even: need deg f = 2k");
    auto [shifted, sh] = qp_trace_zero(f);
    qpoly R = subset_sum_resolvent(shifted, k);
    // complementary k-subsets have opposite sums, so R is even in x
    return {qp_even_split(R), sh};
}

// ---------------------------------------------------------------------------
// split-prime p-adic replay helpers

std::vector<u64> fully_split_primes(const zpoly& f, int count, const mpz_class& avoid_divisor_of) {
    int n = zp_deg(f);
    if (n < 1 || f[n] != 1) throw std::runtime_error("fully_split_primes: need monic");
    mpz_class disc = zp_discriminant(f);
    if (disc == 0) throw std::runtime_error("fully_split_primes: not squarefree");
    std::vector<u64> out;
    u64 p = (u64)n;
    while ((int)out.size() < count) {
        p = next_prime_u64(p);
        if (mpz_divisible_ui_p(disc.get_mpz_t(), p)) continue;
        if (mpz_divisible_ui_p(avoid_divisor_of.get_mpz_t(), p)) continue;
        modpoly fp = mp_from_mpz(f, p);
        if (fp.deg() != n) continue;
        modpoly x(p, {0, 1});
        if (mp_powmod(x, mpz_class((unsigned long)p), fp) == mp_mod(x, fp)) out.push_back(p);
    }
    return out;
}

static mpz_class eval_mod(const zpoly& f, const mpz_class& a, const mpz_class& M) {
    mpz_class r = 0;
    for (int i = zp_deg(f); i >= 0; i--) {
        r = r * a + f[i];
        mpz_mod(r.get_mpz_t(), r.get_mpz_t(), M.get_mpz_t());
    }
    return r;
}

// Hensel-lift the simple roots of f mod p to mod `target` (a power of p)
static std::vector<mpz_class> lift_roots(const zpoly& f, u64 p, const std::vector<u64>& roots0,
                                         const mpz_class& target) {
    zpoly df = zp_deriv(f);
    std::vector<mpz_class> r(roots0.begin(), roots0.end());
    mpz_class M = (unsigned long)p;
    while (M < target) {
        M = M * M;
        if (M > target) M = target;
        for (auto& a : r) {
            mpz_class fa = eval_mod(f, a, M);
            mpz_class da = eval_mod(df, a, M);
            mpz_class inv;
            if (!mpz_invert(inv.get_mpz_t(), da.get_mpz_t(), M.get_mpz_t()))
                throw std::runtime_error("lift_roots: derivative not invertible");
            a = a - fa * inv;
            mpz_mod(a.get_mpz_t(), a.get_mpz_t(), M.get_mpz_t());
        }
    }
    return r;
}

// prod (x - v) over vals, coefficients mod M, then symmetric lift
static zpoly assemble_from_values(const std::vector<mpz_class>& vals, const mpz_class& M) {
    std::vector<mpz_class> c{1};
    for (const auto& v : vals) {
        std::vector<mpz_class> nw(c.size() + 1);
        for (size_t i = 0; i < c.size(); i++) {
            nw[i + 1] += c[i];
            nw[i] -= v * c[i];
        }
        for (auto& x : nw) mpz_mod(x.get_mpz_t(), x.get_mpz_t(), M.get_mpz_t());
        c = std::move(nw);
    }
    mpz_class half = M / 2;
    for (auto& x : c)
        if (x > half) x -= M;
    return c;
}

// smallest power of p exceeding bound, then two extra factors of p for margin
static mpz_class modulus_above(u64 p, const mpz_class& bound) {
    mpz_class M = (unsigned long)p;
    while (M <= bound) M *= (unsigned long)p;
    M *= (unsigned long)p;
    M *= (unsigned long)p;
    return M;
}

// ---------------------------------------------------------------------------
// block-design resolvents

namespace {

using block = unsigned;             // bitmask of points
using design = std::vector<block>;  // sorted block list

design base_design(int n) {
    std::set<block> bl;
    if (n == 7) {
        // Fano lines: points 0..6 are the nonzero vectors 1..7 of F_2^3
        for (int a = 1; a < 8; a++)
            for (int b = a + 1; b < 8; b++) {
                int c = a ^ b;
                if (c > b) bl.insert((1u << (a - 1)) | (1u << (b - 1)) | (1u << (c - 1)));
            }
        if (bl.size() != 7) throw std::runtime_error("base_design: fano construction failed");
    } else if (n == 8) {
        // AG(3,2) planes: points 0..7 are the vectors of F_2^3
        for (int w = 1; w < 8; w++)
            for (int par = 0; par < 2; par++) {
                block m = 0;
                for (int v = 0; v < 8; v++)
                    if (__builtin_popcount((unsigned)(v & w)) % 2 == par) m |= 1u << v;
                bl.insert(m);
            }
        if (bl.size() != 14) throw std::runtime_error("base_design: ag32 construction failed");
    } else {
        throw std::runtime_error("base_design: points must be 7 or 8");
    }
    return design(bl.begin(), bl.end());
}

design relabel(const design& D, const int* g, int n) {
    std::set<block> bl;
    for (block b : D) {
        block m = 0;
        for (int p = 0; p < n; p++)
            if (b & (1u << p)) m |= 1u << g[p];
        bl.insert(m);
    }
    return design(bl.begin(), bl.end());
}

std::vector<design> design_orbit(const design& D0, int n) {
    // BFS under consecutive 3-cycles (generators of A_n acting by relabeling)
    std::vector<std::array<int, 8>> gens;
    for (int i = 0; i + 2 < n; i++) {
        std::array<int, 8> g{};
        for (int j = 0; j < n; j++) g[j] = j;
        g[i] = i + 1, g[i + 1] = i + 2, g[i + 2] = i;
        gens.push_back(g);
    }
    std::set<design> seen{D0};
    std::vector<design> queue{D0}, out{D0};
    while (!queue.empty()) {
        design D = queue.back();
        queue.pop_back();
        for (auto& g : gens) {
            design D2 = relabel(D, g.data(), n);
            if (seen.insert(D2).second) {
                queue.push_back(D2);
                out.push_back(D2);
            }
        }
    }
    return out;
}

std::vector<mpz_class> design_values(const std::vector<design>& orbit,
                                     const std::vector<mpz_class>& roots, const mpz_class& M) {
    std::vector<mpz_class> vals;
    vals.reserve(orbit.size());
    for (const auto& D : orbit) {
        mpz_class v = 0;
        for (block b : D) {
            mpz_class t = 1;
            for (int p = 0; b >> p; p++)
                if (b & (1u << p)) {
                    t *= roots[p];
                    mpz_mod(t.get_mpz_t(), t.get_mpz_t(), M.get_mpz_t());
                }
            v += t;
        }
        mpz_mod(v.get_mpz_t(), v.get_mpz_t(), M.get_mpz_t());
        vals.push_back(v);
    }
    return vals;
}

}  // namespace

design_result design_resolvent(const zpoly& f, const std::string& kind) {
    int n;
    int block_size;
    if (kind == "fano7") n = 7, block_size = 3;
    else if (kind == "ag32") n = 8, block_size = 4;
    else throw std::runtime_error("design_resolvent: kind must be fano7 or ag32");
    if (zp_deg(f) != n || f[n] != 1)
        throw std::runtime_error("design_resolvent: need monic of matching degree");

    design D0 = base_design(n);
    int tw[8];
    for (int j = 0; j < n; j++) tw[j] = j;
    std::swap(tw[0], tw[1]);
    design D1 = relabel(D0, tw, n);
    auto orbA = design_orbit(D0, n), orbB = design_orbit(D1, n);
    if (orbA.size() != 15 || orbB.size() != 15)
        throw std::runtime_error("design_resolvent: unexpected orbit size");
    std::set<design> sA(orbA.begin(), orbA.end());
    for (auto& D : orbB)
        if (sA.count(D)) throw std::runtime_error("design_resolvent: orbits not disjoint");

    // value bound: #blocks * (Cauchy root bound)^blocksize; coefficient bound
    // 2 * C(15,7) * vb^15
    mpz_class rb = zp_root_bound(f);
    mpz_class vb = (int)D0.size();
    for (int i = 0; i < block_size; i++) vb *= rb;
    mpz_class cb = 2 * binom_mpz(15, 7);
    for (int i = 0; i < 15; i++) cb *= vb;

    auto ps = fully_split_primes(f, 2);
    std::vector<zpoly> results;
    for (u64 p : ps) {
        mpz_class M = modulus_above(p, cb);
        modpoly fp = mp_from_mpz(f, p);
        std::vector<u64> r0 = mp_roots(fp);  // ascending
        if ((int)r0.size() != n) throw std::runtime_error("design_resolvent: root count");
        auto roots = lift_roots(f, p, r0, M);
        zpoly best;
        for (const auto* orb : {&orbA, &orbB}) {
            auto vals = design_values(*orb, roots, M);
            std::set<mpz_class> dist(vals.begin(), vals.end());
            if (dist.size() != vals.size())
                throw std::runtime_error("design_resolvent: value collision");
            zpoly g = assemble_from_values(vals, M);
            if (best.empty() || g < best) best = g;
        }
        results.push_back(best);
    }
    if (results[0] != results[1]) throw std::runtime_error("design_resolvent: prime mismatch");
    return {results[0], ps};
}

// ---------------------------------------------------------------------------
// pentagon sextic

pentagon_result pentagon_sextic(const zpoly& f, u64 seed) {
    if (zp_deg(f) != 5 || f[5] != 1) throw std::runtime_error("pentagon_sextic: need monic quintic");

    qpoly A = subset_sum_resolvent(qp_from_z(f), 2);  // degree 10, roots r_i + r_j
    tschirn_result ts = tschirnhausen(A, seed);
    auto [A2, sh] = qp_trace_zero(ts.g);
    auto [B, scale] = qp_integral_model(A2);

    // pair indexing: lexicographic over 0 <= i < j < 5
    std::vector<std::pair<int, int>> pairs;
    for (int i = 0; i < 5; i++)
        for (int j = i + 1; j < 5; j++) pairs.push_back({i, j});

    // the 12 edge sets of 5-cycles on K5, as bitmasks over the 10 pair indices
    std::set<unsigned> pent;
    std::vector<int> perm{1, 2, 3, 4};
    std::map<std::pair<int, int>, int> pidx;
    for (int t = 0; t < 10; t++) pidx[pairs[t]] = t;
    do {
        int cyc[5] = {0, perm[0], perm[1], perm[2], perm[3]};
        unsigned m = 0;
        for (int t = 0; t < 5; t++) {
            int a = cyc[t], b = cyc[(t + 1) % 5];
            m |= 1u << pidx[{std::min(a, b), std::max(a, b)}];
        }
        pent.insert(m);
    } while (std::next_permutation(perm.begin(), perm.end()));
    if (pent.size() != 12) throw std::runtime_error("pentagon_sextic: cycle enumeration failed");
    std::vector<std::pair<unsigned, unsigned>> cpairs;  // pentagon + complementary pentagon
    for (unsigned m : pent) {
        unsigned c = (~m) & 0x3FFu;
        if (!pent.count(c)) throw std::runtime_error("pentagon_sextic: complement missing");
        if (m < c) cpairs.push_back({m, c});
    }
    if (cpairs.size() != 6) throw std::runtime_error("pentagon_sextic: pairing failed");

    // coefficient bound: |squared sum| <= (5 * root bound of B)^2, six roots
    mpz_class rb = zp_root_bound(B);
    mpz_class vb = 5 * rb;
    vb *= vb;
    mpz_class cb = 2 * binom_mpz(6, 3);
    for (int i = 0; i < 6; i++) cb *= vb;

    mpz_class avoid = sh.get_den() * scale;
    auto ps = fully_split_primes(f, 2, avoid);
    std::vector<zpoly> results;
    for (u64 p : ps) {
        mpz_class M = modulus_above(p, cb);
        modpoly fp = mp_from_mpz(f, p);
        std::vector<u64> r0 = mp_roots(fp);
        if (r0.size() != 5) throw std::runtime_error("pentagon_sextic: root count");
        auto roots = lift_roots(f, p, r0, M);

        mpz_class shv, inv;
        if (!mpz_invert(inv.get_mpz_t(), mpz_class(sh.get_den()).get_mpz_t(), M.get_mpz_t()))
            throw std::runtime_error("pentagon_sextic: shift denominator not invertible");
        shv = sh.get_num() * inv;
        mpz_mod(shv.get_mpz_t(), shv.get_mpz_t(), M.get_mpz_t());

        // pair values b_ij = scale * (T(r_i + r_j) - shift)
        std::vector<mpz_class> b(10);
        mpz_class total = 0;
        for (int t = 0; t < 10; t++) {
            mpz_class u = roots[pairs[t].first] + roots[pairs[t].second];
            mpz_mod(u.get_mpz_t(), u.get_mpz_t(), M.get_mpz_t());
            mpz_class tv = eval_mod(ts.T, u, M);
            b[t] = scale * (tv - shv);
            mpz_mod(b[t].get_mpz_t(), b[t].get_mpz_t(), M.get_mpz_t());
            total += b[t];
        }
        mpz_mod(total.get_mpz_t(), total.get_mpz_t(), M.get_mpz_t());
        if (total != 0) throw std::runtime_error("pentagon_sextic: trace not zero mod M");

        std::vector<mpz_class> thetas;
        for (auto [m, c] : cpairs) {
            mpz_class s1 = 0, s2 = 0;
            for (int t = 0; t < 10; t++) {
                if (m & (1u << t)) s1 += b[t];
                if (c & (1u << t)) s2 += b[t];
            }
            mpz_class chk = s1 + s2;
            mpz_mod(chk.get_mpz_t(), chk.get_mpz_t(), M.get_mpz_t());
            if (chk != 0) throw std::runtime_error("pentagon_sextic: complement sums differ");
            mpz_class th = s1 * s1;
            mpz_mod(th.get_mpz_t(), th.get_mpz_t(), M.get_mpz_t());
            thetas.push_back(th);
        }
        results.push_back(assemble_from_values(thetas, M));
    }
    if (results[0] != results[1]) throw std::runtime_error("pentagon_sextic: prime mismatch");
    return {results[0], B, ts.T, sh, scale, ts.seed_eff, ps};
}

}  // namespace galcov
