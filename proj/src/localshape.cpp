#include "galcov/localshape.hpp"
#include "galcov/modpoly.hpp"
#include "galcov/intutil.hpp"
#include <algorithm>
#include <numeric>
#include <map>
#include <set>
#include <stdexcept>

namespace galcov {

// multisets of (e,f) with d0 | f and sum e*f = m*d0, in non-increasing (e,f) order
static void block_options_rec(int remaining, int d0, int max_e, int max_f,
                              std::vector<local_piece>& cur,
                              std::vector<std::vector<local_piece>>& out) {
    if (remaining == 0) {
        out.push_back(cur);
        return;
    }
    for (int e = std::min(max_e, remaining); e >= 1; e--) {
        int fcap = remaining / e;
        if (e == max_e) fcap = std::min(fcap, max_f);
        for (int f = (fcap / d0) * d0; f >= d0; f -= d0) {
            cur.push_back({e, f});
            block_options_rec(remaining - e * f, d0, e, f, cur, out);
            cur.pop_back();
        }
    }
}

static std::vector<std::vector<local_piece>> block_options(int d0, int m) {
    std::vector<std::vector<local_piece>> out;
    std::vector<local_piece> cur;
    block_options_rec(m * d0, d0, m * d0, m * d0, cur, out);
    return out;
}

static int weight(const std::vector<local_piece>& pieces) {
    int w = 0;
    for (const auto& pc : pieces) w += (pc.e - 1) * pc.f;
    return w;
}

// all sigma restrictions to one piece, as slot->slot maps obeying sigma(tau^m r) = tau^{pm} sigma(r)
static std::vector<std::map<int, int>> piece_sigmas(const local_piece& pc,
                                                    const std::vector<int>& slots, u64 p) {
    std::vector<std::map<int, int>> res;
    int e = pc.e, f = pc.f;
    if (e == 1) {
        // single f-cycle on the slots, all cyclic orders with slots[0] first
        std::vector<int> rest(slots.begin() + 1, slots.end());
        std::sort(rest.begin(), rest.end());
        do {
            std::vector<int> cyc{slots[0]};
            cyc.insert(cyc.end(), rest.begin(), rest.end());
            std::map<int, int> m;
            for (std::size_t i = 0; i < cyc.size(); i++) m[cyc[i]] = cyc[(i + 1) % cyc.size()];
            res.push_back(m);
        } while (std::next_permutation(rest.begin(), rest.end()));
        return res;
    }
    // slot_at[blk][mm] = tau^mm applied to block representative
    std::vector<std::vector<int>> slot_at(f, std::vector<int>(e));
    for (int blk = 0; blk < f; blk++)
        for (int mm = 0; mm < e; mm++) slot_at[blk][mm] = slots[blk * e + mm];
    int pe = (int)(p % (u64)e);
    std::vector<int> blockcyc(f - 1);
    std::iota(blockcyc.begin(), blockcyc.end(), 1);
    std::sort(blockcyc.begin(), blockcyc.end());
    do {
        std::vector<int> order{0};
        order.insert(order.end(), blockcyc.begin(), blockcyc.end());
        std::vector<int> offs(f, 0);
        while (true) {
            // imgs[src_blk] = slot_at[dst_blk][offs[i]] along the block cycle
            std::vector<std::pair<int, int>> img(f);  // rep of blk maps to (block, exponent)
            for (int i = 0; i < f; i++) img[order[i]] = {order[(i + 1) % f], offs[i]};
            std::map<int, int> m;
            for (int blk = 0; blk < f; blk++) {
                auto [tb, tm] = img[blk];
                for (int mm = 0; mm < e; mm++)
                    m[slot_at[blk][mm]] = slot_at[tb][(tm + pe * mm) % e];
            }
            res.push_back(m);
            int i = 0;
            while (i < f && ++offs[i] == e) offs[i++] = 0;
            if (i == f) break;
        }
    } while (std::next_permutation(blockcyc.begin(), blockcyc.end()));
    return res;
}

struct cand_raw {
    perm tau, sigma;
    permgroup D;
    std::vector<local_piece> pieces;
};

static void enumerate_for_pieces(const std::vector<local_piece>& pieces, u64 p, int n,
                                 bool even_only, std::vector<cand_raw>& out) {
    // canonical slot assignment: consecutive ranges in piece order
    std::vector<std::vector<int>> slots;
    int next = 0;
    for (const auto& pc : pieces) {
        std::vector<int> s(pc.e * pc.f);
        std::iota(s.begin(), s.end(), next);
        next += pc.e * pc.f;
        slots.push_back(s);
    }
    perm tau = perm_identity(n);
    int lcm_ord = 1;
    for (std::size_t j = 0; j < pieces.size(); j++) {
        const auto& pc = pieces[j];
        if (pc.e > 1) {
            for (int blk = 0; blk < pc.f; blk++)
                for (int i = 0; i < pc.e; i++)
                    tau.p[slots[j][blk * pc.e + i]] = (std::uint8_t)slots[j][blk * pc.e + (i + 1) % pc.e];
            lcm_ord = (int)std::lcm(lcm_ord, pc.e);
        }
    }
    perm tau_p = perm_identity(n);
    for (u64 i = 0; i < p % (u64)lcm_ord; i++) tau_p = perm_compose(tau, tau_p);
    std::vector<std::vector<std::map<int, int>>> per_piece;
    for (std::size_t j = 0; j < pieces.size(); j++) per_piece.push_back(piece_sigmas(pieces[j], slots[j], p));
    std::vector<std::size_t> idx(pieces.size(), 0);
    while (true) {
        perm sigma = perm_identity(n);
        for (std::size_t j = 0; j < pieces.size(); j++)
            for (auto [s, d] : per_piece[j][idx[j]]) sigma.p[s] = (std::uint8_t)d;
        bool ok = !(even_only && perm_parity(sigma) != 0);
        if (ok && lcm_ord > 1) {
            perm lhs = perm_conj(sigma, tau);
            ok = std::equal(lhs.p.begin(), lhs.p.begin() + n, tau_p.p.begin());
        }
        if (ok) {
            permgroup D = group_closure(n, {tau, sigma});
            // orbits of D must be exactly the pieces
            for (std::size_t j = 0; j < pieces.size() && ok; j++) {
                std::set<int> orb{slots[j][0]};
                std::vector<int> frontier{slots[j][0]};
                while (!frontier.empty()) {
                    int q = frontier.back();
                    frontier.pop_back();
                    for (const perm* g : {&tau, &sigma})
                        if (!orb.count(g->p[q])) {
                            orb.insert(g->p[q]);
                            frontier.push_back(g->p[q]);
                        }
                }
                ok = orb == std::set<int>(slots[j].begin(), slots[j].end());
            }
            if (ok) out.push_back({tau, sigma, std::move(D), pieces});
        }
        std::size_t j = 0;
        while (j < idx.size() && ++idx[j] == per_piece[j].size()) idx[j++] = 0;
        if (j == idx.size()) break;
    }
}

localshape_report derive_local_shape(const zpoly& f, u64 p, const permgroup& G, bool even_only) {
    localshape_report rep;
    rep.p = p;
    int n = zp_deg(f);
    mpz_class disc = zp_discriminant(f);
    if (disc == 0) throw std::runtime_error("derive_local_shape: zero discriminant");
    mpz_class d = abs(disc);
    while (mpz_divisible_ui_p(d.get_mpz_t(), (unsigned long)p)) {
        mpz_divexact_ui(d.get_mpz_t(), d.get_mpz_t(), (unsigned long)p);
        rep.vdisc++;
    }
    if (rep.vdisc == 0) {
        rep.notes.push_back("p does not divide disc; unramified");
        rep.tame = true;
        return rep;
    }
    if ((u64)n >= p || mpz_divisible_ui_p(f.back().get_mpz_t(), (unsigned long)p)) {
        rep.notes.push_back("p <= deg or p | lc: tame analysis inapplicable");
        return rep;
    }
    rep.tame = true;
    rep.exact = (d == 1);
    if (rep.exact)
        rep.notes.push_back("|disc| = p^" + std::to_string(rep.vdisc) +
                            ": sum (e-1)f = " + std::to_string(rep.vdisc) +
                            " is forced (no unramified extension of Q exists)");
    else
        rep.notes.push_back("disc has other prime factors: enumerating sum (e-1)f <= v_p(disc) "
                            "of matching parity (tame upper bound)");
    // blocks from factorization mod p
    modpoly mf = mp_from_mpz(f, p);
    auto facs = mp_factorize(mf);
    std::vector<std::vector<std::vector<local_piece>>> per_block;
    for (const auto& [g, mult] : facs) {
        int d0 = g.deg();
        per_block.push_back(block_options(d0, mult));
    }
    // cartesian product -> global piece multisets, filtered by the valuation constraint
    std::set<std::vector<local_piece>> opts;
    std::vector<std::size_t> idx(per_block.size(), 0);
    while (true) {
        std::vector<local_piece> pieces;
        for (std::size_t j = 0; j < per_block.size(); j++)
            pieces.insert(pieces.end(), per_block[j][idx[j]].begin(), per_block[j][idx[j]].end());
        std::sort(pieces.begin(), pieces.end());
        int w = weight(pieces);
        bool keep = rep.exact ? (w == rep.vdisc) : (w <= rep.vdisc && (rep.vdisc - w) % 2 == 0);
        if (keep) opts.insert(pieces);
        std::size_t j = 0;
        while (j < idx.size() && ++idx[j] == per_block[j].size()) idx[j++] = 0;
        if (j == idx.size()) break;
    }
    rep.piece_options.assign(opts.begin(), opts.end());
    // enumerate candidates over all piece options, dedup by conjugacy in G
    std::vector<cand_raw> raw;
    for (const auto& pieces : rep.piece_options) enumerate_for_pieces(pieces, p, n, even_only, raw);
    std::vector<permgroup> kept;
    for (auto& c : raw) {
        bool dup = false;
        for (std::size_t j = 0; j < kept.size() && !dup; j++)
            if (kept[j].order() == c.D.order() && conjugate_subgroups(G, c.D, kept[j])) dup = true;
        if (dup) continue;
        local_candidate lc;
        lc.tau = c.tau;
        lc.sigma = c.sigma;
        lc.order = c.D.order();
        lc.pieces = c.pieces;
        lc.elems = c.D.elems;
        lc.cyclic = false;
        for (const perm& g : c.D.elems)
            if ((u64)perm_order(g) == lc.order) {
                lc.cyclic = true;
                break;
            }
        rep.classes.push_back(std::move(lc));
        kept.push_back(std::move(c.D));
    }
    return rep;
}

void mark_coverage(localshape_report& rep, const permgroup& G, const permgroup& U1, const permgroup& U2) {
    for (auto& c : rep.classes) {
        permgroup D = group_closure(G.n, {c.tau, c.sigma});
        if (conjugate_contained(G, D, U1)) c.covered_by = 1;
        else if (conjugate_contained(G, D, U2)) c.covered_by = 2;
        else c.covered_by = 0;
    }
}

bool all_covered(const localshape_report& rep) {
    if (!rep.tame) return false;
    for (const auto& c : rep.classes)
        if (c.covered_by == 0) return false;
    return true;
}

}  // namespace galcov
