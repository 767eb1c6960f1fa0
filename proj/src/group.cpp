#include "galcov/group.hpp"
#include <algorithm>
#include <stdexcept>

namespace galcov {

static std::vector<std::uint64_t> empty_bitmap(int n) {
    return std::vector<std::uint64_t>((factorial_table[n] + 63) / 64, 0);
}

static void bm_set(std::vector<std::uint64_t>& bm, std::uint32_t r) { bm[r >> 6] |= 1ull << (r & 63); }
static bool bm_get(const std::vector<std::uint64_t>& bm, std::uint32_t r) { return (bm[r >> 6] >> (r & 63)) & 1; }

permgroup group_closure(int n, const std::vector<perm>& gens) {
    permgroup G;
    G.n = n;
    G.gens = gens;
    G.bitmap = empty_bitmap(n);
    perm id = perm_identity(n);
    bm_set(G.bitmap, perm_rank(id));
    std::vector<perm> frontier{id}, all{id};
    while (!frontier.empty()) {
        std::vector<perm> next;
        for (const perm& f : frontier) {
            for (const perm& g : gens) {
                perm h = perm_compose(g, f);
                std::uint32_t r = perm_rank(h);
                if (!bm_get(G.bitmap, r)) {
                    bm_set(G.bitmap, r);
                    next.push_back(h);
                    all.push_back(h);
                }
            }
        }
        frontier = std::move(next);
    }
    std::sort(all.begin(), all.end());
    G.elems = std::move(all);
    return G;
}

std::uint64_t bsgs_order(int n, const std::vector<perm>& gens) {
    // deterministic Schreier-Sims with base 0,1,...,n-1
    std::vector<std::vector<perm>> strong(n);  // generators stabilizing 0..i-1
    std::vector<std::vector<std::optional<perm>>> transversal(n, std::vector<std::optional<perm>>(n));
    // sift-and-add with orbit recomputation
    std::vector<std::vector<perm>> S(n + 1);
    S[0] = gens;
    std::vector<std::map<int, perm>> orb(n);
    std::function<void(int)> rebuild_orbit = [&](int i) {
        orb[i].clear();
        orb[i][i] = perm_identity(n);
        std::vector<int> frontier{i};
        while (!frontier.empty()) {
            std::vector<int> next;
            for (int pt : frontier)
                for (const perm& g : S[i]) {
                    int img = g.p[pt];
                    if (!orb[i].count(img)) {
                        orb[i][img] = perm_compose(g, orb[i][pt]);
                        next.push_back(img);
                    }
                }
            frontier = std::move(next);
        }
    };
    std::function<void(int, const perm&)> add_gen = [&](int i, const perm& g) {
        if (perm_is_identity(g)) return;
        // find first base point moved
        int lvl = i;
        while (lvl < n && g.p[lvl] == lvl) lvl++;
        if (lvl >= n) return;
        // keep S[0] >= S[1] >= ... nested so sifting certifies membership level-wise
        for (int j = 0; j <= lvl; j++) {
            S[j].push_back(g);
            rebuild_orbit(j);
        }
        // Schreier generators for level lvl (snapshots: recursion below mutates S/orb)
        auto orb_snap = orb[lvl];
        auto gen_snap = S[lvl];
        for (auto& [pt, u] : orb_snap) {
            for (const perm& s : gen_snap) {
                int img = s.p[pt];
                auto it = orb[lvl].find(img);
                perm schreier = perm_compose(perm_inverse(it->second), perm_compose(s, u));
                // sift at level lvl+1
                perm cur = schreier;
                int j = lvl + 1;
                while (j < n && !perm_is_identity(cur)) {
                    int im = cur.p[j];
                    if (j >= n) break;
                    if (!orb[j].count(j)) rebuild_orbit(j);
                    auto jt = orb[j].find(im);
                    if (jt == orb[j].end()) { add_gen(j, cur); cur = perm_identity(n); break; }
                    cur = perm_compose(perm_inverse(jt->second), cur);
                    j++;
                }
            }
        }
    };
    (void)strong;
    (void)transversal;
    for (int i = 0; i < n; i++) rebuild_orbit(i);
    for (const perm& g : gens) add_gen(0, g);
    // incremental verification pass: sift all Schreier generators until stable
    bool changed = true;
    int guard = 0;
    while (changed && guard++ < 256) {
        changed = false;
        for (int i = 0; i < n; i++) {
            rebuild_orbit(i);
            auto orb_snap = orb[i];
            auto gen_snap = S[i];
            for (auto& [pt, u] : orb_snap) {
                for (const perm& s : gen_snap) {
                    int img = s.p[pt];
                    perm schreier = perm_compose(perm_inverse(orb_snap[img]), perm_compose(s, u));
                    // sift through chain from level i+1
                    perm cur = schreier;
                    int j = i + 1;
                    bool stuck = false;
                    while (j < n && !perm_is_identity(cur)) {
                        auto jt = orb[j].find(cur.p[j]);
                        if (jt == orb[j].end()) { stuck = true; break; }
                        cur = perm_compose(perm_inverse(jt->second), cur);
                        j++;
                    }
                    if (stuck || !perm_is_identity(cur)) {
                        // add residue at every level up to the first point it moves
                        int lvl = 0;
                        while (lvl < n && cur.p[lvl] == lvl) lvl++;
                        if (lvl < n) {
                            for (int k = 0; k <= lvl; k++) {
                                S[k].push_back(cur);
                                rebuild_orbit(k);
                            }
                            changed = true;
                        }
                    }
                }
            }
        }
    }
    std::uint64_t o = 1;
    for (int i = 0; i < n; i++) {
        rebuild_orbit(i);
        o *= orb[i].size();
    }
    return o;
}

permgroup sym_group(int n) {
    std::vector<perm> gens;
    if (n >= 2) {
        perm t = perm_identity(n);
        t.p[0] = 1;
        t.p[1] = 0;
        gens.push_back(t);
    }
    if (n >= 3) {
        perm c = perm_identity(n);
        for (int i = 0; i < n; i++) c.p[i] = (std::uint8_t)((i + 1) % n);
        gens.push_back(c);
    }
    return group_closure(n, gens);
}

permgroup alt_group(int n) {
    std::vector<perm> gens;
    if (n >= 3) {
        perm c = perm_identity(n);
        c.p[0] = 1; c.p[1] = 2; c.p[2] = 0;
        gens.push_back(c);
    }
    if (n >= 4) {
        perm d = perm_identity(n);
        if (n % 2 == 1) {
            for (int i = 0; i < n; i++) d.p[i] = (std::uint8_t)((i + 1) % n);  // n-cycle, even
        } else {
            for (int i = 1; i < n; i++) d.p[i] = (std::uint8_t)(i == n - 1 ? 1 : i + 1);  // (n-1)-cycle on 2..n
        }
        gens.push_back(d);
    }
    return group_closure(n, gens);
}

static permgroup filter_group(const permgroup& G, const std::function<bool(const perm&)>& keep) {
    permgroup U;
    U.n = G.n;
    U.bitmap = empty_bitmap(G.n);
    for (const perm& g : G.elems)
        if (keep(g)) {
            U.elems.push_back(g);
            bm_set(U.bitmap, perm_rank(g));
        }
    // canonical generators: greedy closure over sorted elements
    permgroup cl;
    cl.n = G.n;
    cl.bitmap = empty_bitmap(G.n);
    bm_set(cl.bitmap, perm_rank(perm_identity(G.n)));
    std::size_t csize = 1;
    for (const perm& h : U.elems) {
        if (bm_get(cl.bitmap, perm_rank(h))) continue;
        U.gens.push_back(h);
        permgroup tmp = group_closure(G.n, U.gens);
        cl.bitmap = tmp.bitmap;
        csize = tmp.order();
        if (csize == U.elems.size()) break;
    }
    if (csize != U.elems.size() && U.elems.size() > 1)
        throw std::runtime_error("filter_group: generator extraction failed");
    return U;
}

permgroup point_stabilizer(const permgroup& G, int point0) {
    return filter_group(G, [&](const perm& g) { return g.p[point0] == point0; });
}

permgroup set_stabilizer(const permgroup& G, const std::vector<int>& set0) {
    std::uint8_t mask = 0;
    for (int s : set0) mask |= (std::uint8_t)(1u << s);
    return filter_group(G, [&](const perm& g) {
        std::uint8_t img = 0;
        for (int s : set0) img |= (std::uint8_t)(1u << g.p[s]);
        return img == mask;
    });
}

permgroup partition_stabilizer(const permgroup& G, const std::vector<std::vector<int>>& parts0) {
    std::vector<std::uint8_t> masks;
    for (auto& part : parts0) {
        std::uint8_t m = 0;
        for (int s : part) m |= (std::uint8_t)(1u << s);
        masks.push_back(m);
    }
    std::vector<std::uint8_t> sorted_masks = masks;
    std::sort(sorted_masks.begin(), sorted_masks.end());
    return filter_group(G, [&](const perm& g) {
        std::vector<std::uint8_t> img;
        for (auto& part : parts0) {
            std::uint8_t m = 0;
            for (int s : part) m |= (std::uint8_t)(1u << g.p[s]);
            img.push_back(m);
        }
        std::sort(img.begin(), img.end());
        return img == sorted_masks;
    });
}

permgroup sylow_subgroup(const permgroup& G, int p) {
    std::uint64_t ppart = 1, o = G.order();
    while (o % p == 0) { ppart *= p; o /= p; }
    // greedy: extend by the first p-element keeping a p-group; maximal p-subgroup is Sylow
    std::vector<perm> gens;
    std::uint64_t cur = 1;
    bool grew = true;
    permgroup H = group_closure(G.n, {});
    while (grew && cur < ppart) {
        grew = false;
        for (const perm& g : G.elems) {
            if (perm_is_identity(g)) continue;
            int ord = perm_order(g);
            bool ppow = true;
            int t = ord;
            while (t % p == 0) t /= p;
            ppow = (t == 1);
            if (!ppow || H.contains(g)) continue;
            std::vector<perm> trial = gens;
            trial.push_back(g);
            permgroup T = group_closure(G.n, trial);
            std::uint64_t to = T.order();
            std::uint64_t tt = to;
            while (tt % p == 0) tt /= p;
            if (tt == 1) {
                gens = trial;
                H = T;
                cur = to;
                grew = true;
                break;
            }
        }
    }
    if (cur != ppart) throw std::runtime_error("sylow_subgroup: greedy closure missed Sylow order");
    return H;
}

permgroup normalizer_of_cyclic(const permgroup& G, const perm& c) {
    permgroup C = group_closure(G.n, {c});
    return filter_group(G, [&](const perm& g) { return C.contains(perm_conj(g, c)); });
}

permgroup normalizer(const permgroup& G, const permgroup& U) {
    return filter_group(G, [&](const perm& g) {
        for (const perm& u : U.gens)
            if (!U.contains(perm_conj(g, u))) return false;
        return true;
    });
}

permgroup intersect_alternating(const permgroup& G) {
    return filter_group(G, [&](const perm& g) { return perm_parity(g) == 0; });
}

permgroup agl32() {
    // points 0..7 as vectors of F_2^3 (low bits); affine maps x -> Ax + b
    std::vector<perm> gens;
    // translations by e1 and generators of GL(3,2): A1 = [[1,1,0],[0,1,0],[0,0,1]], A2 = cyclic shift
    auto apply_mat = [](const int M[3][3], int v) {
        int w = 0;
        for (int r = 0; r < 3; r++) {
            int bit = 0;
            for (int c = 0; c < 3; c++) bit ^= M[r][c] & (v >> c);
            w |= (bit & 1) << r;
        }
        return w;
    };
    const int A1[3][3] = {{1, 1, 0}, {0, 1, 0}, {0, 0, 1}};
    const int A2[3][3] = {{0, 0, 1}, {1, 0, 0}, {0, 1, 0}};
    perm t = perm_identity(8);
    for (int v = 0; v < 8; v++) t.p[v] = (std::uint8_t)(v ^ 1);
    gens.push_back(t);
    perm m1 = perm_identity(8), m2 = perm_identity(8);
    for (int v = 0; v < 8; v++) {
        m1.p[v] = (std::uint8_t)apply_mat(A1, v);
        m2.p[v] = (std::uint8_t)apply_mat(A2, v);
    }
    gens.push_back(m1);
    gens.push_back(m2);
    permgroup G = group_closure(8, gens);
    if (G.order() != 1344) throw std::runtime_error("agl32: wrong order");
    return G;
}

permgroup subgroup_from_generators(const permgroup& G, const std::vector<perm>& gens) {
    for (const perm& g : gens)
        if (!G.contains(g)) throw std::runtime_error("subgroup_from_generators: not inside ambient group");
    return group_closure(G.n, gens);
}

permgroup intersect_groups(const permgroup& A, const permgroup& B) {
    return filter_group(A, [&](const perm& g) { return B.contains(g); });
}

std::vector<perm> conjugating_reps(const permgroup& G, const permgroup& U) {
    permgroup N = normalizer(G, U);
    std::vector<std::uint64_t> seen = empty_bitmap(G.n);
    std::vector<perm> reps;
    for (const perm& g : G.elems) {
        std::uint32_t r = perm_rank(g);
        if (bm_get(seen, r)) continue;
        reps.push_back(g);
        for (const perm& nn : N.elems) bm_set(seen, perm_rank(perm_compose(g, nn)));
    }
    return reps;
}

permgroup core_subgroup(const permgroup& G, const permgroup& U) {
    auto reps = conjugating_reps(G, U);
    return filter_group(U, [&](const perm& u) {
        for (const perm& r : reps)
            if (!U.contains(perm_conj(perm_inverse(r), u))) return false;
        return true;
    });
}

covering_report covering_check(const permgroup& G, const permgroup& U1, const permgroup& U2) {
    covering_report rep;
    rep.total = G.order();
    std::vector<std::uint64_t> marked = empty_bitmap(G.n);
    for (const permgroup* U : {&U1, &U2}) {
        for (const perm& r : conjugating_reps(G, *U))
            for (const perm& u : U->elems) bm_set(marked, perm_rank(perm_conj(r, u)));
    }
    std::uint64_t cnt = 0;
    std::string witness;
    for (const perm& g : G.elems) {
        if (bm_get(marked, perm_rank(g))) cnt++;
        else if (witness.empty()) witness = perm_to_cycles(g);
    }
    rep.covered = cnt;
    rep.covers = (cnt == rep.total);
    rep.witness = witness;
    permgroup c1 = core_subgroup(G, U1), c2 = core_subgroup(G, U2);
    permgroup both = intersect_groups(c1, c2);
    rep.core_trivial = (both.order() == 1);
    return rep;
}

lemma_report derive_covering_lemma(const permgroup& G, const permgroup& N,
                                   const permgroup& H, const permgroup& K,
                                   permgroup& U1_out, permgroup& U2_out) {
    lemma_report rep;
    rep.normal = true;
    for (const perm& g : G.gens)
        for (const perm& nn : N.gens)
            if (!N.contains(perm_conj(g, nn))) rep.normal = false;
    permgroup HN = intersect_groups(H, N);
    permgroup KN = intersect_groups(K, N);
    // |NH| = |N||H|/|N cap H|
    rep.product_h = (N.order() * H.order() / HN.order() == G.order());
    rep.product_k = (N.order() * K.order() / KN.order() == G.order());
    U1_out = HN;
    U2_out = KN;
    rep.derived = covering_check(N, HN, KN);
    return rep;
}

bool conjugate_contained(const permgroup& G, const permgroup& D, const permgroup& U) {
    if (D.gens.empty()) return true;
    const perm& d0 = D.gens[0];
    for (const perm& g : G.elems) {
        if (!U.contains(perm_conj(g, d0))) continue;
        bool ok = true;
        for (const perm& d : D.gens)
            if (!U.contains(perm_conj(g, d))) { ok = false; break; }
        if (ok) return true;
    }
    return false;
}

bool conjugate_subgroups(const permgroup& G, const permgroup& D1, const permgroup& D2) {
    if (D1.order() != D2.order()) return false;
    return conjugate_contained(G, D1, D2);
}

std::vector<std::vector<perm>> class_elements(const permgroup& G, const std::vector<int>& type) {
    std::vector<perm> all;
    for (const perm& g : G.elems)
        if (perm_cycle_type(g) == type) all.push_back(g);
    std::vector<std::vector<perm>> classes;
    if (all.empty()) return classes;
    std::vector<std::uint64_t> seen = empty_bitmap(G.n);
    for (const perm& start : all) {
        if (bm_get(seen, perm_rank(start))) continue;
        // conjugation orbit under G generators
        std::vector<perm> orbit{start}, frontier{start};
        bm_set(seen, perm_rank(start));
        while (!frontier.empty()) {
            std::vector<perm> next;
            for (const perm& x : frontier)
                for (const perm& g : G.gens) {
                    perm y = perm_conj(g, x);
                    std::uint32_t r = perm_rank(y);
                    if (!bm_get(seen, r)) {
                        bm_set(seen, r);
                        orbit.push_back(y);
                        next.push_back(y);
                    }
                }
            frontier = std::move(next);
        }
        std::sort(orbit.begin(), orbit.end());
        classes.push_back(std::move(orbit));
    }
    return classes;
}

bool generates_group(const permgroup& G, const std::vector<perm>& gens) {
    std::uint64_t half = G.order() / 2;
    std::vector<std::uint64_t> bm = empty_bitmap(G.n);
    perm id = perm_identity(G.n);
    bm_set(bm, perm_rank(id));
    std::uint64_t cnt = 1;
    std::vector<perm> frontier{id};
    while (!frontier.empty()) {
        std::vector<perm> next;
        for (const perm& f : frontier)
            for (const perm& g : gens) {
                perm h = perm_compose(g, f);
                std::uint32_t r = perm_rank(h);
                if (!bm_get(bm, r)) {
                    bm_set(bm, r);
                    cnt++;
                    if (cnt > half) return true;  // subgroup order divides |G| and exceeds half
                    next.push_back(h);
                }
            }
        frontier = std::move(next);
    }
    return cnt == G.order();
}

gencert_report generation_certificate(const permgroup& G, const std::vector<std::vector<int>>& types) {
    gencert_report rep;
    // deterministic order over distinct type pairs
    std::vector<std::vector<int>> ts = types;
    std::sort(ts.begin(), ts.end());
    ts.erase(std::unique(ts.begin(), ts.end()), ts.end());
    for (size_t i = 0; i < ts.size() && !rep.certified; i++) {
        auto cls1 = class_elements(G, ts[i]);
        if (cls1.empty()) continue;
        for (size_t j = 0; j < ts.size() && !rep.certified; j++) {
            if (j == i) continue;
            auto cls2 = class_elements(G, ts[j]);
            if (cls2.empty()) continue;
            bool all_pairs = true;
            for (auto& c1 : cls1) {
                const perm& x = c1.front();
                for (auto& c2 : cls2) {
                    for (const perm& y : c2) {
                        rep.closures_run++;
                        if (!generates_group(G, {x, y})) { all_pairs = false; break; }
                    }
                    if (!all_pairs) break;
                }
                if (!all_pairs) break;
            }
            if (all_pairs) {
                rep.certified = true;
                rep.used_types = {ts[i], ts[j]};
                rep.method = "pair";
            }
        }
    }
    if (!rep.certified && ts.size() >= 3) {
        // triples: collect proper subgroups from failing pairs of the first two types,
        // then require a third type absent from all of them
        for (size_t i = 0; i < ts.size() && !rep.certified; i++) {
            auto cls1 = class_elements(G, ts[i]);
            if (cls1.empty()) continue;
            for (size_t j = i + 1; j < ts.size() && !rep.certified; j++) {
                auto cls2 = class_elements(G, ts[j]);
                if (cls2.empty()) continue;
                std::vector<permgroup> proper;
                for (auto& c1 : cls1) {
                    const perm& x = c1.front();
                    for (auto& c2 : cls2)
                        for (const perm& y : c2) {
                            rep.closures_run++;
                            permgroup H = group_closure(G.n, {x, y});
                            if (H.order() < G.order()) {
                                bool dup = false;
                                for (auto& P : proper)
                                    if (P.order() == H.order() && conjugate_subgroups(G, H, P)) { dup = true; break; }
                                if (!dup) proper.push_back(H);
                            }
                        }
                }
                for (size_t k = 0; k < ts.size() && !rep.certified; k++) {
                    if (k == i || k == j) continue;
                    if (class_elements(G, ts[k]).empty()) continue;
                    bool absent_everywhere = true;
                    for (auto& P : proper) {
                        // type ts[k] present in P or any conjugate (type is conj-invariant)
                        bool found = false;
                        for (const perm& h : P.elems)
                            if (perm_cycle_type(h) == ts[k]) { found = true; break; }
                        if (found) { absent_everywhere = false; break; }
                    }
                    if (absent_everywhere) {
                        rep.certified = true;
                        rep.used_types = {ts[i], ts[j], ts[k]};
                        rep.method = "triple";
                    }
                }
            }
        }
    }
    return rep;
}

std::map<std::vector<int>, std::set<std::vector<int>>> coset_action_table(const permgroup& G, const permgroup& U) {
    // left cosets gU; id of coset = min rank over its elements
    std::uint32_t nf = factorial_table[G.n];
    std::vector<std::int32_t> coset_of(nf, -1);
    std::vector<std::uint32_t> reps;  // min-rank representative per coset, in discovery order
    for (const perm& g : G.elems) {
        std::uint32_t rg = perm_rank(g);
        if (coset_of[rg] != -1) continue;
        std::int32_t id = (std::int32_t)reps.size();
        std::uint32_t minr = UINT32_MAX;
        std::vector<std::uint32_t> members;
        for (const perm& u : U.elems) {
            std::uint32_t r = perm_rank(perm_compose(g, u));
            members.push_back(r);
            if (r < minr) minr = r;
        }
        for (std::uint32_t r : members) coset_of[r] = id;
        reps.push_back(minr);
    }
    std::size_t m = reps.size();
    if (m * U.order() != G.order()) throw std::runtime_error("coset_action_table: bad coset split");
    // class reps: one per conjugacy class of G
    std::map<std::vector<int>, std::set<std::vector<int>>> table;
    std::vector<std::uint64_t> seen = empty_bitmap(G.n);
    for (const perm& g : G.elems) {
        std::uint32_t rg = perm_rank(g);
        if (bm_get(seen, rg)) continue;
        // mark whole conjugacy class
        std::vector<perm> frontier{g};
        bm_set(seen, rg);
        while (!frontier.empty()) {
            std::vector<perm> next;
            for (const perm& x : frontier)
                for (const perm& h : G.gens) {
                    perm y = perm_conj(h, x);
                    std::uint32_t r = perm_rank(y);
                    if (!bm_get(seen, r)) {
                        bm_set(seen, r);
                        next.push_back(y);
                    }
                }
            frontier = std::move(next);
        }
        // action of g on cosets
        std::vector<int> img(m);
        for (std::size_t c = 0; c < m; c++) {
            perm rep = perm_unrank(reps[c], G.n);
            img[c] = coset_of[perm_rank(perm_compose(g, rep))];
        }
        std::vector<bool> vis(m, false);
        std::vector<int> lens;
        for (std::size_t c = 0; c < m; c++) {
            if (vis[c]) continue;
            int len = 0;
            std::size_t j = c;
            while (!vis[j]) { vis[j] = true; j = (std::size_t)img[j]; len++; }
            lens.push_back(len);
        }
        std::sort(lens.rbegin(), lens.rend());
        table[perm_cycle_type(g)].insert(lens);
    }
    return table;
}

}  // namespace galcov
