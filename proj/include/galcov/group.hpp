#pragma once
#include "galcov/perm.hpp"
#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

namespace galcov {

// explicit permutation group on n <= 8 points: closed sorted element list + rank bitmap
struct permgroup {
    int n = 0;
    std::vector<perm> gens;
    std::vector<perm> elems;            // sorted (lex = rank order)
    std::vector<std::uint64_t> bitmap;  // n! bits over S_n ranks

    std::size_t order() const { return elems.size(); }
    bool contains(const perm& g) const {
        std::uint32_t r = perm_rank(g);
        return (bitmap[r >> 6] >> (r & 63)) & 1;
    }
};

permgroup group_closure(int n, const std::vector<perm>& gens);
// independent order computation via deterministic Schreier-Sims stabilizer chain
std::uint64_t bsgs_order(int n, const std::vector<perm>& gens);

permgroup sym_group(int n);
permgroup alt_group(int n);

// subgroups cut out of an ambient closed group
permgroup point_stabilizer(const permgroup& G, int point0);                 // 0-based point
permgroup set_stabilizer(const permgroup& G, const std::vector<int>& set0); // setwise
permgroup partition_stabilizer(const permgroup& G, const std::vector<std::vector<int>>& parts0);
permgroup sylow_subgroup(const permgroup& G, int p);  // greedy deterministic maximal p-subgroup
permgroup normalizer_of_cyclic(const permgroup& G, const perm& c);
permgroup normalizer(const permgroup& G, const permgroup& U);
permgroup intersect_alternating(const permgroup& G);
permgroup agl32();  // AGL(3,2) on points 0..7 = bit-vectors of F_2^3
permgroup subgroup_from_generators(const permgroup& G, const std::vector<perm>& gens);
permgroup intersect_groups(const permgroup& A, const permgroup& B);

// core of U in G computed over conjugating coset reps; reps = transversal of N_G(U) in G
std::vector<perm> conjugating_reps(const permgroup& G, const permgroup& U);
permgroup core_subgroup(const permgroup& G, const permgroup& U);

struct covering_report {
    bool covers = false;
    bool core_trivial = false;
    std::uint64_t covered = 0, total = 0;
    std::string witness;  // an uncovered element if any
};
covering_report covering_check(const permgroup& G, const permgroup& U1, const permgroup& U2);

// lemma derivation: N normal in G, G = N H = N K, {H0, K0} covering of G implies
// {H cap N, K cap N} covers N with trivial core (checked explicitly); returns the intersections
struct lemma_report {
    bool normal = false, product_h = false, product_k = false;
    covering_report derived;
};
lemma_report derive_covering_lemma(const permgroup& G, const permgroup& N,
                                   const permgroup& H, const permgroup& K,
                                   permgroup& U1_out, permgroup& U2_out);

// is some G-conjugate of D contained in U?
bool conjugate_contained(const permgroup& G, const permgroup& D, const permgroup& U);
// are D1 and D2 conjugate in G?
bool conjugate_subgroups(const permgroup& G, const permgroup& D1, const permgroup& D2);

// elements of G with given cycle type, partitioned into G-conjugacy classes (1 or 2)
std::vector<std::vector<perm>> class_elements(const permgroup& G, const std::vector<int>& type);

// closure size with early success exit: true iff <gens> = G
bool generates_group(const permgroup& G, const std::vector<perm>& gens);

// generation certificate: observed cycle types force <elements> = G (G alternating).
// tries pairs of types, falls back to triples through collected proper subgroups.
struct gencert_report {
    bool certified = false;
    std::vector<std::vector<int>> used_types;
    std::string method;  // "pair" or "triple"
    std::uint64_t closures_run = 0;
};
gencert_report generation_certificate(const permgroup& G, const std::vector<std::vector<int>>& types);

// left-coset action of G on G/U: cycle types of class representatives, keyed by S_n cycle type
// (union over the 1-2 G-classes per type)
std::map<std::vector<int>, std::set<std::vector<int>>> coset_action_table(const permgroup& G, const permgroup& U);

}  // namespace galcov
