#pragma once
#include "galcov/zpoly.hpp"
#include "galcov/group.hpp"
#include <string>
#include <vector>

namespace galcov {

struct local_piece {
    int e = 1;  // ramification index
    int f = 1;  // residue degree
    bool operator==(const local_piece& o) const { return e == o.e && f == o.f; }
    bool operator<(const local_piece& o) const { return e != o.e ? e > o.e : f > o.f; }
};

struct local_candidate {
    perm tau;    // inertia generator
    perm sigma;  // Frobenius lift
    u64 order = 0;
    bool cyclic = false;
    std::vector<local_piece> pieces;
    std::vector<perm> elems;  // the subgroup D, sorted
    int covered_by = 0;       // 1 or 2 once coverage is marked, else 0
};

struct localshape_report {
    u64 p = 0;
    int vdisc = 0;
    bool tame = false;   // p > deg f and p does not divide lc
    bool exact = false;  // |disc| = p^vdisc, so sum (e-1)f = vdisc is forced
    std::vector<std::vector<local_piece>> piece_options;
    std::vector<local_candidate> classes;  // deduplicated up to conjugacy in G
    std::vector<std::string> notes;
};

// Enumerate candidate decomposition subgroups at p from the factorization of f mod p.
// even_only restricts to subgroups of A_n (square-discriminant targets).
localshape_report derive_local_shape(const zpoly& f, u64 p, const permgroup& G, bool even_only);

// mark each class as covered by a conjugate of U1 or U2 (covered_by = 1/2, 0 if neither)
void mark_coverage(localshape_report& rep, const permgroup& G, const permgroup& U1, const permgroup& U2);

bool all_covered(const localshape_report& rep);

}  // namespace galcov
