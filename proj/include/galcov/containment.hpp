#pragma once
#include "galcov/group.hpp"
#include "galcov/zpoly.hpp"

namespace galcov {

struct containment_sample {
    u64 p;
    std::vector<int> f_type;     // factor degrees of f mod p, descending
    std::vector<int> g_degrees;  // factor degrees of g mod p, descending
    bool ok;
};

struct containment_report {
    std::string verdict;  // "consistent" | "inconsistent" | "low-evidence"
    int checked = 0;
    int violations = 0;
    std::vector<containment_sample> samples;
    std::string note;
};

// statistical splitting-field containment certificate: at primes unramified for
// both f and g, the observed factor-degree multiset of g mod p must lie in the
// coset-action prediction for f's Frobenius type, and g must split completely
// whenever f does.  `want` primes with zero violations => "consistent"
// (>= 50 required); fewer checked => "low-evidence".  Not a proof.
containment_report splitting_containment_check(const zpoly& g, const zpoly& f, const permgroup& G,
                                               const permgroup& U, int want = 60);

}  // namespace galcov
