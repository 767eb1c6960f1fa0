#pragma once
#include "galcov/qpoly.hpp"

namespace galcov {

struct sweep_decision {
    u64 p;
    bool has_root;
    int precision;  // p-adic precision at which the decision was made (1 = mod p)
};

struct sweep_report {
    u64 bound = 0;
    bool no_rational_root = false;
    std::vector<std::string> rational_roots;
    std::vector<u64> failures;               // primes with no Q_p root
    std::vector<sweep_decision> ramified;    // primes dividing Res(h, h'), with precision used
    bool pass = false;
};

// Decide, for every prime p <= B, whether monic squarefree integral h has a root
// in Q_p, and check h has no rational root. For p not dividing Res(h, h') a root
// mod p is equivalent (Hensel); otherwise a bounded lifting tree decides at
// precision at most 2*v_p(Res) + 1 (sound and complete for monic integral h).
sweep_report sweep_roots_everywhere(const zpoly& h, u64 B);

// same decision for a product of monic squarefree factors (pairwise coprime):
// a root of the product is a root of some factor, so each prime is decided
// factor-by-factor, cheapest first; avoids the lifting tree whenever an
// unramified factor already answers
sweep_report sweep_product(const std::vector<zpoly>& factors, u64 B);

}  // namespace galcov
