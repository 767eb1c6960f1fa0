#pragma once
#include <array>
#include <cstdint>
#include <string>
#include <vector>

namespace galcov {

// permutations of {0..n-1}, n <= 8; images beyond n are fixed points
struct perm {
    std::uint8_t n = 0;
    std::array<std::uint8_t, 8> p{0, 1, 2, 3, 4, 5, 6, 7};

    bool operator==(const perm& o) const { return n == o.n && p == o.p; }
    bool operator<(const perm& o) const { return p < o.p; }
};

perm perm_identity(int n);
perm perm_compose(const perm& a, const perm& b);  // (a*b)(i) = a[b[i]]
perm perm_inverse(const perm& a);
perm perm_conj(const perm& g, const perm& x);     // g x g^-1
bool perm_is_identity(const perm& a);
int perm_order(const perm& a);
int perm_parity(const perm& a);                       // 0 even, 1 odd
std::vector<int> perm_cycle_type(const perm& a);      // sorted descending, fixed points included
std::string perm_to_cycles(const perm& a);            // 1-based, "()" for identity
perm perm_from_cycles(const std::string& s, int n);   // 1-based cycle string

extern const std::uint32_t factorial_table[9];
std::uint32_t perm_rank(const perm& a);               // Lehmer code rank in S_n
perm perm_unrank(std::uint32_t r, int n);

}  // namespace galcov
