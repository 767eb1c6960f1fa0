#pragma once
#include "galcov/zpoly.hpp"
#include "galcov/group.hpp"
#include <string>
#include <vector>

namespace galcov {

struct frobenius_sample {
    u64 p = 0;
    std::vector<int> type;  // factor degrees of f mod p, descending
    bool used = true;       // false when p divides lc(f)*disc(f)
};

struct galois_report {
    std::string claim;    // "S3".."S6", "A4".."A8"
    std::string verdict;  // certified / refuted / inconclusive
    bool certified = false;
    bool disc_square = false;
    std::vector<frobenius_sample> samples;
    std::vector<std::string> notes;
    gencert_report gencert;  // populated for A-claims that reach generation stage
};

// Certify Gal(f) == claim using factorization patterns at the given primes only.
// Primes dividing lc(f)*disc(f) are recorded but skipped as evidence.
galois_report certify_galois_group(const zpoly& f, const std::string& claim,
                                   const std::vector<u64>& primes);

// parse "S5"/"A7" style name; returns {kind 'S' or 'A', n}; throws on bad input
std::pair<char, int> parse_group_name(const std::string& claim);

}  // namespace galcov
