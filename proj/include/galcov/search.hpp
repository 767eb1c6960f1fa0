#pragma once
#include "galcov/casespec.hpp"
#include "json.hpp"
#include <string>
#include <vector>

namespace galcov {

// inclusive per-coefficient ranges for a_0..a_{n-1} of a monic degree-n polynomial
struct box_spec {
    std::vector<std::pair<long, long>> ranges;
    u64 size() const;
    std::string text() const;  // "lo:hi,lo:hi,..."
};
box_spec parse_box(const std::string& s);

struct search_candidate {
    zpoly f;
    mpz_class disc;
    bool certified = false;  // Galois group proven equal to the target
    bool covered = false;    // every ramified local candidate covered by the standard pair
    nlohmann::json to_json() const;
    static search_candidate from_json(const nlohmann::json& j);
};

struct search_result {
    std::string group;
    u64 scanned = 0;     // points examined this run
    u64 position = 0;    // next odometer index (resume point)
    bool exhausted = false;
    std::vector<search_candidate> found;  // ranked: full certificates first, then |disc|, then coeffs
    nlohmann::json to_json() const;
};

// the covering pair each target group is screened against (the pair shipped with
// the cases; alternating targets below A7 derive theirs from the symmetric pair)
void standard_covering(const std::string& group, const permgroup& G, permgroup& U1, permgroup& U2);

// scan `budget` box points (odometer order, a_0 fastest), keeping monic f with
// |disc| prime (S targets) or prime-square (A targets) whose factorization types
// at 12 unramified primes all lie in the target group; kept candidates carry
// certification and local-coverage flags. The checkpoint file (JSON, written
// atomically) allows resuming an interrupted scan; pass "" for none.
search_result search_candidates(const std::string& group, const box_spec& box, u64 budget,
                                const std::string& checkpoint_path);

}  // namespace galcov
