#pragma once
#include "galcov/group.hpp"
#include "galcov/qpoly.hpp"
#include "json.hpp"
#include <map>
#include <string>
#include <vector>

namespace galcov {

// construction rule for a subgroup inside an ambient group
struct subgroup_spec {
    std::string kind;  // point_stabilizer | set_stabilizer | partition_stabilizer | sylow |
                       // normalizer_of_cyclic | agl32 | generators
    int point = 0;                        // 1-based
    std::vector<int> set;                 // 1-based
    std::vector<std::vector<int>> parts;  // 1-based
    int p = 0;                            // sylow prime
    std::string cycle;                    // cycle string, 1-based
    std::vector<std::string> gens;        // cycle strings, 1-based

    nlohmann::json to_json() const;
    static subgroup_spec from_json(const nlohmann::json& j);
};

permgroup resolve_subgroup(const subgroup_spec& s, const permgroup& ambient);

// regeneration rule for an auxiliary polynomial
struct recipe_spec {
    std::string kind;  // same-f | quadratic-disc | subset-sum | subset-product |
                       // cubic-resolvent | trace-zero-subset-even | design-resolvent |
                       // tschirnhausen-then-subset | pentagon-sextic
    int k = 0;
    u64 seed = 0;
    std::string variant;  // design-resolvent: fano7 | ag32

    // exact recipes regenerate the shipped polynomial coefficient-for-coefficient;
    // seeded recipes produce an independent polynomial checked by the same properties
    bool exact() const {
        return kind != "tschirnhausen-then-subset" && kind != "pentagon-sextic";
    }
    nlohmann::json to_json() const;
    static recipe_spec from_json(const nlohmann::json& j);
};

struct expected_factor {
    std::vector<mpz_class> c;  // low-to-high, reduced mod p
    int mult = 1;
};

struct case_spec {
    std::string name;   // s3, s4, ..., a8
    std::string group;  // "S3".."A8"
    zpoly f;
    mpz_class disc;  // expected discriminant

    bool lemma = false;        // covering derived from a parent case's covering
    std::string lemma_parent;  // parent group name, e.g. "S5"
    subgroup_spec u1, u2;      // direct covering, or (lemma) the parent pair

    std::vector<u64> evidence_primes;                      // ascending
    std::map<u64, std::vector<expected_factor>> expected;  // cited factorizations

    qpoly g1, g2;
    recipe_spec g1_recipe, g2_recipe;
    std::string notes;
};

case_spec case_from_json(const nlohmann::json& j);
case_spec load_case(const std::string& path);

// shared text format: coefficients low-to-high, decimal or num/den, '#' comments,
// whitespace or comma separated
qpoly parse_poly_text(const std::string& text);
qpoly load_poly_file(const std::string& path);
mpq_class parse_rational(const std::string& s);

std::vector<std::string> qpoly_strings(const qpoly& a);
qpoly qpoly_from_strings(const std::vector<std::string>& v);

}  // namespace galcov
