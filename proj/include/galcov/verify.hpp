#pragma once
#include "galcov/casespec.hpp"
#include "json.hpp"
#include <string>
#include <vector>

namespace galcov {

struct stage_result {
    std::string name;
    bool pass = false;
    nlohmann::json detail;
};

struct case_report {
    std::string name;
    std::string group;
    bool pass = false;
    std::vector<stage_result> stages;
    nlohmann::json to_json() const;
};

// replay every check for one case: discriminant, cited modular factorizations,
// Galois certificate from the evidence primes alone, covering (direct or derived),
// local coverage at every ramified prime, both auxiliary polynomials (with recipe
// regeneration), and the everywhere-local root sweep of g1*g2.
// A failed stage does not stop the later stages.
case_report verify_case(const case_spec& cs, u64 sweep_bound = 10000);

// fixed case order; {"pass": ..., "cases": [...]}
nlohmann::json verify_all(const std::vector<case_spec>& cases, u64 sweep_bound = 10000);

std::string report_markdown(const nlohmann::json& rep);

// regenerate an auxiliary polynomial from its recipe; transcript records the
// derivation data (shift, scale, seed, primes used, ...)
qpoly regenerate_poly(const recipe_spec& r, const case_spec& cs, nlohmann::json& transcript);

}  // namespace galcov
