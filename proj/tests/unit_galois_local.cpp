#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "galcov/casespec.hpp"
#include "galcov/galois.hpp"
#include "galcov/localshape.hpp"

#include <map>
#include <string>

using namespace galcov;

namespace {

case_spec get_case(const std::string& name) {
    return load_case(std::string(GALCOV_DATA_DIR) + "/cases/" + name + ".json");
}

const std::vector<std::string> all_cases = {"s3", "s4", "s5", "s6", "a4", "a5", "a6", "a7", "a8"};

// largest ramified prime per case
const std::map<std::string, u64> pstar = {
    {"s3", 23},      {"s4", 2777},  {"s5", 36497}, {"s6", 33994921}, {"a4", 163},
    {"a5", 15733},   {"a6", 14341}, {"a7", 554293}, {"a8", 11489},
};

permgroup ambient_group(const std::string& gname) {
    auto [kind, n] = parse_group_name(gname);
    return kind == 'S' ? sym_group(n) : alt_group(n);
}

// the covering pair for each case, built from scratch (independent of the case files)
std::pair<permgroup, permgroup> covering_pair(const std::string& name) {
    if (name == "s3") {
        permgroup s3 = sym_group(3);
        return {group_closure(3, {perm_from_cycles("(1,2,3)", 3)}), point_stabilizer(s3, 2)};
    }
    if (name == "s4") {
        permgroup s4 = sym_group(4);
        return {point_stabilizer(s4, 3), sylow_subgroup(s4, 2)};
    }
    if (name == "s5") {
        permgroup s5 = sym_group(5);
        return {set_stabilizer(s5, {0, 1}), normalizer_of_cyclic(s5, perm_from_cycles("(1,2,3,4,5)", 5))};
    }
    if (name == "s6") {
        permgroup s6 = sym_group(6);
        return {partition_stabilizer(s6, {{0, 1, 2}, {3, 4, 5}}), point_stabilizer(s6, 5)};
    }
    if (name == "a4") {
        permgroup a4 = alt_group(4);
        return {sylow_subgroup(a4, 3), sylow_subgroup(a4, 2)};
    }
    if (name == "a5") {
        permgroup s5 = sym_group(5), U1, U2;
        derive_covering_lemma(s5, alt_group(5), set_stabilizer(s5, {0, 1}),
                              normalizer_of_cyclic(s5, perm_from_cycles("(1,2,3,4,5)", 5)), U1, U2);
        return {U1, U2};
    }
    if (name == "a6") {
        permgroup s6 = sym_group(6), U1, U2;
        derive_covering_lemma(s6, alt_group(6), partition_stabilizer(s6, {{0, 1, 2}, {3, 4, 5}}),
                              point_stabilizer(s6, 5), U1, U2);
        return {U1, U2};
    }
    if (name == "a7") {
        permgroup a7 = alt_group(7);
        std::vector<perm> g;
        for (const char* s : {"(4,5)(6,7)", "(4,6)(5,7)", "(2,3)(6,7)", "(2,4)(3,5)", "(1,2)(5,6)"})
            g.push_back(perm_from_cycles(s, 7));
        return {subgroup_from_generators(a7, g), partition_stabilizer(a7, {{0, 1}, {2, 3, 4, 5, 6}})};
    }
    permgroup a8 = alt_group(8);
    return {agl32(), partition_stabilizer(a8, {{0, 1, 2}, {3, 4, 5, 6, 7}})};
}

}  // namespace

TEST_CASE("group name parsing") {
    CHECK(parse_group_name("S5") == std::make_pair('S', 5));
    CHECK(parse_group_name("A8") == std::make_pair('A', 8));
    CHECK_THROWS(parse_group_name("Q8"));
    CHECK_THROWS(parse_group_name(""));
}

TEST_CASE("every shipped case certifies from its evidence primes alone") {
    for (const auto& name : all_cases) {
        case_spec c = get_case(name);
        galois_report r = certify_galois_group(c.f, c.group, c.evidence_primes);
        INFO(name);
        CHECK(r.certified);
        CHECK(r.verdict == "certified");
        CHECK(r.disc_square == (c.group[0] == 'A'));
        CHECK(r.samples.size() == c.evidence_primes.size());
        int used = 0;
        for (const auto& s : r.samples) used += s.used ? 1 : 0;
        CHECK(used >= 2);
        if (c.group[0] == 'A') CHECK(r.gencert.certified);
    }
}

TEST_CASE("ramified evidence primes are recorded but not used") {
    case_spec c = get_case("s4");
    galois_report r = certify_galois_group(c.f, c.group, c.evidence_primes);
    bool saw = false;
    for (const auto& s : r.samples) {
        if (s.p == 2777) {
            saw = true;
            CHECK_FALSE(s.used);
        } else {
            CHECK(s.used);
        }
    }
    CHECK(saw);
}

TEST_CASE("wrong claims are refuted") {
    case_spec s5 = get_case("s5"), a5 = get_case("a5"), s4 = get_case("s4");
    // nonsquare discriminant rules out A5
    CHECK(certify_galois_group(s5.f, "A5", s5.evidence_primes).verdict == "refuted");
    // square discriminant rules out S5
    CHECK(certify_galois_group(a5.f, "S5", a5.evidence_primes).verdict == "refuted");
    // degree mismatch
    CHECK(certify_galois_group(s4.f, "S5", s4.evidence_primes).verdict == "refuted");
    // reducible polynomial
    zpoly prod = zp_mul(zpoly{{-2, 0, 1}}, zpoly{{-3, 0, 1}});
    CHECK(certify_galois_group(prod, "S4", {5, 11, 13}).verdict == "refuted");
}

TEST_CASE("insufficient evidence is inconclusive, not certified") {
    case_spec s4 = get_case("s4"), a5 = get_case("a5");
    CHECK(certify_galois_group(s4.f, "S4", {}).verdict == "inconclusive");
    // only the ramified prime: sample recorded, unusable
    galois_report r = certify_galois_group(s4.f, "S4", {2777});
    CHECK(r.verdict == "inconclusive");
    REQUIRE(r.samples.size() == 1);
    CHECK_FALSE(r.samples[0].used);
    // a single prime gives one cycle type; A-claims need two distinct types
    CHECK(certify_galois_group(a5.f, "A5", {3}).verdict == "inconclusive");
}

TEST_CASE("local shape at the big ramified prime of every case") {
    for (const auto& name : all_cases) {
        case_spec c = get_case(name);
        u64 p = pstar.at(name);
        bool alternating = c.group[0] == 'A';
        permgroup G = ambient_group(c.group);
        localshape_report rep = derive_local_shape(c.f, p, G, alternating);
        INFO(name);
        CHECK(rep.p == p);
        CHECK(rep.tame);
        CHECK(rep.exact);
        CHECK(rep.vdisc == (alternating ? 2 : 1));
        // every admissible local shape fills the degree and the discriminant valuation
        REQUIRE(!rep.piece_options.empty());
        int n = zp_deg(c.f);
        for (const auto& opt : rep.piece_options) {
            int sum_ef = 0, sum_vd = 0;
            for (const auto& pc : opt) {
                sum_ef += pc.e * pc.f;
                sum_vd += (pc.e - 1) * pc.f;
            }
            CHECK(sum_ef == n);
            CHECK(sum_vd == rep.vdisc);
        }
        // exactly one candidate decomposition group up to conjugacy
        REQUIRE(rep.classes.size() == 1);
        const local_candidate& cls = rep.classes[0];
        CHECK(cls.elems.size() == cls.order);
        if (alternating)
            for (const auto& e : cls.elems) CHECK(perm_parity(e) == 0);
        int sum_ef = 0, sum_vd = 0;
        for (const auto& pc : cls.pieces) {
            sum_ef += pc.e * pc.f;
            sum_vd += (pc.e - 1) * pc.f;
        }
        CHECK(sum_ef == n);
        CHECK(sum_vd == rep.vdisc);

        if (name == "a6" || name == "a7") {
            CHECK(cls.order == 4);
            CHECK_FALSE(cls.cyclic);
            CHECK(perm_order(cls.tau) == 2);
        } else if (name == "a4" || name == "a5") {
            CHECK(cls.order == 3);
            CHECK(cls.cyclic);
            CHECK(perm_order(cls.tau) == 3);
        } else if (name == "a8") {
            CHECK(cls.order == 18);
            CHECK_FALSE(cls.cyclic);
            CHECK(perm_order(cls.tau) == 3);
            // conjugate to <(1,2,3), (1,2)(4,5), (6,7,8)> inside A8
            std::vector<perm> tg = {perm_from_cycles("(1,2,3)", 8), perm_from_cycles("(1,2)(4,5)", 8),
                                    perm_from_cycles("(6,7,8)", 8)};
            permgroup target = group_closure(8, tg);
            REQUIRE(target.order() == 18);
            permgroup D = group_closure(8, cls.elems);
            CHECK(D.order() == 18);
            CHECK(conjugate_subgroups(G, D, target));
        } else {
            CHECK(cls.order == 2);
            CHECK(cls.cyclic);
            CHECK(perm_cycle_type(cls.tau)[0] == 2);
        }

        // the standard pair covers the class; a trivial pair does not
        auto [U1, U2] = covering_pair(name);
        mark_coverage(rep, G, U1, U2);
        CHECK(all_covered(rep));
        CHECK(rep.classes[0].covered_by >= 1);
        CHECK(rep.classes[0].covered_by <= 2);

        localshape_report rep2 = derive_local_shape(c.f, p, G, alternating);
        permgroup trivial = group_closure(G.n, {perm_identity(G.n)});
        mark_coverage(rep2, G, trivial, trivial);
        CHECK_FALSE(all_covered(rep2));
        CHECK(rep2.classes[0].covered_by == 0);
    }
}
