#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "galcov/group.hpp"
#include "galcov/intutil.hpp"

#include <map>
#include <set>

using namespace galcov;

namespace {

struct rng {
    u64 s;
    explicit rng(u64 seed) : s(seed) {}
    u64 next() { return splitmix64(s); }
};

perm random_perm(rng& r, int n) {
    perm g = perm_identity(n);
    for (int i = n - 1; i > 0; i--) std::swap(g.p[i], g.p[r.next() % (i + 1)]);
    return g;
}

u64 factorial(int n) {
    u64 f = 1;
    for (int i = 2; i <= n; i++) f *= i;
    return f;
}

}  // namespace

TEST_CASE("permutation primitives") {
    perm a = perm_from_cycles("(1,2,3)", 5);
    perm b = perm_from_cycles("(3,4)", 5);
    CHECK(perm_to_cycles(a) == "(1,2,3)");
    CHECK(perm_order(a) == 3);
    CHECK(perm_parity(a) == 0);
    CHECK(perm_parity(b) == 1);
    CHECK(perm_is_identity(perm_compose(a, perm_inverse(a))));
    // (a*b)(i) = a[b[i]]
    perm ab = perm_compose(a, b);
    CHECK(ab.p[2] == 3);  // b: 2->3, a: 3->3 (0-based)
    CHECK(ab.p[0] == 1);
    CHECK(perm_cycle_type(perm_from_cycles("(1,2)(3,4,5)", 6)) == std::vector<int>{3, 2, 1});
    CHECK(perm_to_cycles(perm_identity(4)) == "()");
    // conjugation relabels cycles
    perm c = perm_conj(b, a);  // b a b^-1
    CHECK(perm_cycle_type(c) == perm_cycle_type(a));

    rng r(5);
    for (int i = 0; i < 100; i++) {
        perm g = random_perm(r, 7);
        CHECK(perm_from_cycles(perm_to_cycles(g), 7) == g);
        CHECK(perm_unrank(perm_rank(g), 7) == g);
        perm h = random_perm(r, 7);
        CHECK((perm_rank(g) == perm_rank(h)) == (g == h));
    }
}

TEST_CASE("closures and full groups") {
    for (int n = 3; n <= 7; n++) {
        CHECK(sym_group(n).order() == factorial(n));
        CHECK(alt_group(n).order() == factorial(n) / 2);
    }
    permgroup s5 = group_closure(5, {perm_from_cycles("(1,2)", 5), perm_from_cycles("(1,2,3,4,5)", 5)});
    CHECK(s5.order() == 120);
    permgroup a5 = group_closure(5, {perm_from_cycles("(1,2,3)", 5), perm_from_cycles("(3,4,5)", 5)});
    CHECK(a5.order() == 60);
    // elements sorted and membership bitmap consistent
    for (size_t i = 1; i < a5.elems.size(); i++) CHECK(a5.elems[i - 1] < a5.elems[i]);
    for (const auto& g : a5.elems) CHECK(a5.contains(g));
    CHECK_FALSE(a5.contains(perm_from_cycles("(1,2)", 5)));
}

TEST_CASE("stabilizer-chain order matches enumeration on every group used") {
    // named groups up to order 5040
    std::vector<permgroup> groups;
    for (int n = 3; n <= 7; n++) groups.push_back(sym_group(n));
    for (int n = 4; n <= 7; n++) groups.push_back(alt_group(n));
    groups.push_back(point_stabilizer(sym_group(6), 0));
    groups.push_back(set_stabilizer(sym_group(5), {0, 1}));
    groups.push_back(partition_stabilizer(sym_group(6), {{0, 1, 2}, {3, 4, 5}}));
    groups.push_back(sylow_subgroup(sym_group(6), 2));
    groups.push_back(normalizer_of_cyclic(sym_group(5), perm_from_cycles("(1,2,3,4,5)", 5)));
    groups.push_back(agl32());
    for (const auto& G : groups) {
        REQUIRE(!G.gens.empty());
        CHECK(bsgs_order(G.n, G.gens) == G.order());
    }
    // random 2-generated subgroups of S6
    rng r(77);
    for (int i = 0; i < 30; i++) {
        std::vector<perm> gens = {random_perm(r, 6), random_perm(r, 6)};
        CHECK(bsgs_order(6, gens) == group_closure(6, gens).order());
    }
}

TEST_CASE("stabilizers, sylow subgroups, normalizers") {
    permgroup s4 = sym_group(4), s5 = sym_group(5), s6 = sym_group(6), s7 = sym_group(7);
    CHECK(point_stabilizer(s5, 0).order() == 24);
    CHECK(set_stabilizer(s5, {0, 1}).order() == 12);
    CHECK(partition_stabilizer(s6, {{0, 1, 2}, {3, 4, 5}}).order() == 72);
    CHECK(partition_stabilizer(s7, {{0, 1}, {2, 3, 4, 5, 6}}).order() == 240);
    CHECK(sylow_subgroup(s4, 2).order() == 8);
    CHECK(sylow_subgroup(s4, 3).order() == 3);
    CHECK(sylow_subgroup(alt_group(4), 2).order() == 4);
    CHECK(sylow_subgroup(s5, 5).order() == 5);
    CHECK(sylow_subgroup(alt_group(8), 2).order() == 64);

    perm c5 = perm_from_cycles("(1,2,3,4,5)", 5);
    permgroup f20 = normalizer_of_cyclic(s5, c5);
    CHECK(f20.order() == 20);
    CHECK(normalizer_of_cyclic(alt_group(5), c5).order() == 10);
    // agrees with generic normalizer of the cyclic subgroup
    permgroup c5g = group_closure(5, {c5});
    CHECK(normalizer(s5, c5g).order() == 20);

    permgroup v4 = group_closure(4, {perm_from_cycles("(1,2)(3,4)", 4), perm_from_cycles("(1,3)(2,4)", 4)});
    CHECK(normalizer(s4, v4).order() == 24);  // V4 normal in S4

    CHECK(intersect_alternating(s4).order() == 12);
    CHECK(intersect_alternating(s4).elems == alt_group(4).elems);
    CHECK(intersect_groups(point_stabilizer(s4, 0), sylow_subgroup(s4, 2)).order() == 2);
    CHECK(subgroup_from_generators(s5, {perm_from_cycles("(1,2)", 5), c5}).order() == 120);
}

TEST_CASE("agl32 is the affine group on the 3-cube") {
    permgroup g = agl32();
    CHECK(g.n == 8);
    CHECK(g.order() == 1344);
    permgroup a8 = alt_group(8);
    for (const auto& e : g.elems) CHECK(a8.contains(e));
    std::set<int> orbit;
    for (const auto& e : g.elems) orbit.insert(e.p[0]);
    CHECK(orbit.size() == 8);  // transitive
}

TEST_CASE("cores and conjugating representatives") {
    permgroup s4 = sym_group(4);
    permgroup pt = point_stabilizer(s4, 0);
    CHECK(conjugating_reps(s4, pt).size() == 4);  // one per coset
    CHECK(core_subgroup(s4, pt).order() == 1);
    permgroup a4 = alt_group(4);
    CHECK(core_subgroup(s4, a4).order() == 12);
}

TEST_CASE("covering checks with controls") {
    permgroup s4 = sym_group(4);
    permgroup pt = point_stabilizer(s4, 3);
    permgroup syl = sylow_subgroup(s4, 2);
    covering_report ok = covering_check(s4, pt, syl);
    CHECK(ok.covers);
    CHECK(ok.core_trivial);
    CHECK(ok.covered == ok.total);

    // two copies of a point stabilizer miss the fixed-point-free elements
    covering_report miss = covering_check(s4, pt, point_stabilizer(s4, 0));
    CHECK_FALSE(miss.covers);
    CHECK(miss.covered < miss.total);
    CHECK_FALSE(miss.witness.empty());

    // a normal subgroup covers only itself and poisons the core
    covering_report normal = covering_check(s4, alt_group(4), syl);
    CHECK(normal.covers);
    CHECK_FALSE(normal.core_trivial);
}

TEST_CASE("standard coverings of the shipped groups") {
    struct entry {
        permgroup G, U1, U2;
    };
    std::vector<entry> entries;
    permgroup s3 = sym_group(3), s4 = sym_group(4), s5 = sym_group(5), s6 = sym_group(6);
    entries.push_back({s3, group_closure(3, {perm_from_cycles("(1,2,3)", 3)}), point_stabilizer(s3, 2)});
    entries.push_back({s4, point_stabilizer(s4, 3), sylow_subgroup(s4, 2)});
    entries.push_back({s5, set_stabilizer(s5, {0, 1}), normalizer_of_cyclic(s5, perm_from_cycles("(1,2,3,4,5)", 5))});
    entries.push_back({s6, partition_stabilizer(s6, {{0, 1, 2}, {3, 4, 5}}), point_stabilizer(s6, 5)});
    permgroup a4 = alt_group(4);
    entries.push_back({a4, sylow_subgroup(a4, 3), sylow_subgroup(a4, 2)});
    permgroup a7 = alt_group(7);
    std::vector<perm> psl_gens;
    for (const char* s : {"(4,5)(6,7)", "(4,6)(5,7)", "(2,3)(6,7)", "(2,4)(3,5)", "(1,2)(5,6)"})
        psl_gens.push_back(perm_from_cycles(s, 7));
    permgroup psl32 = subgroup_from_generators(a7, psl_gens);
    CHECK(psl32.order() == 168);
    entries.push_back({a7, psl32, partition_stabilizer(a7, {{0, 1}, {2, 3, 4, 5, 6}})});
    permgroup a8 = alt_group(8);
    entries.push_back({a8, agl32(), partition_stabilizer(a8, {{0, 1, 2}, {3, 4, 5, 6, 7}})});
    for (auto& e : entries) {
        covering_report cr = covering_check(e.G, e.U1, e.U2);
        CHECK(cr.covers);
        CHECK(cr.core_trivial);
    }
}

TEST_CASE("lemma transfer to the index-2 normal subgroup") {
    // A5 from the S5 pair
    permgroup s5 = sym_group(5), a5 = alt_group(5);
    permgroup U1, U2;
    lemma_report lr = derive_covering_lemma(s5, a5, set_stabilizer(s5, {0, 1}),
                                            normalizer_of_cyclic(s5, perm_from_cycles("(1,2,3,4,5)", 5)),
                                            U1, U2);
    CHECK(lr.normal);
    CHECK(lr.product_h);
    CHECK(lr.product_k);
    CHECK(lr.derived.covers);
    CHECK(lr.derived.core_trivial);
    CHECK(U1.order() == 6);
    CHECK(U2.order() == 10);

    // A6 from the S6 pair
    permgroup s6 = sym_group(6), a6 = alt_group(6);
    permgroup V1, V2;
    lemma_report lr6 = derive_covering_lemma(s6, a6, partition_stabilizer(s6, {{0, 1, 2}, {3, 4, 5}}),
                                             point_stabilizer(s6, 5), V1, V2);
    CHECK(lr6.normal);
    CHECK(lr6.product_h);
    CHECK(lr6.product_k);
    CHECK(lr6.derived.covers);
    CHECK(lr6.derived.core_trivial);
    CHECK(V1.order() == 36);
    CHECK(V2.order() == 60);

    // control: H inside N fails the product condition HN = G
    permgroup W1, W2;
    lemma_report bad = derive_covering_lemma(s5, a5, a5,
                                             normalizer_of_cyclic(s5, perm_from_cycles("(1,2,3,4,5)", 5)),
                                             W1, W2);
    CHECK_FALSE(bad.product_h);
}

TEST_CASE("conjugacy utilities") {
    permgroup s4 = sym_group(4);
    CHECK(conjugate_subgroups(s4, point_stabilizer(s4, 0), point_stabilizer(s4, 3)));
    CHECK_FALSE(conjugate_subgroups(s4, point_stabilizer(s4, 0), sylow_subgroup(s4, 2)));
    permgroup d1 = group_closure(4, {perm_from_cycles("(1,2)(3,4)", 4)});
    CHECK(conjugate_contained(s4, d1, sylow_subgroup(s4, 2)));
    permgroup d3 = group_closure(4, {perm_from_cycles("(1,2,3)", 4)});
    CHECK_FALSE(conjugate_contained(s4, d3, sylow_subgroup(s4, 2)));

    // classes: S4 has one class of shape (2,2); A5 splits the 5-cycles in two
    auto c22 = class_elements(s4, {2, 2});
    REQUIRE(c22.size() == 1);
    CHECK(c22[0].size() == 3);
    auto c5s = class_elements(alt_group(5), {5});
    REQUIRE(c5s.size() == 2);
    CHECK(c5s[0].size() == 12);
    CHECK(c5s[1].size() == 12);
}

TEST_CASE("generation certificates") {
    permgroup a5 = alt_group(5);
    gencert_report g1 = generation_certificate(a5, {{5}, {3, 1, 1}});
    CHECK(g1.certified);
    CHECK_FALSE(g1.used_types.empty());
    CHECK_FALSE(g1.method.empty());
    gencert_report g2 = generation_certificate(a5, {{5}});
    CHECK_FALSE(g2.certified);  // a single 5-class sits inside C5 normalizers
    permgroup a8 = alt_group(8);
    gencert_report g3 = generation_certificate(a8, {{2, 2, 2, 2}, {3, 3, 1, 1}, {7, 1}, {5, 3}, {15}});
    // types realized by an actual A8 polynomial must force A8 (smoke for the big case)
    CHECK(g3.certified);
}

TEST_CASE("coset action table for the degree-6 actions of S5 and A5") {
    using row = std::map<std::vector<int>, std::set<std::vector<int>>>;
    permgroup s5 = sym_group(5);
    perm c5 = perm_from_cycles("(1,2,3,4,5)", 5);
    row got = coset_action_table(s5, normalizer_of_cyclic(s5, c5));
    row want = {
        {{1, 1, 1, 1, 1}, {{1, 1, 1, 1, 1, 1}}},
        {{2, 1, 1, 1}, {{2, 2, 2}}},
        {{2, 2, 1}, {{2, 2, 1, 1}}},
        {{3, 1, 1}, {{3, 3}}},
        {{3, 2}, {{6}}},
        {{4, 1}, {{4, 1, 1}}},
        {{5}, {{5, 1}}},
    };
    CHECK(got == want);

    permgroup a5 = alt_group(5);
    row got_a = coset_action_table(a5, normalizer_of_cyclic(a5, c5));
    row want_a = {
        {{1, 1, 1, 1, 1}, {{1, 1, 1, 1, 1, 1}}},
        {{2, 2, 1}, {{2, 2, 1, 1}}},
        {{3, 1, 1}, {{3, 3}}},
        {{5}, {{5, 1}}},
    };
    CHECK(got_a == want_a);
}
