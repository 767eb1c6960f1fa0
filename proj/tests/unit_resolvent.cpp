#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "galcov/casespec.hpp"
#include "galcov/resolvent.hpp"

#include <algorithm>
#include <string>
#include <vector>

using namespace galcov;

namespace {

struct rng {
    u64 s;
    explicit rng(u64 seed) : s(seed) {}
    u64 next() { return splitmix64(s); }
    long pick(long lo, long hi) { return lo + (long)(next() % (u64)(hi - lo + 1)); }
};

case_spec get_case(const std::string& name) {
    return load_case(std::string(GALCOV_DATA_DIR) + "/cases/" + name + ".json");
}

mpq_class mq(long n, long d) {
    mpq_class q(n, d);
    q.canonicalize();
    return q;
}

qpoly from_roots(const std::vector<mpq_class>& roots) {
    qpoly f = {1};
    for (const auto& r : roots) f = qp_mul(f, qpoly{-r, 1});
    return f;
}

// all k-subsets of {0..n-1}
void subsets(int n, int k, std::vector<std::vector<int>>& out) {
    std::vector<int> idx(k);
    for (int i = 0; i < k; i++) idx[i] = i;
    while (true) {
        out.push_back(idx);
        int i = k - 1;
        while (i >= 0 && idx[i] == n - k + i) i--;
        if (i < 0) break;
        idx[i]++;
        for (int j = i + 1; j < k; j++) idx[j] = idx[j - 1] + 1;
    }
}

qpoly flip_sign(const qpoly& a) {  // a(-x)
    qpoly b = a;
    for (size_t i = 1; i < b.size(); i += 2) b[i] = -b[i];
    return b;
}

zpoly zp_from_strings(const std::vector<std::string>& v) {
    zpoly out;
    for (const auto& s : v) out.emplace_back(s);
    return out;
}

}  // namespace

TEST_CASE("subset-sum resolvent against brute-force expansion") {
    rng r(31);
    for (int trial = 0; trial < 100; trial++) {
        int n = 2 + (int)(r.next() % 6);  // 2..7
        int k = 1 + (int)(r.next() % n);  // 1..n
        std::vector<mpq_class> roots;
        for (int i = 0; i < n; i++) roots.push_back(mpq_class(r.pick(-4, 4)));
        qpoly f = from_roots(roots);
        std::vector<std::vector<int>> ss;
        subsets(n, k, ss);
        std::vector<mpq_class> vals;
        for (const auto& s : ss) {
            mpq_class v = 0;
            for (int i : s) v += roots[i];
            vals.push_back(v);
        }
        CHECK(subset_sum_resolvent(f, k) == from_roots(vals));
    }
}

TEST_CASE("subset-product resolvent against brute-force expansion") {
    rng r(32);
    for (int trial = 0; trial < 50; trial++) {
        int n = 2 + (int)(r.next() % 5);  // 2..6
        int k = 1 + (int)(r.next() % n);
        std::vector<mpq_class> roots;
        for (int i = 0; i < n; i++) roots.push_back(mpq_class(r.pick(-3, 3)));
        qpoly f = from_roots(roots);
        std::vector<std::vector<int>> ss;
        subsets(n, k, ss);
        std::vector<mpq_class> vals;
        for (const auto& s : ss) {
            mpq_class v = 1;
            for (int i : s) v *= roots[i];
            vals.push_back(v);
        }
        CHECK(subset_product_resolvent(f, k) == from_roots(vals));
    }
}

TEST_CASE("subset-sum edge cases and symmetry") {
    qpoly f = from_roots({mq(1, 1), mq(-3, 1), mq(2, 1), mq(5, 1)});
    CHECK(subset_sum_resolvent(f, 1) == f);
    CHECK(subset_sum_resolvent(f, 4) == qpoly{mq(-5, 1), 1});  // single root: the full sum

    // complementary subsets: R_{n-k}(x) = (-1)^C(n,k) R_k(s - x), s = root sum
    rng r(33);
    for (int trial = 0; trial < 10; trial++) {
        std::vector<mpq_class> roots;
        for (int i = 0; i < 5; i++) roots.push_back(mpq_class(r.pick(-4, 4)));
        mpq_class s = 0;
        for (const auto& x : roots) s += x;
        qpoly g = from_roots(roots);
        qpoly r2 = subset_sum_resolvent(g, 2);
        qpoly r3 = subset_sum_resolvent(g, 3);
        qpoly mirrored = qp_shift(flip_sign(r2), -s);  // r2(s - x)
        CHECK(r3 == mirrored);  // C(5,2) = 10 is even
    }

    // (x^2-2)(x^2-3): one pair of opposite roots sums to zero
    qpoly h = qp_mul(qpoly{-2, 0, 1}, qpoly{-3, 0, 1});
    qpoly rh = subset_sum_resolvent(h, 2);
    CHECK(qp_eval(rh, 0) == 0);

    // integer inputs give integer resolvents
    for (const auto& c : subset_sum_resolvent(qp_from_z(get_case("s5").f), 2))
        CHECK(c.get_den() == 1);
}

TEST_CASE("cubic resolvent against brute-force pairing") {
    rng r(34);
    for (int trial = 0; trial < 50; trial++) {
        std::vector<mpq_class> roots;
        long sum = 0;
        for (int i = 0; i < 4; i++) {
            long v = r.pick(-5, 5);
            roots.push_back(mpq_class(v));
            sum += v;
        }
        roots[3] -= mpq_class(sum % 4);  // keep the depressed shift integral
        mpq_class shift = (roots[0] + roots[1] + roots[2] + roots[3]) / 4;
        std::vector<mpq_class> d;  // depressed roots
        for (const auto& x : roots) d.push_back(x - shift);
        std::vector<mpq_class> vals = {(d[0] + d[1]) * (d[2] + d[3]), (d[0] + d[2]) * (d[1] + d[3]),
                                       (d[0] + d[3]) * (d[1] + d[2])};
        qpoly f = from_roots(roots);
        qpoly res = cubic_resolvent(f);
        CHECK(res == from_roots(vals));
        // the resolvent preserves the discriminant
        CHECK(zp_discriminant(qp_clear_denoms(res)) == zp_discriminant(qp_clear_denoms(f)));
    }
}

TEST_CASE("shipped resolvents regenerate exactly") {
    case_spec s4 = get_case("s4"), a4 = get_case("a4");
    CHECK(cubic_resolvent(qp_from_z(s4.f)) == qpoly{1, 9, 10, 1});
    CHECK(cubic_resolvent(qp_from_z(s4.f)) == s4.g2);
    CHECK(cubic_resolvent(qp_from_z(a4.f)) == qpoly{24649, 2586, 89, 1});
    CHECK(cubic_resolvent(qp_from_z(a4.f)) == a4.g2);

    case_spec s5 = get_case("s5"), a5 = get_case("a5");
    CHECK(subset_sum_resolvent(qp_from_z(s5.f), 2) == s5.g1);
    qpoly g1a5 = subset_sum_resolvent(qp_from_z(a5.f), 2);
    CHECK(g1a5 == a5.g1);
    CHECK(g1a5 == qpoly{-461, 5486, 1089, -9559, 2214, 3139, -1160, -167, 129, -20, 1});

    case_spec s6 = get_case("s6"), a6 = get_case("a6");
    even_subset_result e6 = trace_zero_subset_even(qp_from_z(s6.f), 3);
    CHECK(e6.g == s6.g1);
    CHECK(e6.shift == 0);
    even_subset_result ea6 = trace_zero_subset_even(qp_from_z(a6.f), 3);
    CHECK(ea6.g == a6.g1);
    CHECK(ea6.shift == mq(1, 2));

    case_spec a7 = get_case("a7"), a8 = get_case("a8");
    design_result d7 = design_resolvent(a7.f, "fano7");
    CHECK(qp_from_z(d7.g) == a7.g1);
    CHECK(d7.primes_used == std::vector<u64>{58603, 144253});
    design_result d8 = design_resolvent(a8.f, "ag32");
    CHECK(qp_from_z(d8.g) == a8.g1);
    CHECK(d8.primes_used == std::vector<u64>{612971, 653503});
}

TEST_CASE("pentagon sextic replay is deterministic and exact") {
    case_spec s5 = get_case("s5"), a5 = get_case("a5");
    pentagon_result ps = pentagon_sextic(s5.f, 1);
    CHECK(ps.seed_eff == 1);
    CHECK(ps.scale == 5);
    CHECK(ps.shift == mq(-40447, 5));
    CHECK(ps.primes_used == std::vector<u64>{1597, 2819});
    CHECK(ps.g == zp_from_strings({
        "350538378748386273054754440219610895210990746483708298910156250000",
        "-33506696639087958235214822531363203712295525084697265625",
        "1242305849697178866242898214111655354655859375",
        "-22290187014041662692311527492546875",
        "195680617698095557199375",
        "-745888942150",
        "1"}));

    pentagon_result pa = pentagon_sextic(a5.f, 1);
    CHECK(pa.seed_eff == 1);
    CHECK(pa.scale == 5);
    CHECK(pa.shift == mpq_class("20237333/5"));
    CHECK(pa.primes_used == std::vector<u64>{421, 599});
    CHECK(pa.g == zp_from_strings({
        "13931994397906329021836130944282084189287797290311505755433876307830631145679962950015625000000",
        "-18151905720743853289356439475679481138352215988280773769935169207081818291015625",
        "9614347513473888038615016162108998195830996484514329261915234375",
        "-2647624222039448828194103911374143536148879984375",
        "399688504630879204041596560159375",
        "-31362585153625050",
        "1"}));
}

TEST_CASE("tschirnhausen transform maps roots to roots") {
    qpoly f = from_roots({mq(-2, 1), mq(0, 1), mq(1, 1), mq(3, 1)});
    tschirn_result ts = tschirnhausen(f, 7);
    CHECK(qp_deg(ts.g) == 4);
    CHECK(ts.g.back() == 1);
    CHECK(zp_deg(ts.T) < 4);
    for (long root : {-2L, 0L, 1L, 3L}) {
        mpq_class image = qp_eval(qp_from_z(ts.T), mpq_class(root));
        CHECK(qp_eval(ts.g, image) == 0);
    }
}

TEST_CASE("seeded degree-21 resolvent for the A7 companion") {
    case_spec a7 = get_case("a7");
    tschirn_result ts = tschirnhausen(qp_from_z(a7.f), 1);
    CHECK(ts.seed_eff == 1);
    CHECK(ts.T == zpoly{-1, -3, -2, -3, 2, -1, -3});
    qpoly g2 = subset_sum_resolvent(ts.g, 2);
    CHECK(g2 == qp_from_z(zp_from_strings({
        "99884768233802418332840512026679",
        "-220593488838169281598765009668586",
        "174730633690018433903201637383364",
        "-84429887431219979040504582727425",
        "19341299857204994403532005863026",
        "-2937691368128927133202837425331",
        "-784500245821679119952638207310",
        "201760467836790694036939268349",
        "-39504281571063600121938998100",
        "-987729634830915978752745644",
        "900710694021481651542004566",
        "56054866398650741327699968",
        "-46633128961643148131110604",
        "10074594268987999253099628",
        "-1222670464339867959698775",
        "76520757127077016412655",
        "70896207082516143300",
        "27212839330686117",
        "5562961600986",
        "639314015",
        "39174",
        "1"})));
}

TEST_CASE("fully split primes") {
    zpoly f = {-2, 0, 1};
    CHECK(fully_split_primes(f, 3) == std::vector<u64>{7, 17, 23});
    CHECK(fully_split_primes(f, 3, 7) == std::vector<u64>{17, 23, 31});
}
