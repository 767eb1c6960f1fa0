#include "galcov/search.hpp"
#include "galcov/galois.hpp"
#include "galcov/localshape.hpp"
#include "galcov/modpoly.hpp"
#include <algorithm>
#include <cstdio>
#include <fstream>
#include <set>
#include <sstream>
#include <stdexcept>

namespace galcov {

using nlohmann::json;

u64 box_spec::size() const {
    u64 n = 1;
    for (const auto& [lo, hi] : ranges) {
        if (hi < lo) return 0;
        u64 w = (u64)(hi - lo) + 1;
        if (n > (u64)1 << 62 || w > (u64)1 << 62 || n * w / w != n)
            throw std::runtime_error("box too large");
        n *= w;
    }
    return n;
}

std::string box_spec::text() const {
    std::string s;
    for (size_t i = 0; i < ranges.size(); i++) {
        if (i) s += ',';
        s += std::to_string(ranges[i].first) + ':' + std::to_string(ranges[i].second);
    }
    return s;
}

box_spec parse_box(const std::string& s) {
    box_spec b;
    std::istringstream in(s);
    std::string tok;
    while (std::getline(in, tok, ',')) {
        auto colon = tok.find(':');
        if (colon == std::string::npos) throw std::runtime_error("box slot needs lo:hi — " + tok);
        long lo = std::stol(tok.substr(0, colon));
        long hi = std::stol(tok.substr(colon + 1));
        if (hi < lo) throw std::runtime_error("empty box slot " + tok);
        b.ranges.push_back({lo, hi});
    }
    if (b.ranges.empty()) throw std::runtime_error("empty box");
    return b;
}

json search_candidate::to_json() const {
    json j;
    json c = json::array();
    for (const auto& x : f) c.push_back(x.get_str());
    j["f"] = c;
    j["disc"] = disc.get_str();
    j["certified"] = certified;
    j["covered"] = covered;
    return j;
}

search_candidate search_candidate::from_json(const json& j) {
    search_candidate c;
    for (const auto& s : j.at("f")) c.f.push_back(mpz_class(s.get<std::string>()));
    c.disc = mpz_class(j.at("disc").get<std::string>());
    c.certified = j.at("certified").get<bool>();
    c.covered = j.at("covered").get<bool>();
    return c;
}

json search_result::to_json() const {
    json j;
    j["group"] = group;
    j["scanned"] = scanned;
    j["position"] = position;
    j["exhausted"] = exhausted;
    j["found"] = json::array();
    for (const auto& c : found) j["found"].push_back(c.to_json());
    return j;
}

void standard_covering(const std::string& group, const permgroup& G, permgroup& U1, permgroup& U2) {
    auto [kind, n] = parse_group_name(group);
    auto spec = [&](const char* kindname, json extra) {
        json j = extra;
        j["kind"] = kindname;
        return subgroup_spec::from_json(j);
    };
    subgroup_spec h, k;
    bool lemma = false;
    int pn = n;
    if (group == "S3") {
        h = spec("generators", {{"gens", {"(1,2,3)"}}});
        k = spec("point_stabilizer", {{"point", 3}});
    } else if (group == "S4") {
        h = spec("point_stabilizer", {{"point", 4}});
        k = spec("sylow", {{"p", 2}});
    } else if (group == "S5" || group == "A5") {
        h = spec("set_stabilizer", {{"set", {1, 2}}});
        k = spec("normalizer_of_cyclic", {{"cycle", "(1,2,3,4,5)"}});
        lemma = group == "A5";
    } else if (group == "S6" || group == "A6") {
        h = spec("partition_stabilizer", {{"parts", {{1, 2, 3}, {4, 5, 6}}}});
        k = spec("point_stabilizer", {{"point", 6}});
        lemma = group == "A6";
    } else if (group == "A4") {
        h = spec("sylow", {{"p", 3}});
        k = spec("sylow", {{"p", 2}});
    } else if (group == "A7") {
        h = spec("generators",
                 {{"gens", {"(4,5)(6,7)", "(4,6)(5,7)", "(2,3)(6,7)", "(2,4)(3,5)", "(1,2)(5,6)"}}});
        k = spec("partition_stabilizer", {{"parts", {{1, 2}, {3, 4, 5, 6, 7}}}});
    } else if (group == "A8") {
        h = spec("agl32", json::object());
        k = spec("partition_stabilizer", {{"parts", {{1, 2, 3}, {4, 5, 6, 7, 8}}}});
    } else {
        throw std::runtime_error("no covering pair for " + group);
    }
    if (lemma) {
        permgroup P = sym_group(pn);
        lemma_report lr = derive_covering_lemma(P, G, resolve_subgroup(h, P), resolve_subgroup(k, P), U1, U2);
        if (!(lr.normal && lr.product_h && lr.product_k))
            throw std::runtime_error("covering lemma failed for " + group);
    } else {
        U1 = resolve_subgroup(h, G);
        U2 = resolve_subgroup(k, G);
    }
}

static void write_checkpoint(const std::string& path, const std::string& group, const box_spec& box,
                             u64 position, const std::vector<search_candidate>& found) {
    if (path.empty()) return;
    json j;
    j["group"] = group;
    j["box"] = box.text();
    j["position"] = position;
    j["found"] = json::array();
    for (const auto& c : found) j["found"].push_back(c.to_json());
    std::string tmp = path + ".tmp";
    {
        std::ofstream out(tmp);
        if (!out) throw std::runtime_error("cannot write checkpoint " + tmp);
        out << j.dump(1) << "\n";
    }
    if (std::rename(tmp.c_str(), path.c_str()) != 0)
        throw std::runtime_error("cannot move checkpoint into place: " + path);
}

static void rank(std::vector<search_candidate>& found) {
    std::stable_sort(found.begin(), found.end(), [](const search_candidate& a, const search_candidate& b) {
        bool fa = a.certified && a.covered, fb = b.certified && b.covered;
        if (fa != fb) return fa;
        mpz_class da = abs(a.disc), db = abs(b.disc);
        if (da != db) return da < db;
        return a.f < b.f;
    });
}

search_result search_candidates(const std::string& group, const box_spec& box, u64 budget,
                                const std::string& checkpoint_path) {
    auto [kind, n] = parse_group_name(group);
    if ((int)box.ranges.size() != n)
        throw std::runtime_error("box must give ranges for a_0..a_" + std::to_string(n - 1));
    permgroup G = kind == 'S' ? sym_group(n) : alt_group(n);
    permgroup U1, U2;
    standard_covering(group, G, U1, U2);
    std::set<std::vector<int>> types;
    for (const auto& g : G.elems) types.insert(perm_cycle_type(g));

    search_result res;
    res.group = group;
    u64 total = box.size();

    // resume
    if (!checkpoint_path.empty()) {
        std::ifstream in(checkpoint_path);
        if (in) {
            json j = json::parse(in);
            if (j.at("group").get<std::string>() == group && j.at("box").get<std::string>() == box.text()) {
                res.position = j.at("position").get<u64>();
                for (const auto& cj : j.at("found")) res.found.push_back(search_candidate::from_json(cj));
            }
        }
    }

    std::vector<std::pair<mpz_class, int>> ram;
    while (res.position < total && res.scanned < budget) {
        u64 idx = res.position++;
        res.scanned++;
        zpoly f;
        for (const auto& [lo, hi] : box.ranges) {
            u64 w = (u64)(hi - lo) + 1;
            f.emplace_back((long)(lo + (long)(idx % w)));
            idx /= w;
        }
        f.emplace_back(1);
        if (zp_deg(f) != n) continue;  // defensive; monic by construction

        mpz_class disc = zp_discriminant(f);
        if (disc == 0) continue;
        mpz_class ad = abs(disc);
        if (kind == 'S') {
            if (!is_prime_mpz(ad)) continue;
            ram = {{ad, 1}};
        } else {
            if (!mpz_perfect_square_p(ad.get_mpz_t())) continue;
            mpz_class r;
            mpz_sqrt(r.get_mpz_t(), ad.get_mpz_t());
            if (!is_prime_mpz(r)) continue;
            ram = {{r, 2}};
        }

        // Dedekind screen: sampled factorization types must be cycle types of the target
        std::vector<u64> sample, evidence;
        for (u64 p = 2; sample.size() < 12 || evidence.size() < 25; p = next_prime_u64(p)) {
            if (mpz_divisible_ui_p(disc.get_mpz_t(), p)) continue;
            if (sample.size() < 12) sample.push_back(p);
            if (evidence.size() < 25) evidence.push_back(p);
        }
        bool screened = true;
        for (u64 p : sample) {
            if (!types.count(mp_factor_degrees(mp_from_mpz(f, p)))) {
                screened = false;
                break;
            }
        }
        if (!screened) continue;

        search_candidate cand;
        cand.f = f;
        cand.disc = disc;
        cand.certified = certify_galois_group(f, group, evidence).certified;
        cand.covered = true;
        for (const auto& [pz, mult] : ram) {
            if (!pz.fits_ulong_p()) {
                cand.covered = false;
                break;
            }
            localshape_report lr = derive_local_shape(f, pz.get_ui(), G, kind == 'A');
            mark_coverage(lr, G, U1, U2);
            if (!all_covered(lr)) {
                cand.covered = false;
                break;
            }
        }
        res.found.push_back(std::move(cand));
        if (res.scanned % 65536 == 0) {
            rank(res.found);
            write_checkpoint(checkpoint_path, group, box, res.position, res.found);
        }
    }
    res.exhausted = res.position >= total;
    rank(res.found);
    write_checkpoint(checkpoint_path, group, box, res.position, res.found);
    return res;
}

}  // namespace galcov
