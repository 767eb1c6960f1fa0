#include "galcov/casespec.hpp"
#include <algorithm>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace galcov {

using nlohmann::json;

mpq_class parse_rational(const std::string& s) {
    mpq_class q;
    if (q.set_str(s, 10) != 0) throw std::runtime_error("bad rational: " + s);
    q.canonicalize();
    return q;
}

std::vector<std::string> qpoly_strings(const qpoly& a) {
    std::vector<std::string> out;
    for (const auto& c : a) out.push_back(c.get_str());
    return out;
}

qpoly qpoly_from_strings(const std::vector<std::string>& v) {
    qpoly a;
    for (const auto& s : v) a.push_back(parse_rational(s));
    qp_trim(a);
    return a;
}

qpoly parse_poly_text(const std::string& text) {
    std::string cleaned;
    std::istringstream lines(text);
    std::string line;
    while (std::getline(lines, line)) {
        auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        for (char& ch : line)
            if (ch == ',') ch = ' ';
        cleaned += line + ' ';
    }
    qpoly a;
    std::istringstream toks(cleaned);
    std::string t;
    while (toks >> t) a.push_back(parse_rational(t));
    if (a.empty()) throw std::runtime_error("empty polynomial");
    qp_trim(a);
    return a;
}

qpoly load_poly_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open " + path);
    std::stringstream ss;
    ss << in.rdbuf();
    return parse_poly_text(ss.str());
}

json subgroup_spec::to_json() const {
    json j;
    j["kind"] = kind;
    if (kind == "point_stabilizer") j["point"] = point;
    else if (kind == "set_stabilizer") j["set"] = set;
    else if (kind == "partition_stabilizer") j["parts"] = parts;
    else if (kind == "sylow") j["p"] = p;
    else if (kind == "normalizer_of_cyclic") j["cycle"] = cycle;
    else if (kind == "generators") j["gens"] = gens;
    return j;
}

subgroup_spec subgroup_spec::from_json(const json& j) {
    subgroup_spec s;
    s.kind = j.at("kind").get<std::string>();
    if (s.kind == "point_stabilizer") s.point = j.at("point").get<int>();
    else if (s.kind == "set_stabilizer") s.set = j.at("set").get<std::vector<int>>();
    else if (s.kind == "partition_stabilizer")
        s.parts = j.at("parts").get<std::vector<std::vector<int>>>();
    else if (s.kind == "sylow") s.p = j.at("p").get<int>();
    else if (s.kind == "normalizer_of_cyclic") s.cycle = j.at("cycle").get<std::string>();
    else if (s.kind == "generators") s.gens = j.at("gens").get<std::vector<std::string>>();
    else if (s.kind != "agl32") throw std::runtime_error("unknown subgroup kind: " + s.kind);
    return s;
}

permgroup resolve_subgroup(const subgroup_spec& s, const permgroup& ambient) {
    int n = ambient.n;
    if (s.kind == "point_stabilizer") return point_stabilizer(ambient, s.point - 1);
    if (s.kind == "set_stabilizer") {
        std::vector<int> z;
        for (int x : s.set) z.push_back(x - 1);
        return set_stabilizer(ambient, z);
    }
    if (s.kind == "partition_stabilizer") {
        std::vector<std::vector<int>> z;
        for (const auto& part : s.parts) {
            z.push_back({});
            for (int x : part) z.back().push_back(x - 1);
        }
        return partition_stabilizer(ambient, z);
    }
    if (s.kind == "sylow") return sylow_subgroup(ambient, s.p);
    if (s.kind == "normalizer_of_cyclic")
        return normalizer_of_cyclic(ambient, perm_from_cycles(s.cycle, n));
    if (s.kind == "agl32") {
        if (n != 8) throw std::runtime_error("agl32 requires 8 points");
        permgroup A = agl32();
        for (const auto& g : A.gens)
            if (!ambient.contains(g)) throw std::runtime_error("agl32 not inside ambient group");
        return A;
    }
    if (s.kind == "generators") {
        std::vector<perm> gs;
        for (const auto& c : s.gens) gs.push_back(perm_from_cycles(c, n));
        return subgroup_from_generators(ambient, gs);
    }
    throw std::runtime_error("unknown subgroup kind: " + s.kind);
}

json recipe_spec::to_json() const {
    json j;
    j["kind"] = kind;
    if (k) j["k"] = k;
    if (seed) j["seed"] = seed;
    if (!variant.empty()) j["variant"] = variant;
    return j;
}

recipe_spec recipe_spec::from_json(const json& j) {
    recipe_spec r;
    r.kind = j.at("kind").get<std::string>();
    if (j.contains("k")) r.k = j.at("k").get<int>();
    if (j.contains("seed")) r.seed = j.at("seed").get<u64>();
    if (j.contains("variant")) r.variant = j.at("variant").get<std::string>();
    return r;
}

static zpoly zpoly_from_strings(const std::vector<std::string>& v) {
    zpoly a;
    for (const auto& s : v) a.push_back(mpz_class(s));
    zp_trim(a);
    return a;
}

case_spec case_from_json(const json& j) {
    case_spec cs;
    cs.name = j.at("name").get<std::string>();
    cs.group = j.at("group").get<std::string>();
    cs.f = zpoly_from_strings(j.at("f").get<std::vector<std::string>>());
    cs.disc = mpz_class(j.at("disc").get<std::string>());
    if (j.contains("lemma") && !j.at("lemma").is_null()) {
        cs.lemma = true;
        cs.lemma_parent = j.at("lemma").at("parent").get<std::string>();
        cs.u1 = subgroup_spec::from_json(j.at("lemma").at("h"));
        cs.u2 = subgroup_spec::from_json(j.at("lemma").at("k"));
    } else {
        cs.u1 = subgroup_spec::from_json(j.at("u1"));
        cs.u2 = subgroup_spec::from_json(j.at("u2"));
    }
    for (const auto& [ps, ev] : j.at("evidence").items()) {
        u64 p = std::stoull(ps);
        cs.evidence_primes.push_back(p);
        std::vector<expected_factor> fs;
        for (const auto& fac : ev.at("factors")) {
            expected_factor ef;
            for (const auto& c : fac.at(0)) ef.c.push_back(mpz_class(c.get<std::string>()));
            ef.mult = fac.at(1).get<int>();
            fs.push_back(std::move(ef));
        }
        cs.expected[p] = std::move(fs);
    }
    std::sort(cs.evidence_primes.begin(), cs.evidence_primes.end());
    cs.g1 = qpoly_from_strings(j.at("g1").at("poly").get<std::vector<std::string>>());
    cs.g1_recipe = recipe_spec::from_json(j.at("g1").at("recipe"));
    cs.g2 = qpoly_from_strings(j.at("g2").at("poly").get<std::vector<std::string>>());
    cs.g2_recipe = recipe_spec::from_json(j.at("g2").at("recipe"));
    if (j.contains("notes")) cs.notes = j.at("notes").get<std::string>();
    return cs;
}

case_spec load_case(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open case file " + path);
    json j = json::parse(in);
    return case_from_json(j);
}

}  // namespace galcov
