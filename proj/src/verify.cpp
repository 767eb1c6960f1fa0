#include "galcov/verify.hpp"
#include "galcov/containment.hpp"
#include "galcov/galois.hpp"
#include "galcov/localshape.hpp"
#include "galcov/resolvent.hpp"
#include "galcov/sweep.hpp"
#include "galcov/zassenhaus.hpp"
#include <functional>
#include <sstream>
#include <stdexcept>

namespace galcov {

using nlohmann::json;

nlohmann::json case_report::to_json() const {
    json j;
    j["name"] = name;
    j["group"] = group;
    j["pass"] = pass;
    j["stages"] = json::array();
    for (const auto& s : stages) j["stages"].push_back({{"name", s.name}, {"pass", s.pass}, {"detail", s.detail}});
    return j;
}

qpoly regenerate_poly(const recipe_spec& r, const case_spec& cs, json& transcript) {
    qpoly fq = qp_from_z(cs.f);
    if (r.kind == "same-f") return fq;
    if (r.kind == "quadratic-disc") {
        mpz_class d = zp_discriminant(cs.f);
        transcript["disc"] = d.get_str();
        qpoly g;
        g.emplace_back(-d);
        g.emplace_back(0);
        g.emplace_back(1);
        return g;
    }
    if (r.kind == "subset-sum") {
        transcript["k"] = r.k;
        return subset_sum_resolvent(fq, r.k);
    }
    if (r.kind == "subset-product") {
        transcript["k"] = r.k;
        return subset_product_resolvent(fq, r.k);
    }
    if (r.kind == "cubic-resolvent") return cubic_resolvent(fq);
    if (r.kind == "trace-zero-subset-even") {
        even_subset_result es = trace_zero_subset_even(fq, r.k);
        transcript["k"] = r.k;
        transcript["shift"] = es.shift.get_str();
        return es.g;
    }
    if (r.kind == "design-resolvent") {
        design_result dr = design_resolvent(cs.f, r.variant);
        transcript["variant"] = r.variant;
        json ps = json::array();
        for (u64 p : dr.primes_used) ps.push_back(p);
        transcript["primes"] = ps;
        return qp_from_z(dr.g);
    }
    if (r.kind == "tschirnhausen-then-subset") {
        tschirn_result ts = tschirnhausen(fq, r.seed);
        transcript["k"] = r.k;
        transcript["seed_eff"] = ts.seed_eff;
        json tc = json::array();
        for (const auto& c : ts.T) tc.push_back(c.get_str());
        transcript["T"] = tc;
        return subset_sum_resolvent(ts.g, r.k);
    }
    if (r.kind == "pentagon-sextic") {
        pentagon_result pr = pentagon_sextic(cs.f, r.seed);
        transcript["seed_eff"] = pr.seed_eff;
        transcript["shift"] = pr.shift.get_str();
        transcript["scale"] = pr.scale.get_str();
        json tc = json::array();
        for (const auto& c : pr.T) tc.push_back(c.get_str());
        transcript["T"] = tc;
        json ps = json::array();
        for (u64 p : pr.primes_used) ps.push_back(p);
        transcript["primes"] = ps;
        return qp_from_z(pr.g);
    }
    throw std::runtime_error("unknown recipe kind: " + r.kind);
}

static json factor_json(const std::vector<mp_factor>& fs) {
    json a = json::array();
    for (const auto& f : fs) {
        json c = json::array();
        for (u64 x : f.f.c) c.push_back(x);
        a.push_back({{"c", c}, {"mult", f.mult}});
    }
    return a;
}

static stage_result stage_discriminant(const case_spec& cs, mpz_class& disc_out,
                                       std::vector<std::pair<mpz_class, int>>& ram_out) {
    stage_result st{"discriminant", false, json::object()};
    disc_out = zp_discriminant(cs.f);
    ram_out = ramified_primes(disc_out);
    st.detail["value"] = disc_out.get_str();
    st.detail["expected"] = cs.disc.get_str();
    json rp = json::array();
    for (const auto& [p, m] : ram_out) rp.push_back({{"p", p.get_str()}, {"mult", m}});
    st.detail["ramified"] = rp;
    st.pass = disc_out != 0 && disc_out == cs.disc;
    return st;
}

static stage_result stage_modular(const case_spec& cs) {
    stage_result st{"modular_factorizations", true, json::object()};
    json rows = json::array();
    for (const auto& [p, expected] : cs.expected) {
        std::vector<mp_factor> obs = mp_factorize(mp_from_mpz(cs.f, p));
        bool match = obs.size() == expected.size();
        for (size_t i = 0; match && i < obs.size(); i++) {
            const auto& e = expected[i];
            match = obs[i].mult == e.mult && obs[i].f.deg() == (int)e.c.size() - 1;
            for (int j = 0; match && j <= obs[i].f.deg(); j++) {
                u64 ec = mpz_fdiv_ui(e.c[j].get_mpz_t(), p);
                match = obs[i].f.c[j] == ec;
            }
        }
        rows.push_back({{"p", std::to_string(p)}, {"match", match}, {"observed", factor_json(obs)}});
        if (!match) st.pass = false;
    }
    st.detail["primes"] = rows;
    return st;
}

static stage_result stage_galois(const case_spec& cs) {
    stage_result st{"galois_certificate", false, json::object()};
    galois_report gr = certify_galois_group(cs.f, cs.group, cs.evidence_primes);
    st.pass = gr.certified;
    st.detail["verdict"] = gr.verdict;
    st.detail["disc_square"] = gr.disc_square;
    json sp = json::array();
    for (const auto& s : gr.samples) {
        json t = json::array();
        for (int d : s.type) t.push_back(d);
        sp.push_back({{"p", s.p}, {"type", t}, {"used", s.used}});
    }
    st.detail["samples"] = sp;
    if (!gr.gencert.method.empty()) {
        st.detail["gencert"] = {{"method", gr.gencert.method},
                                {"closures_run", gr.gencert.closures_run},
                                {"types_used", (int)gr.gencert.used_types.size()}};
    }
    st.detail["notes"] = gr.notes;
    return st;
}

static stage_result stage_covering(const case_spec& cs, const permgroup& G, permgroup& U1, permgroup& U2) {
    stage_result st{"covering", false, json::object()};
    covering_report cr;
    bool lemma_ok = true;
    if (cs.lemma) {
        auto [pk, pn] = parse_group_name(cs.lemma_parent);
        if (pk != 'S') throw std::runtime_error("lemma parent must be symmetric");
        permgroup P = sym_group(pn);
        permgroup H = resolve_subgroup(cs.u1, P);
        permgroup K = resolve_subgroup(cs.u2, P);
        lemma_report lr = derive_covering_lemma(P, G, H, K, U1, U2);
        st.detail["lemma"] = {{"parent", cs.lemma_parent},
                              {"normal", lr.normal},
                              {"product_h", lr.product_h},
                              {"product_k", lr.product_k}};
        lemma_ok = lr.normal && lr.product_h && lr.product_k;
        cr = lr.derived;
    } else {
        U1 = resolve_subgroup(cs.u1, G);
        U2 = resolve_subgroup(cs.u2, G);
        cr = covering_check(G, U1, U2);
    }
    st.detail["u1_order"] = (int)U1.order();
    st.detail["u2_order"] = (int)U2.order();
    st.detail["u1_index"] = (int)(G.order() / U1.order());
    st.detail["u2_index"] = (int)(G.order() / U2.order());
    st.detail["covers"] = cr.covers;
    st.detail["core_trivial"] = cr.core_trivial;
    st.detail["covered"] = cr.covered;
    st.detail["total"] = cr.total;
    if (!cr.witness.empty()) st.detail["witness"] = cr.witness;
    st.pass = lemma_ok && cr.covers && cr.core_trivial;
    return st;
}

static stage_result stage_local(const case_spec& cs, const permgroup& G, const permgroup& U1,
                                const permgroup& U2, const std::vector<std::pair<mpz_class, int>>& ram,
                                bool even_only) {
    stage_result st{"local_coverage", true, json::object()};
    json rows = json::array();
    for (const auto& [pz, mult] : ram) {
        if (!pz.fits_ulong_p()) {
            rows.push_back({{"p", pz.get_str()}, {"error", "prime exceeds 64 bits"}});
            st.pass = false;
            continue;
        }
        u64 p = pz.get_ui();
        localshape_report lr = derive_local_shape(cs.f, p, G, even_only);
        mark_coverage(lr, G, U1, U2);
        bool ok = all_covered(lr);
        json cl = json::array();
        for (const auto& c : lr.classes) {
            json pieces = json::array();
            for (const auto& pc : c.pieces) pieces.push_back({pc.e, pc.f});
            cl.push_back({{"tau", perm_to_cycles(c.tau)},
                          {"sigma", perm_to_cycles(c.sigma)},
                          {"order", c.order},
                          {"cyclic", c.cyclic},
                          {"pieces", pieces},
                          {"covered_by", c.covered_by}});
        }
        rows.push_back({{"p", pz.get_str()},
                        {"vdisc", lr.vdisc},
                        {"tame", lr.tame},
                        {"exact", lr.exact},
                        {"all_covered", ok},
                        {"classes", cl}});
        if (!ok) st.pass = false;
    }
    st.detail["primes"] = rows;
    return st;
}

// checks shared by the given polynomial and a seeded regeneration
static json check_aux_poly(const qpoly& g, const case_spec& cs, const permgroup& G, const permgroup& U,
                           int index, bool& ok) {
    json d = json::object();
    auto [B, s] = qp_integral_model(g);
    d["scale"] = s.get_str();
    bool irr = zz_irreducible(B);
    bool deg_ok = qp_deg(g) == index;
    containment_report cr = splitting_containment_check(B, cs.f, G, U, 60);
    d["irreducible"] = irr;
    d["degree"] = qp_deg(g);
    d["index"] = index;
    d["containment"] = {{"verdict", cr.verdict}, {"checked", cr.checked}, {"violations", cr.violations}};
    ok = irr && deg_ok && cr.verdict == "consistent";
    return d;
}

static stage_result stage_aux(const std::string& name, const qpoly& g, const recipe_spec& recipe,
                              const case_spec& cs, const permgroup& G, const permgroup& U) {
    stage_result st{name, false, json::object()};
    int index = (int)(G.order() / U.order());
    bool given_ok = false;
    st.detail["given"] = check_aux_poly(g, cs, G, U, index, given_ok);
    json transcript = json::object();
    qpoly reg = regenerate_poly(recipe, cs, transcript);
    st.detail["recipe"] = recipe.to_json();
    st.detail["transcript"] = transcript;
    bool regen_ok = false;
    if (recipe.exact()) {
        regen_ok = reg == g;
        st.detail["regenerated"] = {{"matches_given", regen_ok}};
    } else {
        bool rok = false;
        json rd = check_aux_poly(reg, cs, G, U, index, rok);
        rd["poly"] = qpoly_strings(reg);
        st.detail["regenerated"] = rd;
        regen_ok = rok;
    }
    st.pass = given_ok && regen_ok;
    return st;
}

static stage_result stage_sweep(const case_spec& cs, u64 bound) {
    stage_result st{"sweep", false, json::object()};
    zpoly b1 = qp_integral_model(cs.g1).first;
    zpoly b2 = qp_integral_model(cs.g2).first;
    sweep_report sr = sweep_product({b1, b2}, bound);
    st.detail["bound"] = sr.bound;
    st.detail["no_rational_root"] = sr.no_rational_root;
    json fl = json::array();
    for (u64 p : sr.failures) fl.push_back(p);
    st.detail["failures"] = fl;
    st.detail["ramified_checked"] = (int)sr.ramified.size();
    int maxprec = 0;
    for (const auto& d : sr.ramified) maxprec = std::max(maxprec, d.precision);
    st.detail["max_precision"] = maxprec;
    st.pass = sr.pass;
    return st;
}

static stage_result guard(const std::string& name, const std::function<stage_result()>& fn) {
    try {
        return fn();
    } catch (const std::exception& e) {
        return {name, false, json{{"error", e.what()}}};
    }
}

case_report verify_case(const case_spec& cs, u64 sweep_bound) {
    case_report rep;
    rep.name = cs.name;
    rep.group = cs.group;

    mpz_class disc;
    std::vector<std::pair<mpz_class, int>> ram;
    rep.stages.push_back(guard("discriminant", [&] { return stage_discriminant(cs, disc, ram); }));
    rep.stages.push_back(guard("modular_factorizations", [&] { return stage_modular(cs); }));
    rep.stages.push_back(guard("galois_certificate", [&] { return stage_galois(cs); }));

    auto [kind, n] = parse_group_name(cs.group);
    permgroup G = kind == 'S' ? sym_group(n) : alt_group(n);
    permgroup U1, U2;
    bool have_u = false;
    rep.stages.push_back(guard("covering", [&] {
        stage_result st = stage_covering(cs, G, U1, U2);
        have_u = U1.order() > 0 && U2.order() > 0;
        return st;
    }));

    if (have_u) {
        rep.stages.push_back(
            guard("local_coverage", [&] { return stage_local(cs, G, U1, U2, ram, kind == 'A'); }));
        rep.stages.push_back(guard("g1", [&] { return stage_aux("g1", cs.g1, cs.g1_recipe, cs, G, U1); }));
        rep.stages.push_back(guard("g2", [&] { return stage_aux("g2", cs.g2, cs.g2_recipe, cs, G, U2); }));
    } else {
        for (const char* nm : {"local_coverage", "g1", "g2"})
            rep.stages.push_back({nm, false, json{{"error", "covering subgroups unavailable"}}});
    }
    rep.stages.push_back(guard("sweep", [&] { return stage_sweep(cs, sweep_bound); }));

    rep.pass = true;
    for (const auto& s : rep.stages) rep.pass = rep.pass && s.pass;
    return rep;
}

nlohmann::json verify_all(const std::vector<case_spec>& cases, u64 sweep_bound) {
    json out;
    out["cases"] = json::array();
    bool all = true;
    for (const auto& cs : cases) {
        case_report r = verify_case(cs, sweep_bound);
        all = all && r.pass;
        out["cases"].push_back(r.to_json());
    }
    out["pass"] = all;
    return out;
}

static const char* mark(bool b) { return b ? "pass" : "FAIL"; }

std::string report_markdown(const nlohmann::json& rep) {
    std::ostringstream os;
    os << "# Verification report\n\n";
    const json& cases = rep.contains("cases") ? rep.at("cases") : json::array({rep});
    if (rep.contains("pass")) os << "Overall: **" << mark(rep.at("pass").get<bool>()) << "**\n\n";
    for (const auto& c : cases) {
        os << "## " << c.at("name").get<std::string>() << " (" << c.at("group").get<std::string>()
           << ") — " << mark(c.at("pass").get<bool>()) << "\n\n";
        os << "| stage | result |\n|---|---|\n";
        for (const auto& s : c.at("stages"))
            os << "| " << s.at("name").get<std::string>() << " | " << mark(s.at("pass").get<bool>())
               << " |\n";
        os << "\n";
    }
    return os.str();
}

}  // namespace galcov
