#include "galcov/containment.hpp"
#include "galcov/modpoly.hpp"
#include <algorithm>

namespace galcov {

containment_report splitting_containment_check(const zpoly& g, const zpoly& f, const permgroup& G,
                                               const permgroup& U, int want) {
    containment_report rep;
    rep.note = "statistical certificate (Frobenius sampling), not a proof";
    int n = zp_deg(f);
    long index = (long)(G.order() / U.order());
    if (zp_deg(g) != (int)index) {
        rep.verdict = "inconsistent";
        rep.note = "degree does not equal the subgroup index";
        return rep;
    }
    auto table = coset_action_table(G, U);
    mpz_class df = zp_discriminant(f), dg = zp_discriminant(g);
    if (dg == 0) {
        rep.verdict = "inconsistent";
        rep.note = "g is not squarefree";
        return rep;
    }
    u64 p = 1;
    while (rep.checked < want && p < 10000000ULL) {
        p = next_prime_u64(p);
        if (mpz_divisible_ui_p(df.get_mpz_t(), p)) continue;
        if (mpz_divisible_ui_p(dg.get_mpz_t(), p)) continue;
        modpoly fp = mp_from_mpz(f, p), gp = mp_from_mpz(g, p);
        if (fp.deg() != n || gp.deg() != (int)index) continue;
        containment_sample s;
        s.p = p;
        s.f_type = mp_factor_degrees(fp);
        s.g_degrees = mp_factor_degrees(gp);
        auto it = table.find(s.f_type);
        s.ok = (it != table.end()) && it->second.count(s.g_degrees) > 0;
        // side condition: f split completely => g splits completely
        if (s.ok && std::all_of(s.f_type.begin(), s.f_type.end(), [](int d) { return d == 1; }))
            s.ok = std::all_of(s.g_degrees.begin(), s.g_degrees.end(), [](int d) { return d == 1; });
        if (!s.ok) rep.violations++;
        rep.samples.push_back(std::move(s));
        rep.checked++;
    }
    if (rep.violations > 0) rep.verdict = "inconsistent";
    else if (rep.checked >= 50) rep.verdict = "consistent";
    else rep.verdict = "low-evidence";
    return rep;
}

}  // namespace galcov
