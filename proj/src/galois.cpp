#include "galcov/galois.hpp"
#include "galcov/modpoly.hpp"
#include "galcov/zassenhaus.hpp"
#include "galcov/intutil.hpp"
#include <algorithm>
#include <stdexcept>

namespace galcov {

std::pair<char, int> parse_group_name(const std::string& claim) {
    if (claim.size() != 2 || (claim[0] != 'S' && claim[0] != 'A') || claim[1] < '3' || claim[1] > '8')
        throw std::runtime_error("bad group name: " + claim + " (want S3..S8 or A3..A8)");
    return {claim[0], claim[1] - '0'};
}

static bool is_transposition_type(const std::vector<int>& t) {
    if (t.empty() || t[0] != 2) return false;
    for (std::size_t i = 1; i < t.size(); i++)
        if (t[i] != 1) return false;
    return true;
}

static int pcycle_of_type(const std::vector<int>& t, int n) {
    // returns p if type is a single p-cycle plus fixed points, p prime, p > n/2; else 0
    if (t.empty()) return 0;
    int p = t[0];
    for (std::size_t i = 1; i < t.size(); i++)
        if (t[i] != 1) return 0;
    if (p < 2 || 2 * p <= n) return 0;
    if (!is_prime_u64((u64)p)) return 0;
    return p;
}

static bool type_even(const std::vector<int>& t) {
    int s = 0;
    for (int c : t) s += c - 1;
    return s % 2 == 0;
}

galois_report certify_galois_group(const zpoly& f, const std::string& claim,
                                   const std::vector<u64>& primes) {
    galois_report rep;
    rep.claim = claim;
    auto [kind, n] = parse_group_name(claim);
    if (zp_deg(f) != n) {
        rep.verdict = "refuted";
        rep.notes.push_back("degree " + std::to_string(zp_deg(f)) + " != " + std::to_string(n));
        return rep;
    }
    mpz_class disc = zp_discriminant(f);
    if (disc == 0) {
        rep.verdict = "refuted";
        rep.notes.push_back("zero discriminant (not separable)");
        return rep;
    }
    rep.disc_square = disc > 0 && mpz_perfect_square_p(disc.get_mpz_t());
    if (kind == 'S' && rep.disc_square) {
        rep.verdict = "refuted";
        rep.notes.push_back("square discriminant forces an even Galois group");
        return rep;
    }
    if (kind == 'A' && !rep.disc_square) {
        rep.verdict = "refuted";
        rep.notes.push_back("discriminant is not a square, so the group is not contained in A_n");
        return rep;
    }
    if (!zz_irreducible(f)) {
        rep.verdict = "refuted";
        rep.notes.push_back("reducible over Q, so the group is not transitive");
        return rep;
    }
    mpz_class bad = f.back() * disc;
    for (u64 p : primes) {
        frobenius_sample s;
        s.p = p;
        if (mpz_divisible_ui_p(bad.get_mpz_t(), (unsigned long)p)) {
            s.used = false;
            modpoly mf = mp_from_mpz(f, p);
            for (int d : mp_factor_degrees(mf)) s.type.push_back(d);
            rep.samples.push_back(s);
            rep.notes.push_back("p=" + std::to_string(p) + " divides lc*disc; not usable as evidence");
            continue;
        }
        modpoly mf = mp_from_mpz(f, p);
        for (int d : mp_factor_degrees(mf)) s.type.push_back(d);
        rep.samples.push_back(s);
    }
    if (kind == 'S') {
        u64 trans_p = 0, pcyc_p = 0;
        int pcyc = 0;
        for (const auto& s : rep.samples) {
            if (!s.used) continue;
            if (!trans_p && is_transposition_type(s.type)) trans_p = s.p;
            if (!pcyc_p) {
                int q = pcycle_of_type(s.type, n);
                if (q) { pcyc_p = s.p; pcyc = q; }
            }
        }
        if (trans_p && pcyc_p) {
            rep.certified = true;
            rep.verdict = "certified";
            rep.notes.push_back("transitive (irreducible), transposition at p=" + std::to_string(trans_p) +
                                ", " + std::to_string(pcyc) + "-cycle at p=" + std::to_string(pcyc_p) +
                                " with " + std::to_string(pcyc) + " prime > n/2");
        } else {
            rep.verdict = "inconclusive";
            if (!trans_p) rep.notes.push_back("no transposition pattern among evidence primes");
            if (!pcyc_p) rep.notes.push_back("no p-cycle pattern (p prime > n/2) among evidence primes");
        }
        return rep;
    }
    // A-claim: every observed type must be even; then the observed types must
    // force generation of A_n in any subgroup containing them all
    std::vector<std::vector<int>> types;
    for (const auto& s : rep.samples) {
        if (!s.used) continue;
        if (!type_even(s.type)) {
            rep.verdict = "refuted";
            rep.notes.push_back("odd factorization pattern at p=" + std::to_string(s.p) +
                                " contradicts the square discriminant");
            return rep;
        }
        types.push_back(s.type);
    }
    std::sort(types.begin(), types.end());
    types.erase(std::unique(types.begin(), types.end()), types.end());
    if (types.size() < 2) {
        rep.verdict = "inconclusive";
        rep.notes.push_back("need at least two distinct factorization patterns");
        return rep;
    }
    permgroup an = alt_group(n);
    rep.gencert = generation_certificate(an, types);
    if (rep.gencert.certified) {
        rep.certified = true;
        rep.verdict = "certified";
        std::string msg = "subgroup of A_n (square disc) containing element types {";
        for (std::size_t i = 0; i < rep.gencert.used_types.size(); i++) {
            if (i) msg += ", ";
            msg += "(";
            for (std::size_t j = 0; j < rep.gencert.used_types[i].size(); j++) {
                if (j) msg += ",";
                msg += std::to_string(rep.gencert.used_types[i][j]);
            }
            msg += ")";
        }
        msg += "} must be all of A_n (" + rep.gencert.method + " certificate)";
        rep.notes.push_back(msg);
    } else {
        rep.verdict = "inconclusive";
        rep.notes.push_back("observed types do not certify generation of A_n");
    }
    return rep;
}

}  // namespace galcov
