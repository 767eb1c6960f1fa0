#include "galcov/perm.hpp"
#include <algorithm>
#include <stdexcept>
#include <sstream>

namespace galcov {

const std::uint32_t factorial_table[9] = {1, 1, 2, 6, 24, 120, 720, 5040, 40320};

perm perm_identity(int n) {
    perm r;
    r.n = (std::uint8_t)n;
    return r;
}

perm perm_compose(const perm& a, const perm& b) {
    perm r;
    r.n = a.n;
    for (int i = 0; i < 8; i++) r.p[i] = a.p[b.p[i]];
    return r;
}

perm perm_inverse(const perm& a) {
    perm r;
    r.n = a.n;
    for (int i = 0; i < 8; i++) r.p[a.p[i]] = (std::uint8_t)i;
    return r;
}

perm perm_conj(const perm& g, const perm& x) {
    return perm_compose(perm_compose(g, x), perm_inverse(g));
}

bool perm_is_identity(const perm& a) {
    for (int i = 0; i < 8; i++)
        if (a.p[i] != i) return false;
    return true;
}

int perm_order(const perm& a) {
    int ord = 1;
    perm c = a;
    while (!perm_is_identity(c)) { c = perm_compose(a, c); ord++; }
    return ord;
}

int perm_parity(const perm& a) {
    bool seen[8] = {};
    int par = 0;
    for (int i = 0; i < a.n; i++) {
        if (seen[i]) continue;
        int len = 0, j = i;
        while (!seen[j]) { seen[j] = true; j = a.p[j]; len++; }
        par ^= (len - 1) & 1;
    }
    return par;
}

std::vector<int> perm_cycle_type(const perm& a) {
    bool seen[8] = {};
    std::vector<int> t;
    for (int i = 0; i < a.n; i++) {
        if (seen[i]) continue;
        int len = 0, j = i;
        while (!seen[j]) { seen[j] = true; j = a.p[j]; len++; }
        t.push_back(len);
    }
    std::sort(t.rbegin(), t.rend());
    return t;
}

std::string perm_to_cycles(const perm& a) {
    bool seen[8] = {};
    std::ostringstream os;
    bool any = false;
    for (int i = 0; i < a.n; i++) {
        if (seen[i] || a.p[i] == i) { seen[i] = true; continue; }
        os << "(";
        int j = i;
        bool first = true;
        while (!seen[j]) {
            seen[j] = true;
            if (!first) os << ",";
            os << (j + 1);
            first = false;
            j = a.p[j];
        }
        os << ")";
        any = true;
    }
    return any ? os.str() : "()";
}

perm perm_from_cycles(const std::string& s, int n) {
    perm r = perm_identity(n);
    size_t i = 0;
    while (i < s.size()) {
        while (i < s.size() && (s[i] == ' ' || s[i] == '\t')) i++;
        if (i >= s.size()) break;
        if (s[i] != '(') throw std::runtime_error("perm parse: expected '(' in " + s);
        i++;
        std::vector<int> cyc;
        while (i < s.size() && s[i] != ')') {
            while (i < s.size() && (s[i] == ' ' || s[i] == ',')) i++;
            if (i < s.size() && s[i] == ')') break;
            int v = 0;
            bool got = false;
            while (i < s.size() && s[i] >= '0' && s[i] <= '9') {
                v = v * 10 + (s[i] - '0');
                i++;
                got = true;
            }
            if (!got) throw std::runtime_error("perm parse: bad number in " + s);
            if (v < 1 || v > n) throw std::runtime_error("perm parse: point out of range in " + s);
            cyc.push_back(v - 1);
        }
        if (i >= s.size()) throw std::runtime_error("perm parse: unclosed cycle in " + s);
        i++;  // ')'
        for (size_t k = 0; k < cyc.size(); k++) {
            int from = cyc[k], to = cyc[(k + 1) % cyc.size()];
            if (r.p[from] != from && cyc.size() > 1)
                throw std::runtime_error("perm parse: repeated point in " + s);
            if (cyc.size() > 1) r.p[from] = (std::uint8_t)to;
        }
    }
    return r;
}

std::uint32_t perm_rank(const perm& a) {
    std::uint32_t r = 0;
    std::uint8_t used = 0;
    for (int i = 0; i < a.n; i++) {
        int v = a.p[i];
        int smaller = __builtin_popcount(used & ((1u << v) - 1));
        r += (std::uint32_t)(v - smaller) * factorial_table[a.n - 1 - i];
        used |= (std::uint8_t)(1u << v);
    }
    return r;
}

perm perm_unrank(std::uint32_t r, int n) {
    perm a = perm_identity(n);
    std::uint8_t avail = (std::uint8_t)((1u << n) - 1);
    for (int i = 0; i < n; i++) {
        std::uint32_t f = factorial_table[n - 1 - i];
        std::uint32_t k = r / f;
        r %= f;
        // k-th set bit of avail
        std::uint8_t m = avail;
        int v = -1;
        for (std::uint32_t c = 0; c <= k; c++) {
            v = __builtin_ctz(m);
            m &= (std::uint8_t)(m - 1);
        }
        a.p[i] = (std::uint8_t)v;
        avail &= (std::uint8_t)~(1u << v);
    }
    return a;
}

}  // namespace galcov
