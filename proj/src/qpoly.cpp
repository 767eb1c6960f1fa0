#include "galcov/qpoly.hpp"
#include <algorithm>
#include <stdexcept>
#include <sstream>

namespace galcov {

void qp_trim(qpoly& a) { while (!a.empty() && a.back() == 0) a.pop_back(); }
int qp_deg(const qpoly& a) { return (int)a.size() - 1; }

qpoly qp_from_z(const zpoly& a) {
    qpoly r(a.size());
    for (size_t i = 0; i < a.size(); i++) r[i] = a[i];
    return r;
}

qpoly qp_add(const qpoly& a, const qpoly& b) {
    qpoly r(std::max(a.size(), b.size()));
    for (size_t i = 0; i < a.size(); i++) r[i] += a[i];
    for (size_t i = 0; i < b.size(); i++) r[i] += b[i];
    qp_trim(r);
    return r;
}

qpoly qp_sub(const qpoly& a, const qpoly& b) {
    qpoly r(std::max(a.size(), b.size()));
    for (size_t i = 0; i < a.size(); i++) r[i] += a[i];
    for (size_t i = 0; i < b.size(); i++) r[i] -= b[i];
    qp_trim(r);
    return r;
}

qpoly qp_mul(const qpoly& a, const qpoly& b) {
    if (a.empty() || b.empty()) return {};
    qpoly r(a.size() + b.size() - 1);
    for (size_t i = 0; i < a.size(); i++) {
        if (a[i] == 0) continue;
        for (size_t j = 0; j < b.size(); j++) r[i + j] += a[i] * b[j];
    }
    qp_trim(r);
    return r;
}

qpoly qp_scale(const qpoly& a, const mpq_class& k) {
    if (k == 0) return {};
    qpoly r = a;
    for (auto& c : r) c *= k;
    return r;
}

std::pair<qpoly, qpoly> qp_divmod(const qpoly& a, const qpoly& b) {
    if (b.empty()) throw std::runtime_error("qp_divmod by zero");
    qpoly r = a, q;
    if (qp_deg(a) < qp_deg(b)) return {q, r};
    q.resize(qp_deg(a) - qp_deg(b) + 1);
    mpq_class inv = 1 / b.back();
    for (int i = qp_deg(a) - qp_deg(b); i >= 0; i--) {
        if ((int)r.size() - 1 < i + qp_deg(b)) continue;
        mpq_class c = r[i + qp_deg(b)] * inv;
        if (c == 0) continue;
        q[i] = c;
        for (int j = 0; j <= qp_deg(b); j++) r[i + j] -= c * b[j];
        qp_trim(r);
    }
    qp_trim(q);
    return {q, r};
}

qpoly qp_gcd(qpoly a, qpoly b) {
    while (!b.empty()) {
        qpoly r = qp_divmod(a, b).second;
        a = std::move(b);
        b = std::move(r);
    }
    return qp_monic(a);
}

qpoly qp_deriv(const qpoly& a) {
    if (a.size() <= 1) return {};
    qpoly r(a.size() - 1);
    for (size_t i = 1; i < a.size(); i++) r[i - 1] = a[i] * mpq_class((long)i);
    qp_trim(r);
    return r;
}

mpq_class qp_eval(const qpoly& a, const mpq_class& x) {
    mpq_class r = 0;
    for (auto it = a.rbegin(); it != a.rend(); ++it) r = r * x + *it;
    return r;
}

qpoly qp_shift(const qpoly& a, const mpq_class& s) {
    qpoly r;
    for (auto it = a.rbegin(); it != a.rend(); ++it) {
        qpoly nr(r.size() + 1);
        for (size_t i = 0; i < r.size(); i++) {
            nr[i + 1] += r[i];
            nr[i] += r[i] * s;
        }
        if (nr.empty()) nr.resize(1);
        nr[0] += *it;
        qp_trim(nr);
        r = std::move(nr);
    }
    return r;
}

qpoly qp_monic(const qpoly& a) {
    if (a.empty() || a.back() == 1) return a;
    return qp_scale(a, 1 / a.back());
}

bool qp_is_squarefree(const qpoly& a) {
    if (qp_deg(a) < 1) return false;
    return qp_deg(qp_gcd(a, qp_deriv(a))) == 0;
}

std::vector<mpq_class> qp_power_sums(const qpoly& f0, int N) {
    qpoly f = qp_monic(f0);
    int n = qp_deg(f);
    // e_i = (-1)^i f[n-i]
    std::vector<mpq_class> e(n + 1);
    for (int i = 0; i <= n; i++) {
        e[i] = f[n - i];
        if (i & 1) e[i] = -e[i];
    }
    std::vector<mpq_class> p(N + 1);
    for (int k = 1; k <= N; k++) {
        // p_k = sum_{j=1}^{k-1} (-1)^{j-1} e_j p_{k-j} + (-1)^{k-1} k e_k  (e_j = 0 for j > n)
        mpq_class acc = 0;
        for (int i = 1; i < k; i++) {
            if (k - i > n) continue;
            mpq_class t = e[k - i] * p[i];
            if ((k - i) & 1) acc += t;
            else acc -= t;
        }
        mpq_class tail = 0;
        if (k <= n) {
            tail = e[k] * mpq_class((long)k);
            if (!(k & 1)) tail = -tail;
        }
        p[k] = acc + tail;
    }
    p.erase(p.begin());
    return p;
}

qpoly qp_from_power_sums(const std::vector<mpq_class>& p, int deg) {
    if ((int)p.size() < deg) throw std::runtime_error("qp_from_power_sums: need deg power sums");
    std::vector<mpq_class> e(deg + 1);
    e[0] = 1;
    for (int k = 1; k <= deg; k++) {
        // k e_k = sum_{i=1}^{k} (-1)^{i-1} e_{k-i} p_i
        mpq_class s = 0;
        for (int i = 1; i <= k; i++) {
            mpq_class t = e[k - i] * p[i - 1];
            if (i & 1) s += t;
            else s -= t;
        }
        e[k] = s / mpq_class((long)k);
    }
    qpoly f(deg + 1);
    for (int i = 0; i <= deg; i++) {
        f[deg - i] = e[i];
        if (i & 1) f[deg - i] = -f[deg - i];
    }
    return f;
}

zpoly qp_clear_denoms(const qpoly& a) {
    mpz_class l = 1;
    for (auto& c : a) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), c.get_den().get_mpz_t());
    zpoly r(a.size());
    for (size_t i = 0; i < a.size(); i++) {
        mpq_class t = a[i] * mpq_class(l);
        if (t.get_den() != 1) throw std::runtime_error("qp_clear_denoms");
        r[i] = t.get_num();
    }
    return r;
}

std::pair<zpoly, mpz_class> qp_integral_model(const qpoly& a0) {
    qpoly a = qp_monic(a0);
    int n = qp_deg(a);
    if (n < 0) throw std::runtime_error("qp_integral_model: zero poly");
    // need s with s^{n-i} * a_i integral for all i; s = product over primes of p^max(ceil(v_p(den a_i)/(n-i)))
    mpz_class denlcm = 1;
    for (auto& c : a) mpz_lcm(denlcm.get_mpz_t(), denlcm.get_mpz_t(), c.get_den().get_mpz_t());
    mpz_class s = 1;
    if (denlcm > 1) {
        for (auto& [p, e] : factor_mpz(denlcm)) {
            int need = 0;
            for (int i = 0; i < n; i++) {
                // v_p(den(a_i)) with weight n-i
                mpz_class d = a[i].get_den();
                int v = 0;
                while (mpz_divisible_p(d.get_mpz_t(), p.get_mpz_t())) {
                    mpz_divexact(d.get_mpz_t(), d.get_mpz_t(), p.get_mpz_t());
                    v++;
                }
                if (v > 0) need = std::max(need, (v + (n - i) - 1) / (n - i));
            }
            for (int j = 0; j < need; j++) s *= p;
        }
    }
    // model(x) = s^n a(x/s), monic integral
    zpoly r(n + 1);
    mpz_class sp = 1;
    for (int i = n; i >= 0; i--) {
        mpq_class t = a[i] * mpq_class(sp);
        if (t.get_den() != 1) throw std::runtime_error("qp_integral_model: scale failed");
        r[i] = t.get_num();
        sp *= s;
    }
    return {r, s};
}

std::pair<qpoly, mpq_class> qp_trace_zero(const qpoly& a0) {
    qpoly a = qp_monic(a0);
    int n = qp_deg(a);
    mpq_class tr = -a[n - 1];  // sum of roots
    mpq_class sh = tr / mpq_class((long)n);
    // roots of a(x + sh) sum to zero
    return {qp_shift(a, sh), sh};
}

qpoly qp_even_split(const qpoly& a) {
    for (size_t i = 1; i < a.size(); i += 2)
        if (a[i] != 0) throw std::runtime_error("qp_even_split: odd coefficient present");
    qpoly r((a.size() + 1) / 2);
    for (size_t i = 0; i < a.size(); i += 2) r[i / 2] = a[i];
    qp_trim(r);
    return r;
}

std::string qp_to_string(const qpoly& a) {
    std::ostringstream os;
    os << "[";
    for (size_t i = 0; i < a.size(); i++) {
        if (i) os << ",";
        os << a[i].get_num().get_str();
        if (a[i].get_den() != 1) os << "/" << a[i].get_den().get_str();
    }
    os << "]";
    return os.str();
}

}  // namespace galcov
