#pragma once
#include "galcov/zpoly.hpp"

namespace galcov {

// dense polynomials over Q, low-to-high, normalized
using qpoly = std::vector<mpq_class>;

void qp_trim(qpoly& a);
int qp_deg(const qpoly& a);
qpoly qp_from_z(const zpoly& a);
qpoly qp_add(const qpoly& a, const qpoly& b);
qpoly qp_sub(const qpoly& a, const qpoly& b);
qpoly qp_mul(const qpoly& a, const qpoly& b);
qpoly qp_scale(const qpoly& a, const mpq_class& k);
std::pair<qpoly, qpoly> qp_divmod(const qpoly& a, const qpoly& b);
qpoly qp_gcd(qpoly a, qpoly b);  // monic
qpoly qp_deriv(const qpoly& a);
mpq_class qp_eval(const qpoly& a, const mpq_class& x);
qpoly qp_shift(const qpoly& a, const mpq_class& s);  // a(x+s)
qpoly qp_monic(const qpoly& a);
bool qp_is_squarefree(const qpoly& a);

// monic qpoly -> power sums p_1..p_N of its roots (Newton, going down)
std::vector<mpq_class> qp_power_sums(const qpoly& f, int N);
// power sums p_1..p_deg -> monic polynomial with those root power sums (Newton, going up)
qpoly qp_from_power_sums(const std::vector<mpq_class>& p, int deg);

// clear denominators: returns primitive zpoly = a * lcm(dens), up to sign (lc>0 if monic-positive)
zpoly qp_clear_denoms(const qpoly& a);
// integral model: monic qpoly -> monic zpoly via x -> x/s, least positive integer s;
// returns {model, s}
std::pair<zpoly, mpz_class> qp_integral_model(const qpoly& a);

// substitute x -> x + trace/n to kill the subleading coefficient; returns shifted poly and the shift used
std::pair<qpoly, mpq_class> qp_trace_zero(const qpoly& a);

// even part: f(x) with only even-degree terms -> g with g(x^2)=f(x); throws if odd terms present
qpoly qp_even_split(const qpoly& a);

std::string qp_to_string(const qpoly& a);

}  // namespace galcov
