#pragma once
#include "galcov/intutil.hpp"
#include <vector>
#include <string>

namespace galcov {

// dense polynomials over Z, coefficients low-to-high, normalized (no trailing zeros)
using zpoly = std::vector<mpz_class>;

void zp_trim(zpoly& a);
int zp_deg(const zpoly& a);  // -1 for zero
zpoly zp_add(const zpoly& a, const zpoly& b);
zpoly zp_sub(const zpoly& a, const zpoly& b);
zpoly zp_mul(const zpoly& a, const zpoly& b);
zpoly zp_scale(const zpoly& a, const mpz_class& k);
zpoly zp_neg(const zpoly& a);
zpoly zp_deriv(const zpoly& a);
mpz_class zp_eval(const zpoly& a, const mpz_class& x);
mpz_class zp_content(const zpoly& a);
zpoly zp_primitive(const zpoly& a);           // content removed, lc > 0
zpoly zp_shift(const zpoly& a, const mpz_class& s);  // a(x + s)
// exact division (throws if not exact)
zpoly zp_divexact(const zpoly& a, const zpoly& b);
bool zp_divides(const zpoly& b, const zpoly& a);  // b | a over Q with exact integer quotient check

// resultant via subresultant PRS (reference) and CRT-modular (accelerator)
mpz_class zp_resultant_prs(zpoly a, zpoly b);
mpz_class zp_resultant_crt(const zpoly& a, const zpoly& b);
mpz_class zp_resultant(const zpoly& a, const zpoly& b);  // dispatches on size
mpz_class zp_discriminant(const zpoly& a);

mpz_class zp_max_abs(const zpoly& a);
mpz_class zp_norm2_ceil(const zpoly& a);  // ceil of the 2-norm
// Mignotte-style bound on coefficients of any degree-k monic-lc divisor
mpz_class zp_factor_bound(const zpoly& a, int k);
mpz_class zp_root_bound(const zpoly& a);  // Cauchy: 1 + max|a_i|/|lc|, ceil

std::string zp_to_string(const zpoly& a);

}  // namespace galcov
