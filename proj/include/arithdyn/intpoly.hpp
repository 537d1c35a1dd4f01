#pragma once

// Dense univariate polynomials over Z, coefficients low-to-high.
//
// This is the engine under binary-forms: content/primitive part, Yun
// squarefree decomposition, subresultant-PRS gcd and resultant, and complete
// factorization into Z-irreducibles (factor mod p, quadratic Hensel lifting,
// Zassenhaus subset recombination).

#include "arithdyn/rat.hpp"

#include <optional>
#include <utility>
#include <vector>

namespace arithdyn::zx {

using Poly = std::vector<Int>;  // p[i] is the coefficient of x^i

int deg(const Poly& p);  // -1 for the zero polynomial
void trim(Poly& p);
bool is_zero(const Poly& p);
const Int& lc(const Poly& p);

Poly add(const Poly& a, const Poly& b);
Poly sub(const Poly& a, const Poly& b);
Poly mul(const Poly& a, const Poly& b);
Poly mul_scalar(const Poly& a, const Int& c);
Poly derivative(const Poly& a);
Int eval(const Poly& a, const Int& x);
Rat eval(const Poly& a, const Rat& x);
// Homogeneous evaluation: sum a[i] * x^i * y^(deg-i), deg = deg(a).
Int eval_homog(const Poly& a, const Int& x, const Int& y);

Int content(const Poly& a);                       // >= 0; 0 only for zero poly
std::pair<Int, Poly> content_primitive(const Poly& a);  // content carries the sign
bool divides(const Poly& d, const Poly& a);       // exact division over Z
std::optional<Poly> div_exact(const Poly& a, const Poly& d);

// gcd over Z, primitive with positive leading coefficient (subresultant PRS).
Poly gcd(const Poly& a, const Poly& b);

// Resultant over Z via the subresultant PRS; exact including sign.
Int resultant(const Poly& a, const Poly& b);

// Yun: returns [(g_1,1),(g_2,2),...] with input = content * prod g_i^i,
// each g_i primitive squarefree (possibly 1, omitted).
std::vector<std::pair<Poly, int>> squarefree_decomposition(const Poly& a);

struct Factorization {
    Int unit_content;  // signed content; unit_content * prod f_i^e_i == input
    std::vector<std::pair<Poly, int>> factors;  // primitive irreducible, lc > 0
};

// Complete factorization over Z of a nonzero polynomial.
Factorization factor(const Poly& a);

// Factors a primitive squarefree polynomial with positive leading coefficient.
std::vector<Poly> factor_squarefree(const Poly& a);

std::string to_string(const Poly& a);

}  // namespace arithdyn::zx
