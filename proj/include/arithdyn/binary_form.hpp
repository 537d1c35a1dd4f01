#pragma once

// Homogeneous binary forms over Z.
//
// A form F(X,Y) = sum c_i X^(d-i) Y^i is stored as the coefficient list
// c_0..c_d. Canonical forms are primitive (coefficient gcd 1) with the first
// nonzero coefficient positive. Irreducible forms stand in for Galois classes
// of algebraic points of P^1: the class of a rational point [a:b] is the
// linear form bX - aY, the class of infinity is Y, and a degree-g form houses
// g conjugate points at once.

#include "arithdyn/intpoly.hpp"
#include "arithdyn/rat.hpp"

#include <string>
#include <vector>

namespace arithdyn {

class BinaryForm {
public:
    BinaryForm() = default;
    // Normalizes to primitive canonical sign; throws on the zero form.
    explicit BinaryForm(std::vector<Int> coeffs);
    static BinaryForm from_coeffs(std::vector<Int> coeffs) { return BinaryForm(std::move(coeffs)); }
    // Keeps the content (used for the jointly-primitive forms of a rational
    // map, e.g. the 4Y(X^3+...) duplication denominator).
    static BinaryForm raw(std::vector<Int> coeffs);
    // The vanishing class of a point: bX - aY for [a:b], Y for infinity.
    static BinaryForm point_class(const ProjPoint& p);
    // Homogenization of a polynomial in x = X/Y to a form of degree deg(p).
    static BinaryForm homogenize(const zx::Poly& p);

    int degree() const { return static_cast<int>(c_.size()) - 1; }
    const std::vector<Int>& coeffs() const { return c_; }  // c_0..c_d, X-descending

    Int evaluate(const ProjPoint& p) const;  // F(x0, x1) on primitive coordinates
    Int evaluate(const Int& x, const Int& y) const;

    // Power of Y dividing F (multiplicity of the root at infinity).
    int y_multiplicity() const;
    // F / Y^y_multiplicity as a polynomial in x (low-to-high), nonzero lc.
    zx::Poly dehomogenize() const;

    // If F is linear, the point it vanishes at.
    ProjPoint root() const;

    bool operator==(const BinaryForm& o) const { return c_ == o.c_; }
    bool operator!=(const BinaryForm& o) const { return c_ != o.c_; }
    // Canonical order: degree, then coefficients c_0..c_d.
    bool operator<(const BinaryForm& o) const;

    std::string str() const;  // "(c0,c1,...,cd)"

private:
    std::vector<Int> c_;  // primitive, first nonzero coefficient positive
};

// content * primitive == input; content carries the sign.
std::pair<Int, BinaryForm> content_primitive(const std::vector<Int>& raw);

// Resultant of two forms; zero iff they share a projective root.
// Sign convention: exact up to +-1 (documented; all consumers use |.| or == 0).
Int form_resultant(const BinaryForm& f, const BinaryForm& g);

struct FactoredForm {
    Int unit_content;  // signed content of the raw input
    std::vector<std::pair<BinaryForm, int>> factors;  // irreducible, multiplicity
};

// Complete factorization into Z-irreducible primitive forms; the Y^k factor
// (root at infinity) is extracted before dehomogenizing.
FactoredForm factor_form(const BinaryForm& f);

// Multiplies the factorization back out (raw coefficients, content included).
std::vector<Int> expand(const FactoredForm& f);

struct RationalMap;  // defined in orbit.hpp

// F(N(X,Y), M(X,Y)) for phi = [N:M], normalized to a canonical form.
// Its factorization realizes the pullback phi^* of the class of F, with
// multiplicities equal to ramification indices.
BinaryForm pullback_form(const BinaryForm& f, const RationalMap& phi);

}  // namespace arithdyn
