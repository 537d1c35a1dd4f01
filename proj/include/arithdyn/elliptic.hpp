#pragma once

// Weierstrass curves y^2 = x^3 + a x^2 + b x + c over Q: exact group law,
// division polynomials, torsion tests, and the Lattes maps that make
// pi([m]P) = phi_m(pi(P)) commute under pi(x,y) = x.
//
// Only the multiplication maps [m] and the projection pi(x,y) = x are
// constructed. The full family also contains translated morphisms
// alpha(X)+T and, for j = 0 or 1728, the projections x^2, x^3 and y; those
// stay out of scope here and censuses label the slice they cover.

#include "arithdyn/binary_form.hpp"
#include "arithdyn/integrality.hpp"
#include "arithdyn/rat.hpp"
#include "arithdyn/rational_map.hpp"

#include <optional>
#include <string>
#include <vector>

namespace arithdyn {

struct WeierstrassCurve {
    Rat a, b, c;

    WeierstrassCurve(Rat a_, Rat b_, Rat c_);  // throws on a singular cubic
    Rat cubic(const Rat& x) const;             // x^3 + a x^2 + b x + c
    Rat discriminant() const;                  // of the cubic (nonzero)
    std::string str() const;
};

struct EPoint {
    bool identity = true;
    Rat x, y;

    EPoint() = default;
    EPoint(Rat x_, Rat y_) : identity(false), x(std::move(x_)), y(std::move(y_)) {}
    static EPoint O() { return EPoint(); }
    bool operator==(const EPoint& o) const {
        if (identity != o.identity) return false;
        return identity || (x == o.x && y == o.y);
    }
    std::string str() const;
};

bool on_curve(const WeierstrassCurve& e, const EPoint& p);
EPoint neg(const WeierstrassCurve& e, const EPoint& p);
EPoint add(const WeierstrassCurve& e, const EPoint& p, const EPoint& q);
EPoint mul(const WeierstrassCurve& e, const Int& m, const EPoint& p);

// Division polynomial psi_n: a polynomial in x, times y when n is even.
struct DivPoly {
    std::vector<Rat> xpart;  // low-to-high in x
    bool has_y = false;      // full psi_n = xpart * y for even n
};

// psi_n, n >= 1 (cached per curve internally by callers that need it).
DivPoly division_polynomial(const WeierstrassCurve& e, int n);
// psi_n^2 as a pure polynomial in x (the y^2 folded through the curve).
std::vector<Rat> division_polynomial_squared(const WeierstrassCurve& e, int n);
// Primitive integer homogenization of psi_n^2 (degree n^2 - 1).
BinaryForm torsion_form(const WeierstrassCurve& e, int n);

struct LattesMap {
    WeierstrassCurve curve;
    int m;
    RationalMap map;
};

// The explicit degree-4 duplication map
// (x^4 - 2bx^2 - 8cx + b^2 - 4ac) / (4x^3 + 4ax^2 + 4bx + 4c).
LattesMap duplication_lattes(const WeierstrassCurve& e);
// phi_m = (x*psi_m^2 - psi_{m-1} psi_{m+1}) / psi_m^2, degree m^2; m = 2
// reproduces duplication_lattes exactly.
LattesMap mult_m_lattes(const WeierstrassCurve& e, int m);

// x(P) as a point of P^1; pi(O) = infinity.
ProjPoint project_x(const EPoint& p);

// Exact torsion test by repeated addition up to order_bound (12 covers all
// rational torsion); for integral models a Lutz-Nagell integrality check
// short-circuits first.
bool is_torsion(const WeierstrassCurve& e, const EPoint& p, int order_bound = 12);

// True iff the irreducible class G divides some psi_n^2 homogenization,
// n <= n_max: decides preperiodicity of the x-class under the implemented
// Lattes family. Bounded search; n_max = 24 gives headroom past the
// quadratic-field torsion bounds.
bool is_torsion_x_class(const WeierstrassCurve& e, const BinaryForm& g, int n_max = 24);

struct FiberReport {
    ProjPoint target;
    bool rational_fiber = false;       // fiber points lie in E(Q)
    std::vector<EPoint> points;        // when rational
    BinaryForm x_class;                // shared x-class of the fiber
    bool torsion = false;              // fiber consists of torsion points
    std::optional<Divisor> divisor;    // D = (xi) + (-xi) when non-torsion
    std::string note;
};

// pi^{-1}(Q) under pi(x,y) = x, with torsion classification and, in the
// non-torsion case, the divisor the finiteness argument wants.
FiberReport fiber_classify(const WeierstrassCurve& e, const ProjPoint& q);

}  // namespace arithdyn
