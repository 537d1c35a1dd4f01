#pragma once

// Exact arithmetic over Q and the places of Q.
//
// Rat is GMP's canonical rational (numerator/denominator coprime, denominator
// positive). Places are the archimedean place plus one finite place per prime;
// absolute values are normalized the only way the product formula allows:
// |x|_p = p^(-v_p(x)) and the ordinary real absolute value at infinity.
// Non-archimedean values are always handled as exact integer valuations; real
// logarithms appear only in reports.

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <functional>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

namespace arithdyn {

using Int = mpz_class;
using Rat = mpq_class;

class math_error : public std::runtime_error {
public:
    explicit math_error(const std::string& what) : std::runtime_error(what) {}
};

// A place of Q: the archimedean place or a finite place given by a prime p.
struct Place {
    bool archimedean = true;
    Int prime;  // valid iff !archimedean; p >= 2, prime

    static Place infinite_place() { return Place{}; }
    static Place finite(Int p);

    bool operator==(const Place& o) const {
        return archimedean == o.archimedean && (archimedean || prime == o.prime);
    }
    // Archimedean place sorts first, then primes in order.
    bool operator<(const Place& o) const {
        if (archimedean != o.archimedean) return archimedean;
        if (archimedean) return false;
        return prime < o.prime;
    }
    std::string str() const;
};

bool is_prime(const Int& n);

// v_p(a) for nonzero rational a; throws math_error on a == 0.
long valuation(const Rat& a, const Int& p);
long valuation(const Int& a, const Int& p);

// Ordinary absolute value, rounded to double (~16 significant digits).
// Exact comparisons must use Rat directly.
double abs_archimedean(const Rat& a);

// All places v with |a|_v != 1. Throws on a == 0.
std::set<Place> support_places(const Rat& a);

// A point of P^1(Q) in primitive integer coordinates [x0 : x1],
// gcd(|x0|,|x1|) = 1, last nonzero coordinate positive.
struct ProjPoint {
    Int x0, x1;

    ProjPoint() : x0(0), x1(1) {}
    ProjPoint(const Rat& a0, const Rat& a1);  // normalizes
    static ProjPoint from_rational(const Rat& x) { return ProjPoint(x, 1); }
    static ProjPoint infinity_point() { return ProjPoint(1, 0); }

    bool is_infinity() const { return x1 == 0; }
    // Affine value x0/x1; throws on the point at infinity.
    Rat affine() const;

    bool operator==(const ProjPoint& o) const { return x0 == o.x0 && x1 == o.x1; }
    bool operator<(const ProjPoint& o) const {
        if (x1 != o.x1) return x1 < o.x1;
        return x0 < o.x0;
    }
    std::string str() const;
};

ProjPoint normalize_point(const Rat& a0, const Rat& a1);

// Parses "a/b" or "a" into a Rat (canonicalized). Throws math_error on junk.
Rat parse_rat(const std::string& s);
// Parses "x0/x1" or "x0" as a projective point ("1/0" is infinity).
ProjPoint parse_point(const std::string& s);

}  // namespace arithdyn
