#pragma once

// The v-adic chordal metric on P^1(Q), local height functions against
// divisors, S-integrality for points and Galois classes, and the
// distribution relation as an executable identity.

#include "arithdyn/binary_form.hpp"
#include "arithdyn/rat.hpp"
#include "arithdyn/rational_map.hpp"

#include <optional>
#include <set>
#include <vector>

namespace arithdyn {

// An effective divisor: weighted list of distinct irreducible class forms.
// A weight on a degree-g class puts that weight on each of the g conjugates.
struct Divisor {
    std::vector<std::pair<BinaryForm, int>> terms;

    static Divisor single(BinaryForm cls, int weight = 1);
    static Divisor of_point(const ProjPoint& p, int weight = 1);
    void add(const BinaryForm& cls, int weight);
    int degree() const;
    bool in_support(const ProjPoint& p) const;
};

// Finite set of places; always contains the archimedean place.
struct SSet {
    std::set<Place> places;

    SSet() { places.insert(Place::infinite_place()); }
    static SSet of_primes(const std::vector<Int>& primes);
    bool contains(const Place& v) const { return places.count(v) > 0; }
    bool contains_prime(const Int& p) const { return places.count(Place::finite(p)) > 0; }
    std::string str() const;
};

// Local height at one place. Finite places carry the exact integer multiple
// of log p; the archimedean place a double. Infinite height (point in the
// support) is a distinguished state.
struct LocalHeight {
    Place place;
    bool infinite = false;
    Int log_multiple;     // finite place: lambda = log_multiple * log p
    double real_value = 0;  // archimedean place only

    bool is_zero() const { return !infinite && (place.archimedean ? real_value == 0 : log_multiple == 0); }
};

// Chordal distance Delta_v(P,Q) at a finite place, as the exact valuation:
// Delta = p^(-k) with k = v_p(x0*y1 - x1*y0) for primitive coordinates.
long chordal_valuation(const ProjPoint& p, const ProjPoint& q, const Int& prime);
// Infinity when P == Q is reported by nullopt.
std::optional<long> chordal_valuation_opt(const ProjPoint& p, const ProjPoint& q,
                                          const Int& prime);
double chordal_archimedean(const ProjPoint& p, const ProjPoint& q);

LocalHeight local_height_divisor(const ProjPoint& p, const Divisor& d, const Place& v);

// True iff for every class G of D and every prime p outside S, p does not
// divide G evaluated at P.
bool is_S_integral_point(const ProjPoint& p, const Divisor& d, const SSet& s);

// Class-level test: every prime of resultant(F, G) lies in S, for all F in D.
// G equal to a class of D gives false (shared point).
bool is_S_integral_class(const BinaryForm& g, const Divisor& d, const SSet& s);

// {oo} + primes of resultant(N,M) + primes of the leading/trailing nonzero
// coefficients of N and M: a concrete sufficient exclusion set for the
// distribution relation.
SSet bad_places(const RationalMap& phi);

// phi^* D: pull back every class and factor; weights multiply ramification.
Divisor pullback_divisor(const Divisor& d, const RationalMap& phi);

// Checks lambda_{D,v}(phi(R)) == lambda_{phi^*D,v}(R) exactly at a finite
// place v outside bad_places(phi); throws math_error if v is excluded.
bool check_distribution(const RationalMap& phi, const Divisor& dpt, const ProjPoint& r,
                        const Place& v);

}  // namespace arithdyn
