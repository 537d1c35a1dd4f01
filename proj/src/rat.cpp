#include "arithdyn/rat.hpp"

#include <sstream>

namespace arithdyn {

Place Place::finite(Int p) {
    if (!is_prime(p)) throw math_error("Place::finite: " + p.get_str() + " is not prime");
    Place v;
    v.archimedean = false;
    v.prime = std::move(p);
    return v;
}

std::string Place::str() const {
    return archimedean ? "oo" : prime.get_str();
}

bool is_prime(const Int& n) {
    if (n < 2) return false;
    return mpz_probab_prime_p(n.get_mpz_t(), 40) != 0;
}

long valuation(const Int& a, const Int& p) {
    if (a == 0) throw math_error("valuation of zero");
    Int tmp = a;
    return static_cast<long>(mpz_remove(tmp.get_mpz_t(), tmp.get_mpz_t(), p.get_mpz_t()));
}

long valuation(const Rat& a, const Int& p) {
    if (a == 0) throw math_error("valuation of zero");
    return valuation(a.get_num(), p) - valuation(a.get_den(), p);
}

double abs_archimedean(const Rat& a) {
    return std::abs(a.get_d());
}

std::set<Place> support_places(const Rat& a) {
    if (a == 0) throw math_error("support_places of zero");
    std::set<Place> out;
    Rat abs_a = abs(a);
    if (abs_a != 1) out.insert(Place::infinite_place());
    // Primes of the support are exactly the primes of numerator and denominator.
    for (const Int* part : {&a.get_num(), &a.get_den()}) {
        Int n = abs(*part);
        Int p = 2;
        while (n > 1) {
            if (mpz_divisible_p(n.get_mpz_t(), p.get_mpz_t())) {
                out.insert(Place::finite(p));
                mpz_remove(n.get_mpz_t(), n.get_mpz_t(), p.get_mpz_t());
            }
            if (p * p > n && n > 1) {
                out.insert(Place::finite(n));
                break;
            }
            mpz_nextprime(p.get_mpz_t(), p.get_mpz_t());
        }
    }
    return out;
}

ProjPoint::ProjPoint(const Rat& a0, const Rat& a1) {
    if (a0 == 0 && a1 == 0) throw math_error("ProjPoint: both coordinates zero");
    // Clear denominators, then strip the gcd and fix the sign.
    Int d = a0.get_den() * a1.get_den();
    Int u = Int(a0 * d);
    Int v = Int(a1 * d);
    Int g;
    mpz_gcd(g.get_mpz_t(), u.get_mpz_t(), v.get_mpz_t());
    u /= g;
    v /= g;
    const Int& last = (v != 0) ? v : u;
    if (last < 0) {
        u = -u;
        v = -v;
    }
    x0 = u;
    x1 = v;
}

Rat ProjPoint::affine() const {
    if (x1 == 0) throw math_error("affine coordinate of the point at infinity");
    Rat r(x0, x1);
    r.canonicalize();
    return r;
}

std::string ProjPoint::str() const {
    return "[" + x0.get_str() + ":" + x1.get_str() + "]";
}

ProjPoint normalize_point(const Rat& a0, const Rat& a1) {
    return ProjPoint(a0, a1);
}

Rat parse_rat(const std::string& s) {
    Rat r;
    if (r.set_str(s, 10) != 0) throw math_error("bad rational: '" + s + "'");
    if (r.get_den() == 0) throw math_error("bad rational (zero denominator): '" + s + "'");
    r.canonicalize();
    return r;
}

ProjPoint parse_point(const std::string& s) {
    auto slash = s.find('/');
    if (slash == std::string::npos) return ProjPoint(parse_rat(s), 1);
    Rat num = parse_rat(s.substr(0, slash));
    Rat den = parse_rat(s.substr(slash + 1));
    if (den == 0) {
        if (num == 0) throw math_error("bad point: '" + s + "'");
        return ProjPoint::infinity_point();
    }
    return ProjPoint(num, den);
}

}  // namespace arithdyn
