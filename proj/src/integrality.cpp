#include "arithdyn/integrality.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace arithdyn {

Divisor Divisor::single(BinaryForm cls, int weight) {
    Divisor d;
    d.add(cls, weight);
    return d;
}

Divisor Divisor::of_point(const ProjPoint& p, int weight) {
    return single(BinaryForm::point_class(p), weight);
}

void Divisor::add(const BinaryForm& cls, int weight) {
    if (weight <= 0) throw math_error("divisor weights must be positive");
    for (auto& [c, w] : terms) {
        if (c == cls) {
            w += weight;
            return;
        }
    }
    terms.emplace_back(cls, weight);
}

int Divisor::degree() const {
    int d = 0;
    for (const auto& [c, w] : terms) d += c.degree() * w;
    return d;
}

bool Divisor::in_support(const ProjPoint& p) const {
    for (const auto& [c, w] : terms)
        if (c.evaluate(p) == 0) return true;
    return false;
}

SSet SSet::of_primes(const std::vector<Int>& primes) {
    SSet s;
    for (const auto& p : primes) s.places.insert(Place::finite(p));
    return s;
}

std::string SSet::str() const {
    std::ostringstream os;
    bool first = true;
    for (const auto& v : places) {
        if (!first) os << ",";
        os << v.str();
        first = false;
    }
    return os.str();
}

std::optional<long> chordal_valuation_opt(const ProjPoint& p, const ProjPoint& q,
                                          const Int& prime) {
    Int cross = p.x0 * q.x1 - p.x1 * q.x0;
    if (cross == 0) return std::nullopt;
    // Primitive coordinates make the denominator max terms p-adic units.
    return valuation(cross, prime);
}

long chordal_valuation(const ProjPoint& p, const ProjPoint& q, const Int& prime) {
    auto v = chordal_valuation_opt(p, q, prime);
    if (!v) throw math_error("chordal distance zero (P == Q)");
    return *v;
}

double chordal_archimedean(const ProjPoint& p, const ProjPoint& q) {
    double cross = std::abs(Int(p.x0 * q.x1 - p.x1 * q.x0).get_d());
    double np = std::sqrt(Int(p.x0 * p.x0 + p.x1 * p.x1).get_d());
    double nq = std::sqrt(Int(q.x0 * q.x0 + q.x1 * q.x1).get_d());
    return cross / (np * nq);
}

LocalHeight local_height_divisor(const ProjPoint& p, const Divisor& d, const Place& v) {
    LocalHeight h;
    h.place = v;
    if (v.archimedean) {
        double sum = 0;
        for (const auto& [cls, w] : d.terms) {
            // -log of the archimedean chordal distance to each conjugate,
            // aggregated per class via |G(P)| / (||G|| * ||P||^deg).
            Int val = cls.evaluate(p);
            if (val == 0) {
                h.infinite = true;
                return h;
            }
            double num = std::abs(val.get_d());
            double np = std::max(std::abs(p.x0.get_d()), std::abs(p.x1.get_d()));
            double ng = 0;
            for (const auto& c : cls.coeffs()) ng = std::max(ng, std::abs(c.get_d()));
            double delta = num / (ng * std::pow(np, cls.degree()));
            sum += -w * std::log(std::min(delta, 1.0));
        }
        h.real_value = sum;
        return h;
    }
    Int total = 0;
    for (const auto& [cls, w] : d.terms) {
        Int val = cls.evaluate(p);
        if (val == 0) {
            h.infinite = true;
            return h;
        }
        long k = valuation(val, v.prime);
        total += w * k;
    }
    h.log_multiple = total;  // v_p(G(P)) >= 0 on primitive coordinates
    return h;
}

bool is_S_integral_point(const ProjPoint& p, const Divisor& d, const SSet& s) {
    for (const auto& [cls, w] : d.terms) {
        Int val = cls.evaluate(p);
        if (val == 0) return false;  // in the support: infinite height somewhere
        val = abs(val);
        // Strip the primes of S, then anything left means a coincidence
        // outside S.
        for (const auto& v : s.places) {
            if (v.archimedean) continue;
            mpz_remove(val.get_mpz_t(), val.get_mpz_t(), v.prime.get_mpz_t());
        }
        if (val != 1) return false;
    }
    return true;
}

bool is_S_integral_class(const BinaryForm& g, const Divisor& d, const SSet& s) {
    for (const auto& [cls, w] : d.terms) {
        if (cls == g) return false;
        Int res = abs(form_resultant(cls, g));
        if (res == 0) return false;
        for (const auto& v : s.places) {
            if (v.archimedean) continue;
            mpz_remove(res.get_mpz_t(), res.get_mpz_t(), v.prime.get_mpz_t());
        }
        if (res != 1) return false;
    }
    return true;
}

namespace {

void add_prime_support(SSet& s, Int n) {
    n = abs(n);
    Int p = 2;
    while (n > 1) {
        if (mpz_divisible_p(n.get_mpz_t(), p.get_mpz_t())) {
            s.places.insert(Place::finite(p));
            mpz_remove(n.get_mpz_t(), n.get_mpz_t(), p.get_mpz_t());
            continue;
        }
        if (p * p > n) {
            s.places.insert(Place::finite(n));
            break;
        }
        mpz_nextprime(p.get_mpz_t(), p.get_mpz_t());
    }
}

}  // namespace

SSet bad_places(const RationalMap& phi) {
    Int res = phi.res();
    if (res == 0) throw math_error("not a morphism");
    SSet s;
    add_prime_support(s, res);
    // Leading/trailing structure constants: the values at [1:0] and [0:1].
    for (const BinaryForm* f : {&phi.numerator, &phi.denominator}) {
        const auto& c = f->coeffs();
        if (c.front() != 0) add_prime_support(s, c.front());
        if (c.back() != 0) add_prime_support(s, c.back());
    }
    return s;
}

Divisor pullback_divisor(const Divisor& d, const RationalMap& phi) {
    Divisor out;
    for (const auto& [cls, w] : d.terms) {
        BinaryForm pulled = pullback_form(cls, phi);
        for (const auto& [irr, mult] : factor_form(pulled).factors)
            out.add(irr, w * mult);
    }
    return out;
}

bool check_distribution(const RationalMap& phi, const Divisor& dpt, const ProjPoint& r,
                        const Place& v) {
    if (v.archimedean || bad_places(phi).contains(v))
        throw math_error("place excluded by the distribution relation hypothesis");
    ProjPoint image = phi.apply(r);
    LocalHeight lhs = local_height_divisor(image, dpt, v);
    LocalHeight rhs = local_height_divisor(r, pullback_divisor(dpt, phi), v);
    if (lhs.infinite || rhs.infinite) return lhs.infinite == rhs.infinite;
    return lhs.log_multiple == rhs.log_multiple;
}

}  // namespace arithdyn
