#include "arithdyn/rational_map.hpp"

namespace arithdyn {

RationalMap RationalMap::create(BinaryForm n, BinaryForm m) {
    if (n.degree() != m.degree())
        throw math_error("not a morphism: defining forms of unequal degree");
    if (n.degree() < 2)
        throw math_error("not a morphism: degree must be >= 2");
    // Joint primitivity: strip only the common content; each form may keep
    // its own. Sign: first nonzero coefficient of N positive.
    Int cn = 0, cm = 0;
    for (const auto& x : n.coeffs()) mpz_gcd(cn.get_mpz_t(), cn.get_mpz_t(), x.get_mpz_t());
    for (const auto& x : m.coeffs()) mpz_gcd(cm.get_mpz_t(), cm.get_mpz_t(), x.get_mpz_t());
    Int g;
    mpz_gcd(g.get_mpz_t(), cn.get_mpz_t(), cm.get_mpz_t());
    auto scale = [&](const BinaryForm& f, bool flip) {
        std::vector<Int> c = f.coeffs();
        for (auto& x : c) {
            x /= g;
            if (flip) x = -x;
        }
        return BinaryForm::raw(std::move(c));
    };
    bool flip = false;
    for (const auto& x : n.coeffs()) {
        if (x != 0) {
            flip = x < 0;
            break;
        }
    }
    RationalMap phi{scale(n, flip), scale(m, flip)};
    if (phi.res() == 0) throw math_error("not a morphism: resultant is zero");
    return phi;
}

RationalMap RationalMap::powering(int d) {
    std::vector<Int> n(d + 1, Int(0)), m(d + 1, Int(0));
    n[0] = 1;  // X^d
    m[d] = 1;  // Y^d
    return create(BinaryForm::raw(std::move(n)), BinaryForm::raw(std::move(m)));
}

ProjPoint RationalMap::apply(const ProjPoint& p) const {
    Int a = numerator.evaluate(p);
    Int b = denominator.evaluate(p);
    return ProjPoint(Rat(a), Rat(b));
}

std::string RationalMap::str() const {
    return numerator.str() + " / " + denominator.str();
}

}  // namespace arithdyn
