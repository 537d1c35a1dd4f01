#pragma once

// A morphism of P^1 given by a pair of coprime integer forms of equal degree.

#include "arithdyn/binary_form.hpp"

#include <string>

namespace arithdyn {

struct RationalMap {
    BinaryForm numerator;    // N
    BinaryForm denominator;  // M

    // Checks equal degrees >= 2, joint primitivity/sign, and that
    // resultant(N, M) != 0; throws math_error("not a morphism") otherwise.
    static RationalMap create(BinaryForm n, BinaryForm m);
    // [X^d : Y^d].
    static RationalMap powering(int d);

    int degree() const { return numerator.degree(); }
    Int res() const { return form_resultant(numerator, denominator); }

    ProjPoint apply(const ProjPoint& p) const;

    bool operator==(const RationalMap& o) const {
        return numerator == o.numerator && denominator == o.denominator;
    }
    std::string str() const;
};

}  // namespace arithdyn
