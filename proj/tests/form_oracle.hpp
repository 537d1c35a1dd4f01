#pragma once

// Brute-force factorization oracle for binary forms of degree <= 4,
// independent of the Zassenhaus path: rational root search plus explicit
// quadratic-pair solving for quartics. Test-only code.

#include "arithdyn/binary_form.hpp"
#include "arithdyn/intpoly.hpp"

#include <algorithm>
#include <vector>

namespace oracle {

using arithdyn::BinaryForm;
using arithdyn::Int;
using arithdyn::math_error;
namespace zx = arithdyn::zx;

inline std::vector<Int> divisors_of(const Int& n) {
    std::vector<Int> out;
    Int a = abs(n);
    for (Int d = 1; d * d <= a; ++d) {
        if (mpz_divisible_p(a.get_mpz_t(), d.get_mpz_t())) {
            out.push_back(d);
            if (d * d != a) out.push_back(a / d);
        }
    }
    return out;
}

inline bool perfect_square_root(const Int& n, Int& root) {
    if (n < 0) return false;
    if (!mpz_perfect_square_p(n.get_mpz_t())) return false;
    mpz_sqrt(root.get_mpz_t(), n.get_mpz_t());
    return true;
}

// Splits a primitive quartic with no rational roots into two quadratics,
// if possible.
inline bool split_quartic(const zx::Poly& f, zx::Poly& q1, zx::Poly& q2) {
    const Int C0 = f[0], C1 = f[1], C2 = f[2], C3 = f[3], C4 = f[4];
    for (const Int& a : divisors_of(C4)) {
        Int d = C4 / a;
        for (Int c : divisors_of(C0)) {
            for (int sign = 0; sign < 2; ++sign, c = -c) {
                Int g = C0 / c;
                // f = (a x^2 + b x + c)(d x^2 + e x + g)
                std::vector<std::pair<Int, Int>> candidates;  // (b, e)
                Int det = d * c - a * g;
                if (det != 0) {
                    Int bn = C3 * c - C1 * a;
                    Int en = d * C1 - g * C3;
                    if (mpz_divisible_p(bn.get_mpz_t(), det.get_mpz_t()) &&
                        mpz_divisible_p(en.get_mpz_t(), det.get_mpz_t()))
                        candidates.emplace_back(bn / det, en / det);
                } else {
                    // Degenerate system: use b*e = C2 - a*g - c*d and
                    // a*e + b*d = C3, a quadratic in b.
                    Int K = C2 - a * g - c * d;
                    Int disc = C3 * C3 - 4 * d * a * K;
                    Int root;
                    if (perfect_square_root(disc, root)) {
                        for (const Int& r : {root, Int(-root)}) {
                            Int num = C3 + r;
                            Int den = 2 * d;
                            if (mpz_divisible_p(num.get_mpz_t(), den.get_mpz_t())) {
                                Int b = num / den;
                                Int enum_ = C3 - b * d;
                                if (mpz_divisible_p(enum_.get_mpz_t(), a.get_mpz_t()))
                                    candidates.emplace_back(b, enum_ / a);
                            }
                        }
                    }
                }
                for (const auto& [b, e] : candidates) {
                    zx::Poly u{c, b, a}, v{g, e, d};
                    if (zx::mul(u, v) == f) {
                        q1 = u;
                        q2 = v;
                        return true;
                    }
                }
            }
        }
    }
    return false;
}

struct Factored {
    Int unit_content;
    std::vector<std::pair<BinaryForm, int>> factors;
};

inline void push_factor(Factored& out, const zx::Poly& p) {
    auto [c, prim] = zx::content_primitive(p);
    out.unit_content *= c;
    BinaryForm form = BinaryForm::homogenize(prim);
    for (auto& [f, m] : out.factors) {
        if (f == form) {
            ++m;
            return;
        }
    }
    out.factors.emplace_back(form, 1);
}

inline Factored factor_form_oracle(const BinaryForm& input) {
    if (input.degree() > 4) throw math_error("oracle only handles degree <= 4");
    Factored out;
    out.unit_content = 1;
    int k = input.y_multiplicity();
    if (k > 0) out.factors.emplace_back(BinaryForm({Int(0), Int(1)}), k);
    zx::Poly f = input.dehomogenize();
    auto [c, prim] = zx::content_primitive(f);
    out.unit_content *= c;
    f = prim;
    // Strip rational roots p/q (q x - p divides f).
    bool found = true;
    while (zx::deg(f) >= 1 && found) {
        found = false;
        // x = 0 root
        if (f[0] == 0) {
            push_factor(out, zx::Poly{Int(0), Int(1)});
            f.erase(f.begin());
            found = true;
            continue;
        }
        for (const Int& q : divisors_of(zx::lc(f))) {
            for (Int p : divisors_of(f[0])) {
                for (int sign = 0; sign < 2 && !found; ++sign, p = -p) {
                    Int g;
                    mpz_gcd(g.get_mpz_t(), p.get_mpz_t(), q.get_mpz_t());
                    if (g != 1) continue;
                    if (zx::eval_homog(f, p, q) == 0) {
                        zx::Poly lin{-p, q};
                        auto quo = zx::div_exact(f, lin);
                        if (quo) {
                            push_factor(out, lin);
                            f = *quo;
                            found = true;
                        }
                    }
                }
                if (found) break;
            }
            if (found) break;
        }
    }
    int d = zx::deg(f);
    if (d == 0) {
        out.unit_content *= f[0];
    } else if (d <= 3) {
        // No rational roots left: quadratics and cubics are irreducible.
        push_factor(out, f);
    } else {
        zx::Poly q1, q2;
        if (split_quartic(f, q1, q2)) {
            push_factor(out, q1);
            push_factor(out, q2);
        } else {
            push_factor(out, f);
        }
    }
    std::sort(out.factors.begin(), out.factors.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
    return out;
}

}  // namespace oracle
