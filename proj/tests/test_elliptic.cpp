#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "arithdyn/elliptic.hpp"

#include <random>

using namespace arithdyn;

namespace {

const WeierstrassCurve kE1(Rat(0), Rat(0), Rat(1));   // y^2 = x^3 + 1
const WeierstrassCurve kE2(Rat(0), Rat(0), Rat(2));   // y^2 = x^3 + 2
const WeierstrassCurve kEm(Rat(0), Rat(-1), Rat(0));  // y^2 = x^3 - x

std::vector<long> coeffs_of(const BinaryForm& f) {
    std::vector<long> out;
    for (const auto& c : f.coeffs()) out.push_back(c.get_si());
    return out;
}

}  // namespace

TEST_CASE("curve validation") {
    CHECK_THROWS_AS(WeierstrassCurve(Rat(0), Rat(0), Rat(0)), math_error);
    CHECK(kE1.discriminant() == -27);
}

TEST_CASE("group law basics") {
    EPoint p(Rat(2), Rat(3));
    REQUIRE(on_curve(kE1, p));
    EPoint d = add(kE1, p, p);
    CHECK(d == EPoint(Rat(0), Rat(1)));  // 2*(2,3) = (0,1)
    CHECK(add(kE1, p, EPoint::O()) == p);
    CHECK(add(kE1, p, neg(kE1, p)) == EPoint::O());
    CHECK_THROWS_AS(add(kE1, EPoint(Rat(1), Rat(1)), p), math_error);
}

TEST_CASE("group law associativity and commutativity on random multiples") {
    // (2,3) is 6-torsion on E1; use E2's non-torsion (-1,1) for variety.
    EPoint g(Rat(-1), Rat(1));
    REQUIRE(on_curve(kE2, g));
    std::mt19937_64 rng(73);
    std::uniform_int_distribution<long> dist(1, 12);
    for (int i = 0; i < 40; ++i) {
        EPoint a = mul(kE2, dist(rng), g);
        EPoint b = mul(kE2, dist(rng), g);
        EPoint c = mul(kE2, dist(rng), g);
        CHECK(add(kE2, a, b) == add(kE2, b, a));
        CHECK(add(kE2, add(kE2, a, b), c) == add(kE2, a, add(kE2, b, c)));
    }
    // mul matches repeated addition
    EPoint acc = EPoint::O();
    for (int k = 1; k <= 8; ++k) {
        acc = add(kE2, acc, g);
        CHECK(acc == mul(kE2, k, g));
    }
}

TEST_CASE("duplication formula") {
    auto lat = duplication_lattes(kE1);
    CHECK(coeffs_of(lat.map.numerator) == std::vector<long>{1, 0, 0, -8, 0});
    CHECK(coeffs_of(lat.map.denominator) == std::vector<long>{0, 4, 0, 0, 4});
    // phi(2) = 0 matches x(2*(2,3)) = 0
    CHECK(lat.map.apply(ProjPoint(Rat(2), Rat(1))) == ProjPoint(Rat(0), Rat(1)));
    // phi(infinity) = infinity
    CHECK(lat.map.apply(ProjPoint::infinity_point()) == ProjPoint::infinity_point());
}

TEST_CASE("division polynomials") {
    // psi_2^2 = 4(x^3 + ax^2 + bx + c)
    auto sq2 = division_polynomial_squared(kE1, 2);
    CHECK(sq2 == std::vector<Rat>{Rat(4), Rat(0), Rat(0), Rat(4)});
    // psi_3 on general curve: 3x^4 + 4ax^3 + 6bx^2 + 12cx + 4ac - b^2
    WeierstrassCurve e(Rat(1), Rat(-2), Rat(3));
    auto psi3 = division_polynomial(e, 3);
    CHECK_FALSE(psi3.has_y);
    CHECK(psi3.xpart == std::vector<Rat>{Rat(4 * 1 * 3 - 4), Rat(36), Rat(-12), Rat(4), Rat(3)});
}

TEST_CASE("division polynomial degree counts") {
    for (int n = 2; n <= 9; ++n) {
        auto sq = division_polynomial_squared(kE2, n);
        int d = -1;
        for (int i = static_cast<int>(sq.size()) - 1; i >= 0; --i)
            if (sq[i] != 0) {
                d = i;
                break;
            }
        CHECK(d == n * n - 1);
    }
}

TEST_CASE("3-torsion roots of psi_3 via the group law") {
    // On E1 the point (0,1) has order 3; psi_3 = 3x^4 + 12x vanishes at x=0.
    auto psi3 = division_polynomial(kE1, 3);
    Rat v = 0;
    for (int i = static_cast<int>(psi3.xpart.size()) - 1; i >= 0; --i)
        v = v * Rat(0) + psi3.xpart[i];
    CHECK(v == 0);
    EPoint t(Rat(0), Rat(1));
    CHECK(mul(kE1, 3, t).identity);
}

TEST_CASE("mult_m_lattes matches duplication and commutes") {
    auto dup = duplication_lattes(kE1);
    auto m2 = mult_m_lattes(kE1, 2);
    CHECK(m2.map == dup.map);
    for (int m = 2; m <= 4; ++m) {
        auto lm = mult_m_lattes(kE2, m);
        CHECK(lm.map.degree() == m * m);
        CHECK(lm.map.res() != 0);
        // commutation on multiples of the generator
        EPoint g(Rat(-1), Rat(1));
        for (int k = 1; k <= 6; ++k) {
            EPoint p = mul(kE2, k, g);
            CHECK(lm.map.apply(project_x(p)) == project_x(mul(kE2, m, p)));
        }
    }
}

TEST_CASE("commutation through 2-torsion hits infinity") {
    // On y^2 = x^3 - x, (0,0) is 2-torsion: phi_2(0) must be infinity.
    auto lat = mult_m_lattes(kEm, 2);
    CHECK(lat.map.apply(ProjPoint(Rat(0), Rat(1))) == ProjPoint::infinity_point());
}

TEST_CASE("torsion detection") {
    EPoint p(Rat(2), Rat(3));
    CHECK(is_torsion(kE1, p));
    // order exactly 6
    for (int k = 1; k < 6; ++k) CHECK_FALSE(mul(kE1, k, p).identity);
    CHECK(mul(kE1, 6, p).identity);
    CHECK(is_torsion(kE1, EPoint::O()));
    CHECK_FALSE(is_torsion(kE2, EPoint(Rat(-1), Rat(1))));
    // all three 2-torsion points on y^2 = x^3 - x
    for (long x : {-1L, 0L, 1L}) CHECK(is_torsion(kEm, EPoint(Rat(x), Rat(0))));
}

TEST_CASE("torsion x-classes") {
    CHECK(is_torsion_x_class(kE1, BinaryForm({Int(0), Int(1)})));      // Y
    CHECK(is_torsion_x_class(kE1, BinaryForm({Int(1), Int(0)})));      // X (order 3)
    CHECK_FALSE(is_torsion_x_class(kE2, BinaryForm({Int(1), Int(1)})));  // x=-1 non-torsion
    // torsion consistency with rational points
    CHECK(is_torsion_x_class(kE1, BinaryForm({Int(1), Int(-2)})));  // x=2, the 6-torsion
}

TEST_CASE("fiber classification") {
    auto r1 = fiber_classify(kE1, ProjPoint(Rat(2), Rat(1)));
    CHECK(r1.rational_fiber);
    CHECK(r1.torsion);
    CHECK_FALSE(r1.divisor.has_value());

    auto r2 = fiber_classify(kE2, ProjPoint(Rat(-1), Rat(1)));
    CHECK(r2.rational_fiber);
    CHECK_FALSE(r2.torsion);
    REQUIRE(r2.divisor.has_value());
    CHECK(r2.divisor->terms.size() == 1);
    CHECK(r2.divisor->terms[0].second == 2);

    auto r3 = fiber_classify(kE1, ProjPoint::infinity_point());
    CHECK(r3.torsion);
    CHECK(r3.note.find("hypothesis fails") != std::string::npos);

    // quadratic fiber: x = 3 on E2 gives y^2 = 29, irrational, non-torsion
    auto r4 = fiber_classify(kE2, ProjPoint(Rat(3), Rat(1)));
    CHECK_FALSE(r4.rational_fiber);
    CHECK_FALSE(r4.torsion);
    CHECK(r4.divisor.has_value());
}
