#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "arithdyn/elliptic.hpp"
#include "arithdyn/integrality.hpp"

#include <random>

using namespace arithdyn;

namespace {

BinaryForm form(std::vector<long> c) {
    return BinaryForm(std::vector<Int>(c.begin(), c.end()));
}

const BinaryForm kInfinityClass = form({0, 1});  // Y

}  // namespace

TEST_CASE("chordal distance basics") {
    ProjPoint p{Rat(3), Rat(2)}, q{Rat(0), Rat(1)};
    CHECK_FALSE(chordal_valuation_opt(p, p, 2).has_value());  // Delta(P,P) = 0
    // Delta_p([p:1],[0:1]) = 1/p
    CHECK(chordal_valuation(ProjPoint(Rat(5), Rat(1)), q, 5) == 1);
    CHECK(chordal_archimedean(ProjPoint::infinity_point(), q) == doctest::Approx(1.0));
}

TEST_CASE("chordal symmetry and range") {
    std::mt19937_64 rng(5);
    std::uniform_int_distribution<long> dist(-60, 60);
    Int primes[] = {2, 3, 5, 13};
    int done = 0;
    while (done < 200) {
        long a = dist(rng), b = dist(rng), c = dist(rng), d = dist(rng);
        if ((a == 0 && b == 0) || (c == 0 && d == 0)) continue;
        ProjPoint p{Rat(a), Rat(b)}, q{Rat(c), Rat(d)};
        if (p == q) continue;
        ++done;
        for (const Int& pr : primes) {
            long v1 = chordal_valuation(p, q, pr);
            long v2 = chordal_valuation(q, p, pr);
            CHECK(v1 == v2);
            CHECK(v1 >= 0);  // Delta <= 1
        }
        double da = chordal_archimedean(p, q);
        CHECK(da >= 0.0);
        CHECK(da <= 1.0 + 1e-12);
    }
}

TEST_CASE("local height against (infinity)") {
    Divisor dinf = Divisor::single(kInfinityClass);
    // P = [3:2], v=2: lambda = v_2(2) log 2
    auto h = local_height_divisor(ProjPoint(Rat(3), Rat(2)), dinf, Place::finite(2));
    CHECK(h.log_multiple == 1);
    // integer points have zero local height at all finite places
    for (long pr : {2L, 3L, 7L}) {
        auto hz = local_height_divisor(ProjPoint(Rat(5), Rat(1)), dinf, Place::finite(pr));
        CHECK(hz.log_multiple == 0);
    }
    // weight 2 doubles
    Divisor d2 = Divisor::single(kInfinityClass, 2);
    auto hd = local_height_divisor(ProjPoint(Rat(3), Rat(2)), d2, Place::finite(2));
    CHECK(hd.log_multiple == 2);
    // infinite height in the support
    auto hs = local_height_divisor(ProjPoint::infinity_point(), dinf, Place::finite(2));
    CHECK(hs.infinite);
}

TEST_CASE("S-integral points: the Z example") {
    Divisor dinf = Divisor::single(kInfinityClass);
    SSet s;  // just {oo}
    CHECK(is_S_integral_point(ProjPoint(Rat(7), Rat(1)), dinf, s));
    CHECK(is_S_integral_point(ProjPoint(Rat(-3), Rat(1)), dinf, s));
    CHECK_FALSE(is_S_integral_point(ProjPoint(Rat(3), Rat(2)), dinf, s));
    // enlarging S
    SSet s2 = SSet::of_primes({Int(2)});
    CHECK(is_S_integral_point(ProjPoint(Rat(3), Rat(2)), dinf, s2));
    // point in the support
    CHECK_FALSE(is_S_integral_point(ProjPoint::infinity_point(), dinf, s2));
}

TEST_CASE("S-integral classes via resultants") {
    Divisor dinf = Divisor::single(kInfinityClass);
    SSet s;
    // rational integer point class
    CHECK(is_S_integral_class(form({1, -7}), dinf, s));
    // X^2 - 2Y^2 vs class X: resultant +-2
    Divisor dx = Divisor::single(form({1, 0}));
    BinaryForm g = form({1, 0, -2});
    CHECK_FALSE(is_S_integral_class(g, dx, s));
    CHECK(is_S_integral_class(g, dx, SSet::of_primes({Int(2)})));
    // class equal to a class of D
    CHECK_FALSE(is_S_integral_class(kInfinityClass, dinf, s));
}

TEST_CASE("integrality monotone in S, antitone in Supp(D)") {
    std::mt19937_64 rng(41);
    std::uniform_int_distribution<long> dist(-80, 80);
    Divisor d1 = Divisor::single(kInfinityClass);
    Divisor d2 = d1;
    d2.add(form({1, 0}), 1);  // add the class of 0
    SSet s1;
    SSet s2 = SSet::of_primes({Int(2), Int(3)});
    int done = 0;
    while (done < 300) {
        long a = dist(rng), b = dist(rng);
        if (a == 0 && b == 0) continue;
        ++done;
        ProjPoint p{Rat(a), Rat(b)};
        if (is_S_integral_point(p, d1, s1)) CHECK(is_S_integral_point(p, d1, s2));
        if (is_S_integral_point(p, d2, s1)) CHECK(is_S_integral_point(p, d1, s1));
    }
}

TEST_CASE("bad_places") {
    CHECK(bad_places(RationalMap::powering(2)).places.size() == 1);  // just oo
    auto lat = duplication_lattes(WeierstrassCurve(Rat(0), Rat(0), Rat(1)));
    auto bad = bad_places(lat.map);
    CHECK(bad.contains_prime(2));
    CHECK(bad.contains_prime(3));
}

TEST_CASE("distribution relation for the powering map") {
    RationalMap sq = RationalMap::powering(2);
    Divisor dinf = Divisor::single(kInfinityClass);
    // R = [p:1]: both sides zero
    CHECK(check_distribution(sq, dinf, ProjPoint(Rat(5), Rat(1)), Place::finite(5)));
    // R = [1:p]: both sides 2 log p
    ProjPoint r{Rat(1), Rat(5)};
    ProjPoint img = sq.apply(r);
    CHECK(local_height_divisor(img, dinf, Place::finite(5)).log_multiple == 2);
    Divisor pb = pullback_divisor(dinf, sq);
    CHECK(local_height_divisor(r, pb, Place::finite(5)).log_multiple == 2);
    CHECK(check_distribution(sq, dinf, r, Place::finite(5)));
    // excluded place refused
    CHECK_THROWS_AS(check_distribution(sq, dinf, r, Place::infinite_place()), math_error);
}

TEST_CASE("distribution relation on a Lattes duplication, random samples") {
    WeierstrassCurve e(Rat(0), Rat(0), Rat(1));
    auto lat = duplication_lattes(e);
    SSet bad = bad_places(lat.map);
    Divisor dpt = Divisor::of_point(ProjPoint(Rat(2), Rat(1)));
    std::mt19937_64 rng(59);
    std::uniform_int_distribution<long> dist(-40, 40);
    std::vector<Int> primes{5, 7, 11, 13, 101};
    int done = 0;
    while (done < 40) {
        long a = dist(rng), b = dist(rng);
        if (a == 0 && b == 0) continue;
        ++done;
        ProjPoint r{Rat(a), Rat(b)};
        for (const auto& p : primes) {
            if (bad.contains_prime(p)) continue;
            CHECK(check_distribution(lat.map, dpt, r, Place::finite(p)));
        }
    }
}

TEST_CASE("corollary: integrality transfers through pullback at good places") {
    WeierstrassCurve e(Rat(0), Rat(0), Rat(1));
    auto lat = duplication_lattes(e);
    Divisor dpt = Divisor::of_point(ProjPoint(Rat(2), Rat(1)));
    Divisor pb = pullback_divisor(dpt, lat.map);
    // S must contain bad places for the equivalence to be exact.
    SSet s = bad_places(lat.map);
    std::mt19937_64 rng(67);
    std::uniform_int_distribution<long> dist(-50, 50);
    int done = 0;
    while (done < 150) {
        long a = dist(rng), b = dist(rng);
        if (a == 0 && b == 0) continue;
        ++done;
        ProjPoint r{Rat(a), Rat(b)};
        CHECK(is_S_integral_point(lat.map.apply(r), dpt, s) ==
              is_S_integral_point(r, pb, s));
    }
}
