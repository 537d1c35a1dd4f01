#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "arithdyn/orbit.hpp"

#include <random>

using namespace arithdyn;

namespace {

const WeierstrassCurve kE1(Rat(0), Rat(0), Rat(1));
const WeierstrassCurve kE2(Rat(0), Rat(0), Rat(2));

BinaryForm form(std::vector<long> c) {
    return BinaryForm(std::vector<Int>(c.begin(), c.end()));
}

}  // namespace

TEST_CASE("apply") {
    RationalMap sq = RationalMap::powering(2);
    CHECK(apply(sq, ProjPoint(Rat(2), Rat(3))) == ProjPoint(Rat(4), Rat(9)));
    auto lat = duplication_lattes(kE1);
    CHECK(apply(lat.map, ProjPoint(Rat(2), Rat(1))) == ProjPoint(Rat(0), Rat(1)));
    // 2-torsion x-class root doubles to infinity: x = -1 on E1
    CHECK(apply(lat.map, ProjPoint(Rat(-1), Rat(1))) == ProjPoint::infinity_point());
}

TEST_CASE("forward orbit cycle detection") {
    auto lat = duplication_lattes(kE1);
    auto fix = forward_orbit(lat.map, ProjPoint::infinity_point(), 10);
    CHECK(fix.points.size() == 1);
    CHECK(fix.cycle_found);

    // lift of [2:1] is 6-torsion: orbit reaches a cycle
    auto orb = forward_orbit(lat.map, ProjPoint(Rat(2), Rat(1)), 10);
    CHECK(orb.cycle_found);

    // non-preperiodic point has growing coordinates
    auto grow = forward_orbit(mult_m_lattes(kE2, 2).map, ProjPoint(Rat(-1), Rat(1)), 5);
    CHECK_FALSE(grow.cycle_found);
    for (size_t i = 1; i < grow.points.size(); ++i) {
        CHECK(abs(grow.points[i].x0) + abs(grow.points[i].x1) >
              abs(grow.points[i - 1].x0) + abs(grow.points[i - 1].x1));
    }
}

TEST_CASE("preperiodicity tri-state") {
    auto lat2 = mult_m_lattes(kE2, 2);
    CHECK(is_phi_preperiodic(lat2, ProjPoint::infinity_point(), 5) == Tristate::True);
    CHECK(is_phi_preperiodic(lat2, ProjPoint(Rat(-1), Rat(1)), 5) == Tristate::False);
    // generic map at cutoff: undetermined
    RationalMap generic = RationalMap::create(
        BinaryForm::raw({Int(1), Int(1), Int(1)}), BinaryForm::raw({Int(0), Int(0), Int(1)}));
    CHECK(is_phi_preperiodic(generic, ProjPoint(Rat(2), Rat(1)), 3) ==
          Tristate::Undetermined);
}

TEST_CASE("backward tree of the powering map") {
    RationalMap sq = RationalMap::powering(2);
    BackwardTree t = backward_tree(sq, ProjPoint(Rat(1), Rat(1)), 2);
    REQUIRE(t.levels.size() == 3);
    REQUIRE(t.levels[1].size() == 2);
    CHECK(t.levels[1][0].cls == form({1, -1}));
    CHECK(t.levels[1][1].cls == form({1, 1}));
    // level 2 contains the 4th roots of unity: X^2+Y^2 appears
    bool found = false;
    for (const auto& node : t.levels[2])
        if (node.cls == form({1, 0, 1})) found = true;
    CHECK(found);
    CHECK(t.level_degree(1) == 2);
    CHECK(t.level_degree(2) == 4);
}

TEST_CASE("backward tree of a Lattes duplication from infinity") {
    auto lat = duplication_lattes(kE1);
    BackwardTree t = backward_tree(lat.map, ProjPoint::infinity_point(), 1);
    // preimages of infinity: infinity itself plus the 2-torsion x-classes
    REQUIRE(t.levels[1].size() == 3);
    CHECK(t.levels[1][0].cls == form({0, 1}));      // Y (= infinity)
    CHECK(t.levels[1][1].cls == form({1, 1}));      // x = -1
    CHECK(t.levels[1][2].cls == form({1, -1, 1}));  // quadratic 2-torsion pair
    CHECK(t.level_degree(1) == 4);
}

TEST_CASE("level degree conservation on random trees") {
    std::mt19937_64 rng(83);
    std::uniform_int_distribution<long> dist(-20, 20);
    auto lat = duplication_lattes(kE1);
    RationalMap pow3 = RationalMap::powering(3);
    for (int i = 0; i < 12; ++i) {
        long a = dist(rng), b = dist(rng);
        if (a == 0 && b == 0) continue;
        ProjPoint p{Rat(a), Rat(b)};
        for (const RationalMap* phi : {&lat.map, &pow3}) {
            BackwardTree t = backward_tree(*phi, p, 2);
            Int d(phi->degree());
            CHECK(t.level_degree(1) == d);
            CHECK(t.level_degree(2) == d * d);
        }
    }
}

TEST_CASE("depth-1 rational children map back to the root") {
    auto lat = duplication_lattes(kE1);
    std::mt19937_64 rng(89);
    std::uniform_int_distribution<long> dist(-15, 15);
    for (int i = 0; i < 10; ++i) {
        long a = dist(rng), b = dist(rng);
        if (a == 0 && b == 0) continue;
        ProjPoint p{Rat(a), Rat(b)};
        BackwardTree t = backward_tree(lat.map, p, 1);
        for (const auto& node : t.levels[1]) {
            if (node.cls.degree() != 1) continue;
            CHECK(apply(lat.map, node.cls.root()) == p);
        }
    }
}

TEST_CASE("resource guard") {
    RationalMap sq = RationalMap::powering(2);
    CHECK_THROWS_AS(backward_tree(sq, ProjPoint(Rat(1), Rat(1)), 11, 1024),
                    resource_error);
}

TEST_CASE("serialization determinism") {
    auto lat = duplication_lattes(kE1);
    BackwardTree t1 = backward_tree(lat.map, ProjPoint(Rat(3), Rat(1)), 2);
    BackwardTree t2 = backward_tree(lat.map, ProjPoint(Rat(3), Rat(1)), 2);
    CHECK(serialize_tree(t1) == serialize_tree(t2));
}

TEST_CASE("integral census of integer roots under powering") {
    RationalMap sq = RationalMap::powering(2);
    BackwardTree t = backward_tree(sq, ProjPoint(Rat(16), Rat(1)), 2);
    Divisor dinf = Divisor::single(form({0, 1}));
    SSet s;
    auto rep = integral_census(t, dinf, s);
    REQUIRE(rep.rows.size() == 3);
    // depth 1: +-4 integral; depth 2: +-2 integral
    CHECK(rep.rows[1].integral_rational_points == 2);
    CHECK(rep.rows[2].integral_rational_points == 2);
    // enlarging S never decreases counts
    auto rep2 = integral_census(t, dinf, SSet::of_primes({Int(2), Int(5)}));
    for (size_t i = 0; i < rep.rows.size(); ++i)
        CHECK(rep2.rows[i].integral_classes >= rep.rows[i].integral_classes);
    // Q in the support of every class: zero integral
    Divisor droot = Divisor::single(form({1, -16}));
    BackwardTree t3 = backward_tree(sq, ProjPoint(Rat(16), Rat(1)), 0);
    auto rep3 = integral_census(t3, droot, s);
    CHECK(rep3.rows[0].integral_classes == 0);
}

TEST_CASE("torsion backward-invariance on Lattes trees") {
    // backward orbit of the infinity class consists of torsion classes
    auto lat = duplication_lattes(kE1);
    BackwardTree t = backward_tree(lat.map, ProjPoint::infinity_point(), 2);
    for (const auto& level : t.levels)
        for (const auto& node : level) CHECK(is_torsion_x_class(kE1, node.cls));
}

TEST_CASE("gamma census") {
    Divisor q = Divisor::of_point(ProjPoint(Rat(3), Rat(1)));
    SSet s;
    auto rep = gamma_census(kE2, ProjPoint(Rat(-1), Rat(1)), {2}, 1, q, s, 4);
    CHECK(rep.forward_points.size() == 2);
    CHECK(rep.trees.size() == 2);
    CHECK_FALSE(rep.base_cycle_witnessed);
    CHECK(rep.combined.rows.size() == 2);
    // empty multiplier list: torsion classes only
    auto rep2 = gamma_census(kE2, ProjPoint(Rat(-1), Rat(1)), {}, 1, q, s, 4);
    CHECK(rep2.trees.empty());
    CHECK(rep2.torsion_row.classes > 0);
    // preperiodic base point: cycle witnessed
    auto rep3 = gamma_census(kE1, ProjPoint(Rat(2), Rat(1)), {2}, 1, q, s, 4);
    CHECK(rep3.base_cycle_witnessed);
}
