#include "doctest.h"

#include <algorithm>
#include <cmath>

#include "ptk/descent.hpp"
#include "ptk/errors.hpp"

using namespace ptk;

namespace {

const CurveModel& e36() {
    static CurveModel e(0, -36);
    return e;
}

const CurveModel& e1() {
    static CurveModel e(0, -1);
    return e;
}

CurvePoint pt(long long xn, long long xd, long long yn, long long yd) {
    return CurvePoint::affine(Rat(Int(xn), Int(xd)), Rat(Int(yn), Int(yd)));
}

bool holds(const std::vector<CurvePoint>& v, const CurvePoint& p) {
    return std::find(v.begin(), v.end(), p) != v.end();
}

} // namespace

TEST_CASE("model validation") {
    CHECK_THROWS_AS(CurveModel(1, 0), domain_error);
    CHECK_THROWS_AS(CurveModel(2, 1), domain_error);
    CHECK(e36().partner().a == 0);
    CHECK(e36().partner().b == 144);
    CHECK(e1().partner().b == 4);
}

TEST_CASE("naive heights from the common denominator form") {
    CHECK(naive_height(e36(), CurvePoint::origin()) == 0.0);
    CHECK(naive_height(e36(), pt(0, 1, 0, 1)) == 0.0);
    CHECK(naive_height(e36(), pt(-3, 1, 9, 1)) == doctest::Approx(std::log(9.0)));
    CHECK(naive_height(e36(), pt(25, 4, 35, 8)) == doctest::Approx(std::log(50.0)));
    CHECK_THROWS_AS(naive_height(e36(), pt(1, 1, 1, 1)), domain_error);
}

TEST_CASE("point search on the rank one curve") {
    auto pts = point_search(e36(), std::log(12.0));
    CHECK(pts.size() == 8);
    CHECK(pts[0].infinite);
    CHECK(holds(pts, pt(-3, 1, 9, 1)));
    CHECK(holds(pts, pt(-2, 1, 8, 1)));
    CHECK(holds(pts, pt(0, 1, 0, 1)));
    CHECK(holds(pts, pt(6, 1, 0, 1)));
    CHECK(holds(pts, pt(-6, 1, 0, 1)));
    for (const auto& p : pts) {
        CHECK(on_curve(e36(), p));
        CHECK(holds(pts, negate_point(e36(), p)));
    }
    CHECK(point_search(e36(), std::log(12.0)) == pts);

    auto tiny = point_search(e36(), 0.0);
    CHECK(tiny.size() == 2);
    CHECK(tiny[1] == pt(0, 1, 0, 1));
}

TEST_CASE("point search on the rank zero curve finds only torsion") {
    auto pts = point_search(e1(), std::log(2.0));
    REQUIRE(pts.size() == 4);
    CHECK(pts[0].infinite);
    CHECK(holds(pts, pt(0, 1, 0, 1)));
    CHECK(holds(pts, pt(1, 1, 0, 1)));
    CHECK(holds(pts, pt(-1, 1, 0, 1)));

    CHECK_THROWS_AS(point_search(e1(), -1.0), domain_error);
    CHECK_THROWS_AS(point_search(e1(), 20.0), resource_error);
}

TEST_CASE("group law") {
    auto p = pt(-2, 1, 8, 1);
    CHECK(add_points(e36(), p, negate_point(e36(), p)).infinite);
    CHECK(add_points(e36(), p, CurvePoint::origin()) == p);
    CHECK(add_points(e36(), pt(0, 1, 0, 1), pt(0, 1, 0, 1)).infinite);
    CHECK(add_points(e36(), pt(0, 1, 0, 1), pt(6, 1, 0, 1)) == pt(-6, 1, 0, 1));
    CHECK(add_points(e36(), p, p) == pt(25, 4, 35, 8));

    CHECK(is_torsion(e36(), CurvePoint::origin()));
    CHECK(is_torsion(e36(), pt(0, 1, 0, 1)));
    CHECK(is_torsion(e36(), pt(6, 1, 0, 1)));
    CHECK_FALSE(is_torsion(e36(), p));
}

TEST_CASE("square classes of points") {
    CHECK(square_class(e36(), CurvePoint::origin()) == 1);
    CHECK(square_class(e36(), pt(0, 1, 0, 1)) == -1);
    CHECK(square_class(e36(), pt(-2, 1, 8, 1)) == -2);
    CHECK(square_class(e36(), pt(-3, 1, 9, 1)) == -3);
    CHECK(square_class(e36(), pt(6, 1, 0, 1)) == 6);
    CHECK(square_class(e36(), pt(25, 4, 35, 8)) == 1);
    CHECK(square_class(e1(), pt(0, 1, 0, 1)) == -1);
}

TEST_CASE("local solvability of the quartic spaces") {
    CHECK(local_solvable(e36(), 1, 0));
    CHECK(local_solvable(e36(), -1, 0));
    CHECK(local_solvable(e36(), 1, 2));
    CHECK(local_solvable(e36(), 1, 3));
    CHECK(local_solvable(e36(), -1, 2));
    CHECK(local_solvable(e36(), -1, 3));

    CurveModel twin = e36().partner();
    CHECK_FALSE(local_solvable(twin, -1, 0));
    CHECK_FALSE(local_solvable(twin, 2, 3));
    CHECK_FALSE(local_solvable(twin, 3, 3));
    CHECK_FALSE(local_solvable(twin, 6, 3));

    CHECK_THROWS_AS(local_solvable(e36(), 4, 3), domain_error);
    CHECK_THROWS_AS(local_solvable(e36(), 5, 3), domain_error);
    CHECK_THROWS_AS(local_solvable(e36(), 2, 4), domain_error);
    CHECK_THROWS_AS(local_solvable(e36(), 0, 3), domain_error);
}

TEST_CASE("survivor sets and the rank bound") {
    auto s = selmer_set(e1());
    CHECK(s.classes == std::vector<Int>{-1, 1});
    CHECK(s.undecided.empty());
    CHECK(s.dim2() == 1);
    auto sp = selmer_set(e1().partner());
    CHECK(sp.classes == std::vector<Int>{1, 2});
    CHECK(sp.dim2() == 1);
    CHECK(two_descent_bound(e1()) == 0);

    auto t = selmer_set(e36());
    CHECK(t.classes == std::vector<Int>{-6, -3, -2, -1, 1, 2, 3, 6});
    CHECK(t.undecided.empty());
    CHECK(t.dim2() == 3);
    auto tp = selmer_set(e36().partner());
    CHECK(tp.classes == std::vector<Int>{1});
    CHECK(tp.dim2() == 0);
    CHECK(two_descent_bound(e36()) == 1);

    // images of found global points pass every local test
    for (const auto& p : point_search(e36(), std::log(12.0))) {
        Int c = square_class(e36(), p);
        CHECK(std::find(t.classes.begin(), t.classes.end(), c) != t.classes.end());
    }
}

TEST_CASE("rank zero is determined") {
    auto rep = conditional_rank(e1(), 3.0);
    CHECK(rep.selmer_upper_bound == 0);
    CHECK(rep.rank_lower_bound == 0);
    CHECK(rep.rank_determined);
    CHECK(std::string(rep.verdict()) == "rank-determined");
    CHECK(rep.generators.empty());
    CHECK_FALSE(rep.flagged);
}

TEST_CASE("rank one with an explicit generator") {
    auto rep = conditional_rank(e36(), std::log(12.0));
    CHECK(rep.selmer_upper_bound == 1);
    CHECK(rep.rank_lower_bound == 1);
    CHECK(rep.rank_determined);
    REQUIRE(rep.generators.size() == 1);
    CHECK(rep.generators[0] == pt(-2, 1, 8, 1));
    CHECK_FALSE(is_torsion(e36(), rep.generators[0]));
    CHECK(rep.points_found.size() == 8);
    REQUIRE(rep.heights.size() == 8);
    CHECK(rep.heights[0] == 0.0);
    CHECK(std::is_sorted(rep.heights.begin(), rep.heights.end()));
    CHECK_FALSE(rep.flagged);
}

TEST_CASE("a short search leaves the gap open") {
    auto rep = conditional_rank(e36(), 0.0);
    CHECK(rep.selmer_upper_bound == 1);
    CHECK(rep.rank_lower_bound == 0);
    CHECK_FALSE(rep.rank_determined);
    CHECK(std::string(rep.verdict()) == "gap-remains");
    CHECK(rep.generators.empty());
}
