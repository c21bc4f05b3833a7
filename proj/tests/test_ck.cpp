#include "doctest.h"

#include <algorithm>

#include "ptk/ck.hpp"

using namespace ptk;

namespace {

bool contains(const std::vector<Rat>& v, const Rat& x) {
    return std::find(v.begin(), v.end(), x) != v.end();
}

const DiskZeros& disk_of(const SolveReport& r, long long a) {
    for (const auto& d : r.disks)
        if (d.disk == a) return d;
    throw std::logic_error("disk missing from report");
}

} // namespace

TEST_CASE("two-unit points up to large exponent bound") {
    auto pts = s_unit_points({2}, 20);
    REQUIRE(pts.size() == 3);
    CHECK(pts[0] == Rat(-1));
    CHECK(pts[1] == Rat(1, 2));
    CHECK(pts[2] == Rat(2));
    CHECK(s_unit_points({2}, 1) == pts);
}

TEST_CASE("three-unit equation has no solutions") {
    CHECK(s_unit_points({3}, 10).empty());
    CHECK(s_unit_points({5}, 8).empty());
}

TEST_CASE("points for the set {2,3} close under the symmetries") {
    auto pts = s_unit_points({2, 3}, 8);
    CHECK(pts.size() == 21);
    for (const auto& z : pts) {
        CHECK(contains(pts, Rat(1) / z));
        CHECK(contains(pts, Rat(1) - z));
    }
    CHECK(contains(pts, Rat(3)));
    CHECK(contains(pts, Rat(-8)));
    CHECK(contains(pts, Rat(9, 8)));
}

TEST_CASE("s_unit_points input validation") {
    CHECK_THROWS_AS(s_unit_points({1}, 5), domain_error);
    CHECK_THROWS_AS(s_unit_points({2, 2}, 5), domain_error);
    CHECK_THROWS_AS(s_unit_points({2}, -1), domain_error);
    CHECK_THROWS_AS(s_unit_points({2, 3, 5, 7, 11}, 20), resource_error);
}

TEST_CASE("depth two solve at p = 5 finds exactly the unit points") {
    auto report = solve_unit_equation(5, 20, 2, s_unit_points({2}, 20));
    REQUIRE(report.disks.size() == 3);
    CHECK(disk_of(report, 2).zeros.size() == 1);
    CHECK(disk_of(report, 3).zeros.size() == 1);
    CHECK(disk_of(report, 4).zeros.size() == 1);
    for (const auto& d : report.disks) CHECK(d.undecided.empty());
    for (const auto& c : report.candidates) {
        CHECK(c.found);
        REQUIRE(c.zero.has_value());
        CHECK(c.zero->precision() >= 20);
    }
    CHECK(report.extras.empty());

    // the -1 candidate sits on disk 4, 1/2 on disk 3, 2 on disk 2
    CHECK(report.candidates[0].disk == 4);
    CHECK(report.candidates[1].disk == 3);
    CHECK(report.candidates[2].disk == 2);
}

TEST_CASE("depth two zero count is stable under precision increase") {
    auto cands = s_unit_points({2}, 20);
    auto lo = solve_unit_equation(5, 20, 2, cands);
    auto hi = solve_unit_equation(5, 26, 2, cands);
    REQUIRE(lo.disks.size() == hi.disks.size());
    for (size_t i = 0; i < lo.disks.size(); ++i) {
        CHECK(lo.disks[i].zeros.size() == hi.disks[i].zeros.size());
        CHECK(lo.disks[i].undecided.empty());
        CHECK(hi.disks[i].undecided.empty());
    }
    CHECK(hi.extras.empty());
}

TEST_CASE("depth two solve at p = 7") {
    auto report = solve_unit_equation(7, 18, 2, s_unit_points({2}, 20));
    REQUIRE(report.disks.size() == 5);
    CHECK(disk_of(report, 2).zeros.size() == 1);
    CHECK(disk_of(report, 3).zeros.size() == 0);
    CHECK(disk_of(report, 4).zeros.size() == 1);
    CHECK(disk_of(report, 5).zeros.size() == 0);
    CHECK(disk_of(report, 6).zeros.size() == 1);
    for (const auto& c : report.candidates) CHECK(c.found);
    CHECK(report.extras.empty());
}

TEST_CASE("depth two solve at p = 3 puts all three points on one disk") {
    auto report = solve_unit_equation(3, 18, 2, s_unit_points({2}, 20));
    REQUIRE(report.disks.size() == 1);
    CHECK(disk_of(report, 2).zeros.size() == 3);
    for (const auto& c : report.candidates) {
        CHECK(c.found);
        CHECK(c.disk == 2);
    }
    CHECK(report.extras.empty());
}

TEST_CASE("depth four solve flags the spurious zeros") {
    auto report = solve_unit_equation(5, 20, 4, s_unit_points({2}, 20));
    CHECK(disk_of(report, 2).zeros.size() == 3);
    CHECK(disk_of(report, 3).zeros.size() == 3);
    CHECK(disk_of(report, 4).zeros.size() == 1);
    for (const auto& c : report.candidates) CHECK(c.found);
    CHECK(report.extras.size() == 4);
    for (const auto& d : report.disks) CHECK(d.undecided.empty());
}

TEST_CASE("candidates that are not zeros stay unmatched") {
    std::vector<Rat> cands = {Rat(2), Rat(3), Rat(1, 5)};
    auto report = solve_unit_equation(5, 16, 2, cands);
    CHECK(report.candidates[0].found);
    CHECK_FALSE(report.candidates[1].found);
    CHECK(report.candidates[1].disk == 3);
    CHECK_FALSE(report.candidates[2].found);
    CHECK(report.candidates[2].disk == -1);
    // the zeros at 1/2 and -1 have no candidate to absorb them here
    CHECK(report.extras.size() == 2);
}

TEST_CASE("vanishing functions evaluate pointwise") {
    PolylogTable t(5, 24, 4);
    auto f2 = depth_two_function(t);
    auto f4 = depth_four_function(t);
    PadicNumber two = PadicNumber::from_integer(Int(2), 5, 22);
    PadicNumber mone = PadicNumber::from_integer(Int(-1), 5, 22);
    PadicNumber half = PadicNumber::from_rational(Int(1), Int(2), 5, 22);
    PadicNumber three = PadicNumber::from_integer(Int(3), 5, 22);

    for (const auto& z : {two, mone, half}) {
        CHECK(f2.evaluate(z).zero_to(19));
        CHECK(f4.evaluate(z).zero_to(19));
    }
    CHECK_FALSE(f2.evaluate(three).zero_to(3));
    CHECK_FALSE(f4.evaluate(three).zero_to(8));
}

TEST_CASE("evaluation domain restrictions") {
    PolylogTable t(5, 16, 2);
    auto f = depth_two_function(t);
    PadicNumber one = PadicNumber::one(5, 16);
    PadicNumber small = PadicNumber::from_integer(Int(5), 5, 16);
    CHECK_THROWS_AS(f.evaluate(one), domain_error);
    CHECK_THROWS_AS(f.evaluate(small), domain_error);
    CHECK_THROWS_AS(f.evaluate(PadicNumber::one(7, 16)), domain_error);
    CHECK_THROWS_AS(depth_four_function(t), domain_error);
    CHECK_THROWS_AS(solve_unit_equation(5, 16, 3, {}), domain_error);
    CHECK_THROWS_AS(solve_unit_equation(4, 16, 2, {}), domain_error);
    CHECK_THROWS_AS(solve_unit_equation(5, 16, 2, {}, 40), domain_error);
}
