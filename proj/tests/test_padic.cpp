#include "doctest.h"

#include "ptk/padic.hpp"
#include "test_util.hpp"

using namespace ptk;
using ptk_test::random_padic;
using ptk_test::seeded_rng;

TEST_CASE("integer helpers") {
    CHECK(is_odd_prime(3));
    CHECK(is_odd_prime(5));
    CHECK(is_odd_prime(101));
    CHECK(!is_odd_prime(2));
    CHECK(!is_odd_prime(9));
    CHECK(!is_odd_prime(1));
    CHECK(p_power(5, 3) == 125);
    CHECK(valuation_int(Int(250), 5) == 3);
    CHECK(valuation_long(-18, 3) == 2);
    CHECK_THROWS_AS(valuation_int(Int(0), 5), domain_error);
    CHECK(inv_mod(Int(3), Int(125)) == 42);
    CHECK(inv_mod(Int(-1), Int(25)) == 24);
    CHECK_THROWS_AS(inv_mod(Int(5), Int(125)), domain_error);
}

TEST_CASE("construction and normalization") {
    auto x = PadicNumber::from_rational(Int(1), Int(3), 5, 3);
    CHECK(x.residue(3) == 42);
    CHECK(x.valuation() == 0);
    CHECK(x.precision() == 3);

    auto y = PadicNumber::from_integer(Int(250), 5, 6);
    CHECK(y.valuation() == 3);
    CHECK(y.unit() == 2);
    CHECK(y.residue(6) == 250);

    auto z = PadicNumber::from_unit_part(5, 1, Int(75), 6);
    CHECK(z.valuation() == 3); // stray powers of p fold into v
    CHECK(z.unit() == 3);

    auto neg = PadicNumber::from_integer(Int(-1), 5, 3);
    CHECK(neg.residue(3) == 124);

    CHECK_THROWS_AS(PadicNumber::from_integer(Int(1), 4, 3), domain_error);
    CHECK_THROWS_AS(PadicNumber::from_integer(Int(1), 2, 3), domain_error);
    CHECK_THROWS_AS(PadicNumber::from_integer(Int(1), 5, 0), domain_error);
    CHECK_THROWS_AS(PadicNumber::from_rational(Int(1), Int(0), 5, 3), domain_error);
}

TEST_CASE("zero semantics") {
    PadicNumber z(5, 10);
    CHECK(z.is_zero());
    CHECK(!z.is_exact_zero());
    CHECK(z.valuation() == 10);
    CHECK(z.zero_to(10));
    CHECK(!z.zero_to(11));

    auto e = PadicNumber::from_integer(Int(0), 5, 10);
    CHECK(e.is_exact_zero());

    auto one = PadicNumber::one(5, 10);
    CHECK_THROWS_AS(one / e, domain_error);
    CHECK_THROWS_AS(one / z, precision_error);

    // deep cancellation leaves a zero of reduced knowledge, not a fake value
    auto a = PadicNumber::from_integer(Int(7), 5, 4);
    auto diff = a - a;
    CHECK(diff.is_zero());
    CHECK(diff.zero_to(4));
}

TEST_CASE("arithmetic and precision propagation") {
    auto x = PadicNumber::from_integer(Int(5), 5, 3);  // v=1, N=3
    auto y = PadicNumber::one(5, 2);                   // v=0, N=2
    auto prod = x * y;
    CHECK(prod.precision() == 3); // min(3+0, 2+1)
    CHECK(prod.valuation() == 1);

    auto inv = PadicNumber::from_integer(Int(5), 5, 6).inverse();
    CHECK(inv.valuation() == -1);
    CHECK(inv.precision() == 4); // N - 2v

    auto third = PadicNumber::from_rational(Int(1), Int(3), 5, 4);
    auto back = third * PadicNumber::from_integer(Int(3), 5, 4);
    CHECK(back == PadicNumber::one(5, 4));

    auto two = PadicNumber::from_integer(Int(2), 5, 10);
    CHECK(two.pow(10).residue(10) == 1024);
    CHECK(two.pow(-1) == two.inverse());
    CHECK(two.pow(0) == PadicNumber::one(5, 10));

    // cancellation in addition renormalizes the valuation
    auto u = PadicNumber::from_integer(Int(26), 5, 6);
    auto w = PadicNumber::from_integer(Int(1), 5, 6);
    auto d = u - w;
    CHECK(d.valuation() == 2);
    CHECK(d.unit() == 1);
}

TEST_CASE("equality is agreement at the common precision") {
    auto a = PadicNumber::from_integer(Int(1), 5, 2);
    auto b = PadicNumber::from_integer(Int(26), 5, 3);
    CHECK(a == b); // differ only beyond O(5^2)
    CHECK(b != PadicNumber::from_integer(Int(2), 5, 3));
    CHECK(a.agrees_with(b, 2));
    CHECK(!b.agrees_with(PadicNumber::from_integer(Int(1), 5, 3), 3));
    CHECK_THROWS_AS((void)(a == PadicNumber::one(7, 2)), domain_error);
}

TEST_CASE("residue disks") {
    CHECK(PadicNumber::from_integer(Int(2), 5, 8).residue_disk() == 2);
    CHECK(PadicNumber::from_rational(Int(1), Int(2), 5, 8).residue_disk() == 3);
    CHECK(PadicNumber::from_integer(Int(-1), 5, 8).residue_disk() == 4);
    CHECK(PadicNumber::from_integer(Int(2), 3, 8).residue_disk() == 2);
    CHECK(PadicNumber::from_rational(Int(1), Int(2), 3, 8).residue_disk() == 2);
    CHECK(PadicNumber::from_integer(Int(-1), 3, 8).residue_disk() == 2);
    CHECK_THROWS_AS(PadicNumber::from_integer(Int(5), 5, 8).residue_disk(), domain_error);
}

TEST_CASE("teichmuller lifts") {
    auto t = teichmuller(PadicNumber::from_integer(Int(2), 5, 2));
    CHECK(t.residue(2) == 7);

    for (long long p : {3LL, 5LL, 7LL, 11LL}) {
        for (long long a = 1; a < p; ++a) {
            auto w = teichmuller(PadicNumber::from_integer(Int(a), p, 12));
            CHECK(w.residue(1) == a);
            CHECK(w.pow(p - 1) == PadicNumber::one(p, 12));
        }
    }
    CHECK_THROWS_AS(teichmuller(PadicNumber::from_integer(Int(5), 5, 4)), domain_error);
    CHECK_THROWS_AS(teichmuller(PadicNumber(5, 4)), domain_error);
}

TEST_CASE("log on the Iwasawa branch") {
    auto l6 = log_iwasawa(PadicNumber::from_integer(Int(6), 5, 3));
    CHECK(l6.residue(3) == 55); // 5 - 25/2 mod 125

    // log p = 0 and log of roots of unity = 0
    CHECK(log_iwasawa(PadicNumber::from_integer(Int(5), 5, 8)).zero_to(7));
    CHECK(log_iwasawa(PadicNumber::from_integer(Int(-1), 5, 8)).zero_to(8));
    CHECK(log_iwasawa(teichmuller(PadicNumber::from_integer(Int(3), 7, 9))).zero_to(9));
    CHECK_THROWS_AS(log_iwasawa(PadicNumber(5, 4)), domain_error);

    // multiplicativity
    auto rng = seeded_rng(1);
    for (long long p : {3LL, 5LL, 7LL}) {
        for (int i = 0; i < 8; ++i) {
            auto a = random_padic(rng, p, 12, -1, 2);
            auto b = random_padic(rng, p, 12, -1, 2);
            auto lhs = log_iwasawa(a * b);
            auto rhs = log_iwasawa(a) + log_iwasawa(b);
            CHECK(lhs.agrees_with(rhs, std::min(lhs.precision(), rhs.precision())));
        }
    }
}

TEST_CASE("exp on the maximal ideal") {
    auto e5 = exp_p(PadicNumber::from_integer(Int(5), 5, 3));
    CHECK(e5.residue(3) == 81); // 1 + 5 + 25/2 mod 125

    CHECK(exp_p(PadicNumber(5, 6)) == PadicNumber::one(5, 6));
    CHECK_THROWS_AS(exp_p(PadicNumber::one(5, 6)), domain_error);

    // exp(log(1+p)) recovers 1+p
    auto six = PadicNumber::from_integer(Int(6), 5, 6);
    CHECK(exp_p(log_iwasawa(six)) == six.truncate(6));

    auto rng = seeded_rng(2);
    for (long long p : {3LL, 5LL, 7LL}) {
        for (int i = 0; i < 6; ++i) {
            auto a = random_padic(rng, p, 12, 1, 3);
            auto b = random_padic(rng, p, 12, 1, 3);
            auto lhs = exp_p(a + b);
            auto rhs = exp_p(a) * exp_p(b);
            CHECK(lhs == rhs);
            // log inverts exp on the maximal ideal
            auto back = log_iwasawa(exp_p(a));
            CHECK(back == a.truncate(back.precision()));
        }
    }
}

TEST_CASE("canonical text form") {
    auto x = PadicNumber::from_integer(Int(42), 5, 3);
    CHECK(x.str() == "2 + 3*5 + 1*5^2 + O(5^3)");
    CHECK(PadicNumber(5, 4).str() == "0 + O(5^4)");
    CHECK(PadicNumber::parse("0 + O(5^4)", 5).is_zero());
    CHECK(PadicNumber::from_integer(Int(25), 5, 4).str() == "1*5^2 + O(5^4)");

    auto inv25 = PadicNumber::from_rational(Int(1), Int(25), 5, 3);
    CHECK(inv25.valuation() == -2);
    CHECK(inv25.str() == "5^-2*(1 + O(5^5))");

    SUBCASE("parse inverts str") {
        auto rng = seeded_rng(3);
        for (long long p : {3LL, 5LL, 7LL, 11LL}) {
            for (int i = 0; i < 12; ++i) {
                auto a = random_padic(rng, p, 9, -3, 4);
                auto b = PadicNumber::parse(a.str(), p);
                CHECK(b == a);
                CHECK(b.valuation() == a.valuation());
                CHECK(b.precision() == a.precision());
            }
            auto z = PadicNumber::parse("O(" + std::to_string(p) + "^6)", p);
            CHECK(z.is_zero());
            CHECK(z.precision() == 6);
        }
    }

    SUBCASE("parse rejects malformed input") {
        CHECK_THROWS_AS(PadicNumber::parse("2 + 3*7 + O(7^3)", 5), domain_error);
        CHECK_THROWS_AS(PadicNumber::parse("7 + O(5^3)", 5), domain_error);
        CHECK_THROWS_AS(PadicNumber::parse("2 + O(5^3) junk", 5), domain_error);
        CHECK_THROWS_AS(PadicNumber::parse("2 + 3*5", 5), domain_error);
        CHECK_THROWS_AS(PadicNumber::parse("", 5), domain_error);
    }
}

TEST_CASE("unit angle decomposition") {
    auto rng = seeded_rng(4);
    for (long long p : {3LL, 5LL, 7LL}) {
        for (int i = 0; i < 6; ++i) {
            auto x = random_padic(rng, p, 10, 0, 0);
            auto w = teichmuller(x);
            auto a = unit_angle(x);
            CHECK(a.residue(1) == 1);
            CHECK(w * a == x);
        }
    }
}
