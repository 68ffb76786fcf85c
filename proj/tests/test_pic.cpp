#include "doctest.h"

#include <random>

#include "snc/errors.hpp"
#include "snc/pic.hpp"

using namespace snc;

namespace {

LatticeAction rot90() {
    LatticeAction a;
    a.m = {{{0, -1}, {1, 0}}};
    return a;
}

LineBundleClass random_elliptic(std::mt19937_64& rng) {
    std::uniform_int_distribution<long long> deg(-9, 9), num(-20, 20);
    std::uniform_int_distribution<long long> den(1, 12);
    return LineBundleClass::elliptic(deg(rng), Rational(num(rng), den(rng)),
                                     Rational(num(rng), den(rng)));
}

} // namespace

TEST_CASE("rational helpers") {
    CHECK(mod1(Rational(7, 3)) == Rational(1, 3));
    CHECK(mod1(Rational(-1, 4)) == Rational(3, 4));
    CHECK(mod1(Rational(-2)) == Rational(0));
    CHECK(parse_rational("3/4") == Rational(3, 4));
    CHECK(parse_rational("-5") == Rational(-5));
    CHECK(format_rational(Rational(-5, 10)) == "-1/2");
    CHECK_THROWS_AS(parse_rational("1/0"), ParseError);
    CHECK_THROWS_AS(parse_rational("abc"), ParseError);
    CHECK_THROWS_AS(parse_rational(""), ParseError);
}

TEST_CASE("gaussian rational arithmetic") {
    GaussianRational i = GaussianRational::i_power(1);
    CHECK(i * i == GaussianRational(Rational(-1)));
    CHECK(GaussianRational::i_power(4) == GaussianRational(Rational(1)));
    CHECK(GaussianRational::i_power(-1) == GaussianRational::i_power(3));
    GaussianRational z{Rational(1, 2), Rational(3)};
    CHECK(z / z == GaussianRational(Rational(1)));
    CHECK((z - z).is_zero());
}

TEST_CASE("tensor is a group law with the trivial class as identity") {
    std::mt19937_64 rng(7);
    LineBundleClass triv = LineBundleClass::elliptic(0);
    for (int n = 0; n < 200; ++n) {
        auto x = random_elliptic(rng), y = random_elliptic(rng), z = random_elliptic(rng);
        CHECK(tensor(x, y) == tensor(y, x));
        CHECK(tensor(tensor(x, y), z) == tensor(x, tensor(y, z)));
        CHECK(tensor(x, triv) == x);
        CHECK(is_trivial(tensor(x, inverse(x))));
    }
}

TEST_CASE("tensor on rational curves is degree addition") {
    auto a = LineBundleClass::rational_curve(3);
    auto b = LineBundleClass::rational_curve(-1);
    CHECK(tensor(a, b) == LineBundleClass::rational_curve(2));
    CHECK_THROWS_AS(tensor(a, LineBundleClass::elliptic(1)), MixedGeometry);
}

TEST_CASE("point classes") {
    auto p = CurvePoint::at(Rational(1, 3), Rational(5, 4));
    auto c = point_class(1, p);
    CHECK(c.degree == 1);
    CHECK(c.a == Rational(1, 3));
    CHECK(c.b == Rational(1, 4)); // reduced mod 1
    CHECK(point_class(0, CurvePoint::labeled("q")).degree == 1);
    // a genus-1 point without coordinates has no well-defined divisor class
    CHECK_THROWS_AS(point_class(1, CurvePoint::labeled("q")), CenterNotOnCurve);
}

TEST_CASE("twists act as lattice automorphisms") {
    auto c = LineBundleClass::elliptic(2, Rational(1, 3), Rational(1, 5));
    auto r = rot90();

    SUBCASE("identity") {
        CHECK(apply_twist(c, LatticeAction{}) == c);
    }
    SUBCASE("z -> iz has order four") {
        auto once = apply_twist(c, r);
        CHECK(once.degree == c.degree);
        auto four = apply_twist(apply_twist(apply_twist(once, r), r), r);
        CHECK(four == c);
    }
    SUBCASE("negation is its own inverse") {
        LatticeAction neg;
        neg.m = {{{-1, 0}, {0, -1}}};
        CHECK(apply_twist(apply_twist(c, neg), neg) == c);
        CHECK(apply_twist(c, neg).a == mod1(-c.a));
    }
    SUBCASE("non-unimodular actions are rejected") {
        LatticeAction bad;
        bad.m = {{{2, 0}, {0, 1}}};
        CHECK_THROWS_AS(apply_twist(c, bad), NotAnAutomorphism);
    }
    SUBCASE("rational curves only accept the identity") {
        CHECK_THROWS_AS(apply_twist(LineBundleClass::rational_curve(1), r),
                        NotAnAutomorphism);
        CHECK(apply_twist(LineBundleClass::rational_curve(1), LatticeAction{}).degree == 1);
    }
}

TEST_CASE("twisting points matches twisting their classes") {
    std::mt19937_64 rng(11);
    std::uniform_int_distribution<long long> num(-20, 20);
    std::uniform_int_distribution<long long> den(1, 12);
    auto r = rot90();
    for (int n = 0; n < 100; ++n) {
        auto p = CurvePoint::at(Rational(num(rng), den(rng)), Rational(num(rng), den(rng)));
        CHECK(apply_twist(point_class(1, p), r) == point_class(1, apply_twist(p, r)));
    }
}
