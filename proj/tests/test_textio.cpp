#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "rittkit/textio.hpp"
#include "support/gen.hpp"

using namespace rittkit;
using namespace rittkit::testgen;

TEST_CASE("grammar examples") {
    RingPtr r2 = RingConfig::make(2, {"y1", "y2"});
    DiffPoly p = parse_poly("d1^2(y1)*d2(y2) + 3/2*y1", r2);
    CHECK(p.terms().size() == 2);
    DiffVar v = *r2->find_var("y1");
    v.exps = {2, 0};
    CHECK(p.degree_in(v) == 1);

    RingPtr r1 = RingConfig::make(1, {"y"});
    CHECK(parse_poly("y'' - y", r1) == parse_poly("d1^2(y) - y", r1));

    CHECK_THROWS_AS(parse_poly("d3(y1)", r2), DerivationIndexError);
}

TEST_CASE("parse errors carry positions") {
    RingPtr r = RingConfig::make(1, {"y"});
    try {
        parse_poly("y +\n z", r);
        FAIL("expected UnknownVariableError");
    } catch (const UnknownVariableError& e) {
        CHECK(e.line == 2);
        CHECK(e.column == 2);
    }
    CHECK_THROWS_AS(parse_poly("y + ", r), SyntaxError);
    CHECK_THROWS_AS(parse_poly("(y", r), SyntaxError);
    CHECK_THROWS_AS(parse_poly("y @ 2", r), SyntaxError);
    CHECK_THROWS_AS(parse_poly("1/0", r), DivisionByZeroError);
    CHECK_THROWS_AS(parse_poly("1/y", r), SyntaxError);
    // prime shorthand is N = 1 only
    RingPtr r2 = RingConfig::make(2, {"y1", "y2"});
    CHECK_THROWS_AS(parse_poly("y1'", r2), SyntaxError);
    // d-idents are reserved, never variables
    CHECK_THROWS_AS(parse_poly("d1 + y", r), SyntaxError);
}

TEST_CASE("composable commuting derivation operators") {
    RingPtr r2 = RingConfig::make(2, {"y1", "y2"});
    CHECK(parse_poly("d1(d2(y1))", r2) == parse_poly("d2(d1(y1))", r2));
    CHECK(parse_poly("d1^2(y1)", r2) == parse_poly("d1(d1(y1))", r2));
    // operators distribute over expressions
    RingPtr r1 = RingConfig::make(1, {"y"});
    CHECK(parse_poly("d1(y^2)", r1) == parse_poly("2*y*y'", r1));
}

TEST_CASE("canonical printing matches the documented conventions") {
    RingPtr r1 = RingConfig::make(1, {"y"});
    CHECK(to_string(parse_poly("(y')^2-4*y", r1)) == "(y')^2 - 4*y");
    CHECK(to_string(parse_poly("-y + 3/2", r1)) == "-y + 3/2");
    CHECK(to_string(DiffPoly::zero(r1)) == "0");
    RingPtr r2 = RingConfig::make(2, {"y1", "y2"});
    CHECK(to_string(parse_poly("d1^2(y1) + d2(d1(y2))", r2)) == "d1(d2(y2)) + d1^2(y1)");
    RingPtr f5 = RingConfig::make(1, {"y"}, CoeffField::prime_field(5));
    CHECK(to_string(parse_poly("-y + 7", f5)) == "4*y + 2");
}

TEST_CASE("round trip: parse(print(p)) == p") {
    std::vector<RingPtr> rings = {
        RingConfig::make(1, {"y"}),
        RingConfig::make(2, {"y1", "y2"}),
        RingConfig::make(0, {"x", "z"}),
        RingConfig::make(1, {"y"}, CoeffField::prime_field(7)),
        RingConfig::make(1, {"y"}, CoeffField::rational_functions(1)),
        RingConfig::make(2, {"y"}, CoeffField::rationals(), {"u", "v"}),
    };
    Rng rng(31);
    for (const RingPtr& ring : rings) {
        for (int i = 0; i < 60; ++i) {
            DiffPoly p = random_poly(rng, ring, 2, 3, 5);
            CHECK(parse_poly(to_string(p), ring) == p);
        }
    }
}

TEST_CASE("rational function round trip through text") {
    CoeffField f = CoeffField::rational_functions(2);
    Rng rng(37);
    for (int i = 0; i < 80; ++i) {
        RatFun a = sample_ratfun(rng, 2);
        CHECK(parse_ratfun(to_string(a, f.params), f) == a);
    }
    // the single-parameter alias "t"
    CoeffField f1 = CoeffField::rational_functions(1);
    CHECK(parse_ratfun("t^2 + t", f1) == parse_ratfun("t1^2 + t1", f1));
}

TEST_CASE("parse_rat") {
    CHECK(parse_rat("9/4") == Rat(9, 4));
    CHECK(parse_rat("-3") == Rat(-3));
    CHECK_THROWS_AS(parse_rat("x"), SyntaxError);
}
