#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "rittkit/textio.hpp"
#include "support/gen.hpp"

using namespace rittkit;
using namespace rittkit::testgen;

namespace {

RingPtr ring1() { return RingConfig::make(1, {"y"}); }
RingPtr ring2() { return RingConfig::make(2, {"y1", "y2"}); }

DiffVar dv(const RingPtr& r, const std::string& name, std::vector<int> exps) {
    DiffVar v = *r->find_var(name);
    v.exps = std::move(exps);
    return v;
}

}  // namespace

TEST_CASE("rank tuples and lexicographic order") {
    RingPtr r = ring2();
    // d1 d2^2 y1 -> (3, 1, 1, 2)
    Rank rk = rank_of(dv(r, "y1", {1, 2}));
    CHECK(rk.total_order == 3);
    CHECK(rk.var_index == 0);
    CHECK(rk.exps == std::vector<int>{1, 2});

    // rank(d1 y1) > rank(y2): first entry decides
    CHECK(rank_of(dv(r, "y1", {1, 0})) > rank_of(dv(r, "y2", {0, 0})));
    // tie on total order, broken by the variable index
    CHECK(rank_of(dv(r, "y2", {0, 1})) > rank_of(dv(r, "y1", {1, 0})));
}

TEST_CASE("rank order is total and increases under derivation") {
    Rng rng(7);
    RingPtr r = ring2();
    for (int i = 0; i < 300; ++i) {
        DiffVar a = random_var(rng, r, 3), b = random_var(rng, r, 3), c = random_var(rng, r, 3);
        // total + antisymmetric
        CHECK((var_less(a, b) || var_less(b, a) || a == b));
        CHECK_FALSE((var_less(a, b) && var_less(b, a)));
        // transitive
        if (var_less(a, b) && var_less(b, c)) CHECK(var_less(a, c));
        // derivation raises rank
        for (int d = 0; d < 2; ++d) CHECK(var_less(a, a.derived(d)));
    }
}

TEST_CASE("arithmetic examples") {
    RingPtr r = ring1();
    CHECK((parse_poly("y + 1", r) + parse_poly("-y", r)) == parse_poly("1", r));
    CHECK((parse_poly("y'", r) * parse_poly("y'", r)) == parse_poly("(y')^2", r));

    RingPtr f3 = RingConfig::make(1, {"y"}, CoeffField::prime_field(3));
    DiffPoly cube = parse_poly("y + 1", f3).pow(3);
    CHECK(cube == parse_poly("y^3 + 1", f3));
}

TEST_CASE("mismatched rings are rejected") {
    CHECK_THROWS_AS(parse_poly("y", ring1()) + parse_poly("y1", ring2()), RingMismatchError);
}

TEST_CASE("derive: generator action, Leibniz, p-th powers") {
    RingPtr r = ring1();
    CHECK(parse_poly("y", r).derive(1) == parse_poly("y'", r));
    CHECK(parse_poly("y^2", r).derive(1) == parse_poly("2*y*y'", r));

    RingPtr f5 = RingConfig::make(1, {"y"}, CoeffField::prime_field(5));
    CHECK(parse_poly("y", f5).pow(5).derive(1).is_zero());

    CHECK_THROWS_AS(parse_poly("y", r).derive(2), DerivationIndexError);
    RingPtr r0 = RingConfig::make(0, {"x"});
    CHECK_THROWS_AS(parse_poly("x", r0).derive(1), DerivationIndexError);
}

TEST_CASE("derivations commute and satisfy Leibniz") {
    Rng rng(11);
    RingPtr r = ring2();
    for (int i = 0; i < 60; ++i) {
        DiffPoly p = random_poly(rng, r, 2, 2, 4);
        DiffPoly q = random_poly(rng, r, 2, 2, 4);
        CHECK(p.derive(1).derive(2) == p.derive(2).derive(1));
        CHECK((p * q).derive(1) == p.derive(1) * q + p * q.derive(1));
    }
}

TEST_CASE("leader and the degenerate constant case") {
    RingPtr r = ring1();
    CHECK(parse_poly("(y')^2 - 4*y", r).leader() == dv(r, "y", {1}));

    RingPtr r2 = ring2();
    CHECK(parse_poly("d1(y1)*d2(y2) + y1", r2).leader() == dv(r2, "y2", {0, 1}));

    CHECK_THROWS_AS(parse_poly("7", r).leader(), ConstantPolynomialError);
}

TEST_CASE("initial and separant") {
    RingPtr r = ring1();
    auto d = parse_poly("(y')^2 - 4*y", r).initial_separant();
    CHECK(d.degree == 2);
    CHECK(d.initial == parse_poly("1", r));
    CHECK(d.separant == parse_poly("2*y'", r));

    d = parse_poly("y*(y'')^3 + y'", r).initial_separant();
    CHECK(d.degree == 3);
    CHECK(d.initial == parse_poly("y", r));
    CHECK(d.separant == parse_poly("3*y*(y'')^2", r));

    d = parse_poly("y' - y", r).initial_separant();
    CHECK(d.degree == 1);
    CHECK(d.initial == parse_poly("1", r));
    CHECK(d.separant == parse_poly("1", r));
}

TEST_CASE("initial/separant decomposition reconstructs the polynomial") {
    Rng rng(13);
    RingPtr r = ring2();
    for (int i = 0; i < 80; ++i) {
        DiffPoly f = random_nonzero_poly(rng, r, 2, 3, 5);
        if (f.is_coefficient_element()) continue;
        DiffVar u = f.leader();
        int deg = f.degree_in(u);
        DiffPoly back(r);
        for (int j = 0; j <= deg; ++j)
            back += f.coeff_of(u, j).times_monomial(Monomial::power(u, j),
                                                    Coeff::one(r->field()));
        CHECK(back == f);
    }
}

TEST_CASE("h_product") {
    RingPtr r = ring1();
    std::vector<DiffPoly> a = {parse_poly("(y')^2 - 4*y", r)};
    CHECK(h_product(a) == parse_poly("2*y'", r));

    a = {parse_poly("y' - y", r)};
    CHECK(h_product(a) == parse_poly("1", r));

    a = {parse_poly("(y')^2 - 4*y", r), parse_poly("y'' - y", r)};
    CHECK(h_product(a) == parse_poly("2*y'", r));

    a = {parse_poly("3", r)};
    CHECK_THROWS_AS(h_product(a), ConstantPolynomialError);
}

TEST_CASE("canonical form: construction order does not matter") {
    Rng rng(17);
    RingPtr r = ring2();
    for (int i = 0; i < 50; ++i) {
        DiffPoly p = random_poly(rng, r, 2, 2, 5);
        DiffPoly q = random_poly(rng, r, 2, 2, 5);
        DiffPoly sum1 = p + q;
        DiffPoly sum2 = q + p;
        CHECK(sum1 == sum2);
        CHECK((sum1 - sum2).is_zero());
        // identical term maps, not merely mathematical equality
        CHECK(sum1.terms().size() == sum2.terms().size());
    }
}

TEST_CASE("freshman's dream: derive(f^p) = 0 over F_p") {
    for (long p : {2L, 3L, 5L}) {
        RingPtr r = RingConfig::make(1, {"y"}, CoeffField::prime_field(p));
        Rng rng(100 + p);
        for (int i = 0; i < 40; ++i) {
            DiffPoly f = random_poly(rng, r, 1, 2, 3);
            CHECK(f.pow(static_cast<unsigned>(p)).derive(1).is_zero());
        }
    }
}

TEST_CASE("coefficient ring elements count as constants") {
    RingPtr r = RingConfig::make(1, {"y"}, CoeffField::rationals(), {"u"});
    DiffPoly u = parse_poly("u' + u^2", r);
    CHECK(u.is_coefficient_element());
    CHECK_FALSE(u.is_field_constant());
    CHECK_THROWS_AS(u.leader(), ConstantPolynomialError);

    DiffPoly f = parse_poly("u*y' - 1", r);
    CHECK(f.leader() == dv(r, "y", {1}));
    auto d = f.initial_separant();
    CHECK(d.initial == parse_poly("u", r));
    CHECK(d.separant == parse_poly("u", r));
}

TEST_CASE("repartition moves variables between blocks by name") {
    RingPtr ext = RingConfig::make(1, {"y"}, CoeffField::rationals(), {"u"});
    RingPtr base = ext->coefficient_ring();
    DiffPoly a = parse_poly("u^2 + u'", ext);
    DiffPoly b = repartition(a, base);
    CHECK(b == parse_poly("u^2 + u'", base));
    CHECK(repartition(b, ext) == a);
    CHECK_THROWS_AS(repartition(parse_poly("y", ext), base), RingMismatchError);
}

TEST_CASE("mpoly gcd and exact division") {
    // (t1 + 1)^2 (t2 - 3) vs (t1 + 1) t2
    MPoly t1 = MPoly::variable(2, 0), t2 = MPoly::variable(2, 1);
    MPoly one = MPoly::constant(2, Rat(1));
    MPoly a = (t1 + one) * (t1 + one) * (t2 - MPoly::constant(2, Rat(3)));
    MPoly b = (t1 + one) * t2;
    MPoly g = MPoly::gcd(a, b);
    CHECK(g == t1 + one);  // gcd is monic
    MPoly q(2);
    CHECK(MPoly::try_divide(a, g, q));
    CHECK(q * g == a);
    CHECK_FALSE(MPoly::try_divide(b, t1 + MPoly::constant(2, Rat(2)), q));
}

TEST_CASE("rational function field: arithmetic, cancellation, derivative") {
    CoeffField f = CoeffField::rational_functions(2);
    RatFun t1 = parse_ratfun("t1", f), t2 = parse_ratfun("t2", f);
    CHECK((t1 / t2) * (t2 / t1) == parse_ratfun("1", f));
    CHECK(parse_ratfun("t1^2", f).derivative(0) == parse_ratfun("2*t1", f));
    CHECK((parse_ratfun("1", f) / t1).derivative(0) == parse_ratfun("-1", f) / (t1 * t1));
    CHECK_THROWS_AS(t1 / RatFun(2), DivisionByZeroError);

    // canonical form: denominator has integer-primitive positive leading form
    RatFun half = parse_ratfun("1", f) / (t1 + t1);
    CHECK(to_string(half, f.params) == "1/(2*t1)");
}

TEST_CASE("derivation is quotient-rule compatible on random rational functions") {
    Rng rng(23);
    CoeffField f = CoeffField::rational_functions(1);
    for (int i = 0; i < 40; ++i) {
        RatFun a = sample_ratfun(rng, 1), b = sample_ratfun(rng, 1);
        // Leibniz on the field
        CHECK((a * b).derivative(0) == a.derivative(0) * b + a * b.derivative(0));
        CHECK((a + b).derivative(0) == a.derivative(0) + b.derivative(0));
    }
    // commuting partials with two parameters
    CoeffField f2 = CoeffField::rational_functions(2);
    for (int i = 0; i < 25; ++i) {
        Rng rng2(500 + i);
        RatFun a = sample_ratfun(rng2, 2);
        CHECK(a.derivative(0).derivative(1) == a.derivative(1).derivative(0));
    }
    (void)f;
}

TEST_CASE("ring config validation") {
    CHECK_THROWS_AS(RingConfig::make(1, {"y", "y"}), Error);              // duplicate
    CHECK_THROWS_AS(RingConfig::make(1, {""}), Error);                    // empty
    CHECK_THROWS_AS(RingConfig::make(1, {"d1"}), Error);                  // reserved
    CHECK_THROWS_AS(RingConfig::make(-1, {"y"}), Error);                  // bad N
    CHECK_THROWS_AS(CoeffField::prime_field(6), Error);                   // composite
    CHECK_THROWS_AS(RingConfig::make(1, {"t1"}, CoeffField::rational_functions(1)), Error);
    CHECK(RingConfig::make(0, {"x"})->n_derivations() == 0);
}
