#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "rittkit/textio.hpp"
#include "support/gen.hpp"

using namespace rittkit;
using namespace rittkit::testgen;

namespace {

RingPtr ring1() { return RingConfig::make(1, {"y"}); }

AutoreducedSet set_of(const RingPtr& r, std::initializer_list<const char*> exprs) {
    std::vector<DiffPoly> ms;
    for (const char* e : exprs) ms.push_back(parse_poly(e, r));
    return AutoreducedSet::make(std::move(ms));
}

}  // namespace

TEST_CASE("full_reduce worked examples") {
    RingPtr r = ring1();
    AutoreducedSet A = set_of(r, {"(y')^2 - 4*y"});

    SUBCASE("second derivative of the leader") {
        auto cert = full_reduce(parse_poly("y''", r), A);
        CHECK(cert.remainder == parse_poly("4*y'", r));
        CHECK(cert.multiplier == parse_poly("2*y'", r));
        CHECK(cert.h_exponent == 1);
        // 2y' * y'' = d((y')^2 - 4y) + 4y'
        CHECK(certificate_valid(parse_poly("y''", r), A, cert));
    }
    SUBCASE("a derivative of a member reduces to zero") {
        auto cert = full_reduce(parse_poly("(y')^2 - 4*y", r).derive(1), A);
        CHECK(cert.remainder.is_zero());
    }
    SUBCASE("already reduced input comes back untouched") {
        AutoreducedSet B = set_of(r, {"y' - y"});
        auto cert = full_reduce(parse_poly("y", r), B);
        CHECK(cert.remainder == parse_poly("y", r));
        CHECK(cert.h_exponent == 0);
        CHECK(cert.quotients.empty());
    }
}

TEST_CASE("full_reduce refuses positive characteristic") {
    RingPtr f5 = RingConfig::make(1, {"y"}, CoeffField::prime_field(5));
    std::vector<DiffPoly> ms = {parse_poly("y' - y", f5)};
    CHECK_THROWS_AS(characteristic_set(ms), UnsupportedCharacteristicError);
}

TEST_CASE("is_autoreduced examples") {
    RingPtr r = ring1();
    CHECK(check_autoreduced({parse_poly("(y')^2 - 4*y", r)}).ok);

    auto chk = check_autoreduced({parse_poly("y'", r), parse_poly("y''", r)});
    CHECK_FALSE(chk.ok);
    CHECK(chk.reason.find("proper derivative") != std::string::npos);

    CHECK_FALSE(check_autoreduced({parse_poly("y' - y", r), parse_poly("y'' - y", r)}).ok);
    CHECK_FALSE(check_autoreduced({parse_poly("3", r)}).ok);
}

TEST_CASE("characteristic_set examples") {
    RingPtr r = ring1();
    SUBCASE("redundant derivative consequence collapses") {
        auto cs = characteristic_set({parse_poly("y' - y", r), parse_poly("y'' - y", r)});
        REQUIRE_FALSE(cs.unit_ideal);
        REQUIRE(cs.set->size() == 1);
        CHECK(cs.set->member(0) == parse_poly("y' - y", r));
    }
    SUBCASE("already autoreduced singleton") {
        auto cs = characteristic_set({parse_poly("(y')^2 - 4*y", r)});
        REQUIRE_FALSE(cs.unit_ideal);
        CHECK(cs.set->member(0) == parse_poly("(y')^2 - 4*y", r));
    }
    SUBCASE("nonzero constant gives the unit ideal") {
        auto cs = characteristic_set({parse_poly("y", r), parse_poly("1", r)});
        CHECK(cs.unit_ideal);
    }
}

TEST_CASE("membership examples") {
    RingPtr r = ring1();
    AutoreducedSet A = set_of(r, {"(y')^2 - 4*y"});
    CHECK(membership(parse_poly("(y')^2 - 4*y", r).derive(1).derive(1), A).certified);

    AutoreducedSet B = set_of(r, {"y' - y"});
    auto m = membership(parse_poly("y", r), B);
    CHECK_FALSE(m.certified);
    CHECK(m.certificate.remainder == parse_poly("y", r));

    // g = d(f) exactly: certified with no multiplier
    auto m2 = membership(parse_poly("2*y'*y'' - 4*y'", r), A);
    CHECK(m2.certified);
    CHECK(m2.certificate.h_exponent == 0);
    CHECK(m2.certificate.multiplier == parse_poly("1", r));
}

TEST_CASE("certificate identities on random instances") {
    Rng rng(41);
    for (int i = 0; i < 120; ++i) {
        int n = 1 + static_cast<int>(rng.uniform(0, 1));
        RingPtr r = n == 1 ? RingConfig::make(1, {"y"}) : RingConfig::make(2, {"y1", "y2"});
        AutoreducedSet A = random_autoreduced_set(rng, r, 2, 2, 3);
        DiffPoly g = random_poly(rng, r, 2, 3, 4);
        auto cert = full_reduce(g, A);
        CHECK(certificate_valid(g, A, cert));
        CHECK(is_reduced_against(cert.remainder, A));
        // idempotence
        auto again = full_reduce(cert.remainder, A);
        CHECK(again.remainder == cert.remainder);
        CHECK(again.h_exponent == 0);
    }
}

TEST_CASE("membership is closed under derivation") {
    Rng rng(43);
    RingPtr r = ring1();
    AutoreducedSet A = set_of(r, {"(y')^2 - 4*y"});
    for (int i = 0; i < 25; ++i) {
        DiffPoly h = random_poly(rng, r, 2, 2, 3);
        DiffPoly g = h * parse_poly("(y')^2 - 4*y", r).derive_theta({
            static_cast<int>(rng.uniform(0, 2))});
        if (!membership(g, A).certified) continue;  // multiplier may vanish on the set
        CHECK(membership(g.derive(1), A).certified);
    }
}

TEST_CASE("characteristic sets reduce every input to zero") {
    Rng rng(47);
    RingPtr r = ring1();
    for (int round = 0; round < 40; ++round) {
        std::vector<DiffPoly> F;
        int n = 2 + static_cast<int>(rng.uniform(0, 1));
        for (int i = 0; i < n; ++i) F.push_back(random_nonzero_poly(rng, r, 2, 2, 3));
        CharsetResult cs = characteristic_set(F);
        if (cs.unit_ideal) continue;
        CHECK(check_autoreduced(cs.set->members()).ok);
        for (const DiffPoly& f : F) CHECK(membership(f, *cs.set).certified);
    }
}

TEST_CASE("serial and parallel batch reduction agree") {
    Rng rng(53);
    RingPtr r = RingConfig::make(2, {"y1", "y2"});
    AutoreducedSet A = random_autoreduced_set(rng, r, 2, 2, 3);
    std::vector<DiffPoly> gs;
    for (int i = 0; i < 40; ++i) gs.push_back(random_poly(rng, r, 2, 3, 4));
    auto serial = reduce_batch(gs, A, Parallel::Serial);
    auto parallel = reduce_batch(gs, A, Parallel::Auto);
    REQUIRE(serial.size() == parallel.size());
    for (size_t i = 0; i < gs.size(); ++i) {
        CHECK(serial[i].remainder == parallel[i].remainder);
        CHECK(serial[i].multiplier == parallel[i].multiplier);
        CHECK(serial[i].quotients == parallel[i].quotients);
    }
}

TEST_CASE("coherence examples") {
    SUBCASE("ordinary rings are vacuously coherent") {
        RingPtr r = ring1();
        auto rep = coherence_check(set_of(r, {"(y')^2 - 4*y"}));
        CHECK(rep.coherent);
        CHECK(rep.pairs.empty());
    }
    SUBCASE("commuting derivations of a shared base variable") {
        RingPtr r = RingConfig::make(2, {"y"});
        auto rep = coherence_check(set_of(r, {"d1(y)", "d2(y)"}));
        CHECK(rep.coherent);
        REQUIRE(rep.pairs.size() == 1);
        CHECK(rep.pairs[0].delta.is_zero());
        DiffVar expect = *r->find_var("y");
        expect.exps = {1, 1};
        CHECK(rep.pairs[0].common_derivative == expect);
    }
    SUBCASE("delta polynomial needs a two-step reduction") {
        RingPtr r = RingConfig::make(2, {"y"});
        auto rep = coherence_check(set_of(r, {"d1(y) - y", "d2(y) - y"}));
        CHECK(rep.coherent);
        REQUIRE(rep.pairs.size() == 1);
        CHECK(rep.pairs[0].delta == parse_poly("d1(y) - d2(y)", r));
        CHECK(rep.pairs[0].remainder.is_zero());
    }
    SUBCASE("an incoherent pair is reported") {
        RingPtr r = RingConfig::make(2, {"y"});
        auto rep = coherence_check(set_of(r, {"d1(y) - y", "d2(y) - y^2"}));
        CHECK_FALSE(rep.coherent);
        REQUIRE(rep.pairs.size() == 1);
        CHECK_FALSE(rep.pairs[0].remainder.is_zero());
    }
}

TEST_CASE("N = 0 degeneration agrees with classical pseudo-division") {
    Rng rng(59);
    RingPtr r = RingConfig::make(0, {"x"});
    for (int i = 0; i < 120; ++i) {
        DensePoly a = random_dense(rng, 6);
        DensePoly b = random_dense(rng, 6);
        if (b.is_zero() || b.degree() == 0) continue;
        PremOracle oracle = naive_pseudo_divide(a, b);

        AutoreducedSet A = AutoreducedSet::make({dense_to_poly(b, r)});
        auto cert = full_reduce(dense_to_poly(a, r), A);

        CHECK(cert.remainder == dense_to_poly(oracle.remainder, r));
        CHECK(cert.h_exponent == oracle.steps);
        DiffPoly lead = DiffPoly::from_rat(r, b.c.back());
        CHECK(cert.multiplier == lead.pow(static_cast<unsigned>(oracle.steps)));
        if (oracle.steps > 0) {
            REQUIRE(cert.quotients.size() == 1);
            CHECK(cert.quotients.begin()->second == dense_to_poly(oracle.quotient, r));
        }
    }
}

TEST_CASE("reduction over coefficient rings keeps exact certificates") {
    RingPtr r = RingConfig::make(1, {"y"}, CoeffField::rationals(), {"u"});
    AutoreducedSet A = AutoreducedSet::make({parse_poly("u*y' - 1", r)});
    auto cert = full_reduce(parse_poly("y'", r), A);
    CHECK(cert.remainder == parse_poly("1", r));
    CHECK(cert.multiplier == parse_poly("u", r));
    CHECK(cert.h_exponent == 1);
    // u * y' = 1 * (u y' - 1) + 1
    CHECK(certificate_valid(parse_poly("y'", r), A, cert));

    // a nonzero element of R flags the unit ideal
    auto cs = characteristic_set({parse_poly("y - u", r), parse_poly("y - u - 1", r)});
    CHECK(cs.unit_ideal);
}
