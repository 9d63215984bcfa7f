#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "rittkit/funcfield.hpp"
#include "rittkit/textio.hpp"
#include "support/gen.hpp"

using namespace rittkit;
using namespace rittkit::testgen;

namespace {

const CoeffField kQt = CoeffField::rational_functions(1);

RatFun rf(const char* s) {
    return parse_ratfun(s, kQt);
}

}  // namespace

TEST_CASE("wronskian examples") {
    CHECK(wronskian({rf("1"), rf("t"), rf("t^2")}) == rf("2"));
    CHECK(wronskian({rf("t"), rf("2*t")}).is_zero());
    CHECK(wronskian({rf("1"), rf("t")}) == rf("1"));
    CHECK_THROWS_AS(wronskian({}), EmptyInputError);

    CoeffField q2 = CoeffField::rational_functions(2);
    CHECK_THROWS_AS(wronskian({parse_ratfun("t1", q2)}), UnsupportedError);
}

TEST_CASE("wronskian handles denominators exactly") {
    // Wr(1/t, t) = d/dt(t)*1/t - d/dt(1/t)*t = 1/t + 1/t = 2/t
    CHECK(wronskian({rf("1/t"), rf("t")}) == rf("2/t"));
}

TEST_CASE("wronskian is multilinear and alternating") {
    Rng rng(61);
    for (int i = 0; i < 50; ++i) {
        int n = 2 + static_cast<int>(rng.uniform(0, 1));
        std::vector<RatFun> tuple;
        for (int j = 0; j < n; ++j) tuple.push_back(sample_ratfun(rng, 1));
        int slot = static_cast<int>(rng.uniform(0, n - 1));
        RatFun g = sample_ratfun(rng, 1);
        Rat c(rng.uniform(-3, 3), 1 + rng.uniform(0, 2));
        c.canonicalize();

        // multilinearity in the chosen slot
        std::vector<RatFun> with_g = tuple, with_sum = tuple;
        with_g[slot] = g;
        with_sum[slot] = tuple[slot] * RatFun::constant(1, c) + g;
        CHECK(wronskian(with_sum) ==
              wronskian(tuple) * RatFun::constant(1, c) + wronskian(with_g));

        // alternation: repeated argument kills it, swaps flip the sign
        if (n >= 2) {
            std::vector<RatFun> repeated = tuple;
            repeated[(slot + 1) % n] = tuple[slot];
            CHECK(wronskian(repeated).is_zero());
            std::vector<RatFun> swapped = tuple;
            std::swap(swapped[0], swapped[1]);
            CHECK(wronskian(swapped) == -wronskian(tuple));
        }
    }
}

TEST_CASE("rational linear dependence forces a zero wronskian") {
    Rng rng(67);
    for (int i = 0; i < 30; ++i) {
        RatFun f = sample_ratfun(rng, 1), g = sample_ratfun(rng, 1);
        Rat c1(rng.uniform(-4, 4)), c2(rng.uniform(-4, 4));
        RatFun dependent = f * RatFun::constant(1, c1) + g * RatFun::constant(1, c2);
        CHECK(wronskian({f, g, dependent}).is_zero());
    }
}

TEST_CASE("apply_specialization examples") {
    RingPtr r = RingConfig::make(1, {"y"}, CoeffField::rationals(), {"c"});
    Specialization phi;
    phi.n_params = 1;
    phi.images["c"] = rf("t1");
    RingPtr target = specialization_target(r, 1);

    CHECK(apply_specialization(parse_poly("c*y", r), phi, target) ==
          parse_poly("t1*y", target));
    // the extension by derivation rules: phi(c') = d/dt (t1) = 1
    CHECK(apply_specialization(parse_poly("d1(c)*y", r), phi, target) ==
          parse_poly("y", target));

    Specialization empty;
    empty.n_params = 1;
    CHECK_THROWS_AS(apply_specialization(parse_poly("c*y", r), empty, target),
                    SpecializationDomainError);
}

TEST_CASE("specialization commutes with the derivations") {
    Rng rng(71);
    RingPtr r = RingConfig::make(2, {"y"}, CoeffField::rationals(), {"u", "v"});
    RingPtr target = specialization_target(r, 2);
    for (int i = 0; i < 30; ++i) {
        Specialization phi;
        phi.n_params = 2;
        phi.images["u"] = sample_ratfun(rng, 2);
        phi.images["v"] = sample_ratfun(rng, 2);
        DiffPoly f = random_poly(rng, r, 1, 2, 3) * parse_poly("u", r) +
                     random_poly(rng, r, 1, 2, 2) * parse_poly("d2(v) + v^2", r);
        for (int d = 1; d <= 2; ++d)
            CHECK(apply_specialization(f.derive(d), phi, target) ==
                  apply_specialization(f, phi, target).derive(d));
    }
}
