#pragma once

// Shared randomized-input generators and the independent oracles the test
// suites check against.  Oracles deliberately use their own representations
// (dense coefficient arrays, direct enumeration), not the library's sparse
// machinery.

#include <algorithm>
#include <optional>
#include <vector>

#include "rittkit/chevalley.hpp"
#include "rittkit/reduce.hpp"

namespace rittkit::testgen {

inline Coeff random_coeff(Rng& rng, const CoeffField& field) {
    if (field.kind == FieldKind::RationalFunctions) {
        MPoly num(field.n_params()), den = MPoly::constant(field.n_params(), Rat(1));
        num.add_term(MPoly::Exps(field.n_params(), 0), Rat(rng.uniform(-5, 5)));
        if (field.n_params() > 0 && rng.one_in(3)) {
            MPoly::Exps e(field.n_params(), 0);
            e[rng.uniform(0, field.n_params() - 1)] = 1;
            num.add_term(e, Rat(rng.uniform(-2, 2)));
        }
        return Coeff::rat_fun(RatFun(std::move(num), std::move(den)));
    }
    return Coeff::from_long(field, rng.uniform(-9, 9));
}

inline DiffVar random_var(Rng& rng, const RingPtr& ring, int max_order) {
    DiffVar v{VarBlock::Main, 0, std::vector<int>(ring->n_derivations(), 0)};
    v.var = static_cast<int>(rng.uniform(0, static_cast<long>(ring->main_vars().size()) - 1));
    int budget = max_order;
    for (int i = 0; i < ring->n_derivations() && budget > 0; ++i) {
        v.exps[i] = static_cast<int>(rng.uniform(0, budget));
        budget -= v.exps[i];
    }
    return v;
}

inline DiffPoly random_poly(Rng& rng, const RingPtr& ring, int max_order, int max_degree,
                            int max_terms) {
    DiffPoly p(ring);
    int terms = static_cast<int>(rng.uniform(1, max_terms));
    for (int t = 0; t < terms; ++t) {
        Monomial m;
        int nvars = static_cast<int>(rng.uniform(0, 2));
        for (int k = 0; k < nvars; ++k)
            m = m.times(Monomial::power(random_var(rng, ring, max_order),
                                        static_cast<int>(rng.uniform(1, max_degree))));
        p.add_term(m, random_coeff(rng, ring->field()));
    }
    return p;
}

inline DiffPoly random_nonzero_poly(Rng& rng, const RingPtr& ring, int max_order, int max_degree,
                                    int max_terms) {
    for (;;) {
        DiffPoly p = random_poly(rng, ring, max_order, max_degree, max_terms);
        if (!p.is_zero()) return p;
    }
}

// A random autoreduced set of one or two members with distinct leaders,
// mutually reduced by construction (verified, resampled on failure).
inline AutoreducedSet random_autoreduced_set(Rng& rng, const RingPtr& ring, int max_members,
                                             int max_order, int max_degree) {
    for (;;) {
        int count = static_cast<int>(rng.uniform(1, max_members));
        std::vector<DiffVar> leaders;
        for (int i = 0; i < count; ++i) {
            DiffVar u = random_var(rng, ring, max_order);
            bool fresh = true;
            for (const DiffVar& w : leaders)
                if (w == u || u.is_derivative_of(w) || w.is_derivative_of(u)) fresh = false;
            if (fresh) leaders.push_back(u);
        }
        std::vector<int> degrees;
        for (size_t i = 0; i < leaders.size(); ++i)
            degrees.push_back(static_cast<int>(rng.uniform(1, max_degree)));

        // Variables allowed in tails: below the member's leader, not a
        // proper derivative of any leader; other leaders enter only below
        // their member's degree.
        std::vector<DiffPoly> members;
        for (size_t i = 0; i < leaders.size(); ++i) {
            DiffPoly f = DiffPoly::monomial_term(
                ring, Monomial::power(leaders[i], degrees[i]),
                Coeff::from_long(ring->field(), rng.uniform(1, 4)));
            int tail_terms = static_cast<int>(rng.uniform(1, 3));
            for (int t = 0; t < tail_terms; ++t) {
                DiffVar v = random_var(rng, ring, max_order);
                if (!var_less(v, leaders[i])) continue;
                bool bad = false;
                int cap = max_degree;
                for (size_t j = 0; j < leaders.size(); ++j) {
                    if (v.is_proper_derivative_of(leaders[j])) bad = true;
                    if (v == leaders[j]) cap = degrees[j] - 1;
                }
                if (bad || cap < 1) continue;
                f.add_term(Monomial::power(v, static_cast<int>(rng.uniform(1, cap))),
                           random_coeff(rng, ring->field()));
            }
            if (rng.one_in(2))
                f.add_term(Monomial::one(), random_coeff(rng, ring->field()));
            members.push_back(std::move(f));
        }
        if (members.empty()) continue;
        if (!check_autoreduced(members).ok) continue;
        return AutoreducedSet::make(std::move(members));
    }
}

// ---------------------------------------------------------------------------
// Oracle: classical pseudo-division on dense univariate rational arrays.
// One multiplication by the divisor's leading coefficient per elimination
// step; returns (number of steps, quotient, remainder).

struct DensePoly {
    std::vector<Rat> c;  // c[i] multiplies x^i; trimmed

    void trim() {
        while (!c.empty() && c.back() == 0) c.pop_back();
    }
    int degree() const { return static_cast<int>(c.size()) - 1; }
    bool is_zero() const { return c.empty(); }
};

struct PremOracle {
    int steps = 0;
    DensePoly quotient;
    DensePoly remainder;
};

inline PremOracle naive_pseudo_divide(const DensePoly& a, const DensePoly& b) {
    PremOracle out;
    out.remainder = a;
    const Rat lead = b.c.back();
    const int db = b.degree();
    while (!out.remainder.is_zero() && out.remainder.degree() >= db) {
        int dr = out.remainder.degree();
        Rat top = out.remainder.c.back();
        // q := lead*q + top*x^(dr-db);  r := lead*r - top*x^(dr-db)*b
        for (Rat& q : out.quotient.c) q *= lead;
        if (static_cast<int>(out.quotient.c.size()) < dr - db + 1)
            out.quotient.c.resize(dr - db + 1, Rat(0));
        out.quotient.c[dr - db] += top;
        for (Rat& r : out.remainder.c) r *= lead;
        for (int i = 0; i <= db; ++i) out.remainder.c[dr - db + i] -= top * b.c[i];
        out.remainder.trim();
        out.quotient.trim();
        out.steps += 1;
    }
    return out;
}

// Conversions between the dense oracle form and N = 0 univariate ring
// polynomials.
inline DiffPoly dense_to_poly(const DensePoly& d, const RingPtr& ring) {
    DiffVar x = *ring->find_var(ring->main_vars().at(0));
    DiffPoly p(ring);
    for (size_t i = 0; i < d.c.size(); ++i)
        p.add_term(Monomial::power(x, static_cast<int>(i)), Coeff::rational(d.c[i]));
    return p;
}

inline DensePoly poly_to_dense(const DiffPoly& p) {
    DiffVar x = *p.ring()->find_var(p.ring()->main_vars().at(0));
    DensePoly d;
    d.c.assign(p.degree_in(x) + 1, Rat(0));
    for (const auto& [m, c] : p.terms()) d.c[m.degree_in(x)] = c.as_rat();
    d.trim();
    return d;
}

inline DensePoly random_dense(Rng& rng, int max_degree) {
    DensePoly d;
    int deg = static_cast<int>(rng.uniform(0, max_degree));
    d.c.assign(deg + 1, Rat(0));
    for (int i = 0; i <= deg; ++i) d.c[i] = Rat(rng.uniform(-6, 6));
    if (d.c.back() == 0) d.c.back() = Rat(rng.uniform(1, 6));
    return d;
}

// ---------------------------------------------------------------------------
// Oracle: brute-force enumeration of the monic linear divisors of x^2 - n
// over Q by rational root candidates, with an independent sigma-stability
// check (x - r and -(x + r) generate the same ideal only when r = 0).

inline std::vector<Rat> monic_linear_divisor_roots_of_x2_minus(const Rat& n) {
    std::vector<Rat> roots;
    // x^2 - n = (x - r)(x + r) demands r^2 = n; search p/q with p | num,
    // q | den of n (after reduction), both signs.
    Int pnum = n.get_num(), pden = n.get_den();
    auto divisors = [](const Int& v) {
        std::vector<Int> out;
        Int a = abs(v);
        for (Int d = 1; d * d <= a; ++d)
            if (a % d == 0) {
                out.push_back(d);
                out.push_back(a / d);
            }
        if (a == 0) out.push_back(0);
        return out;
    };
    for (const Int& p : divisors(pnum))
        for (const Int& q : divisors(pden)) {
            if (q == 0) continue;
            Rat cand(p, q);
            cand.canonicalize();
            for (const Rat& r : {cand, Rat(-cand)})
                if (r * r == n &&
                    std::find(roots.begin(), roots.end(), r) == roots.end())
                    roots.push_back(r);
        }
    std::sort(roots.begin(), roots.end(), [](const Rat& a, const Rat& b) { return a > b; });
    return roots;
}

}  // namespace rittkit::testgen
