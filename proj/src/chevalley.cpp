#include "rittkit/chevalley.hpp"

#include <algorithm>
#include <cassert>

#include "rittkit/textio.hpp"

namespace rittkit {

Presentation::Presentation(RingPtr base, std::vector<std::string> generators,
                           std::vector<std::vector<DiffPoly>> relations, DiffPoly target)
    : base_(std::move(base)),
      generators_(std::move(generators)),
      relations_(std::move(relations)),
      target_(std::move(target)) {
    if (generators_.empty()) throw EmptyInputError("presentation needs at least one generator");
    if (relations_.size() != generators_.size())
        throw Error("presentation needs one relation set per generator");
    if (base_->field().characteristic() != 0)
        throw UnsupportedCharacteristicError("presentations require characteristic 0");

    // Level i ring: main variable g_i, everything before it in the
    // coefficient block.
    RingPtr current = RingConfig::make(base_->n_derivations(), {}, base_->field(), base_->main_vars());
    for (const std::string& g : generators_) {
        current = RingConfig::make(
            base_->n_derivations(), {g}, base_->field(),
            [&] {
                std::vector<std::string> coeffs = current->coeff_vars();
                coeffs.insert(coeffs.end(), current->main_vars().begin(),
                              current->main_vars().end());
                return coeffs;
            }());
        level_rings_.push_back(current);
    }

    sets_.resize(relations_.size());
    for (size_t i = 0; i < relations_.size(); ++i) {
        for (const DiffPoly& f : relations_[i])
            if (!same_ring(f.ring(), level_rings_[i]))
                throw RingMismatchError("relation of level " + std::to_string(i + 1) +
                                        " is not over that level's ring");
        if (relations_[i].empty()) continue;
        sets_[i] = AutoreducedSet::make(relations_[i]);
        CoherenceReport rep = coherence_check(*sets_[i]);
        if (!rep.coherent)
            throw Error("relation set of level " + std::to_string(i + 1) + " is not coherent");
    }
    if (!same_ring(target_.ring(), level_rings_.back()))
        throw RingMismatchError("target is not over the top-level ring");
    if (target_.is_zero()) throw ZeroTargetError("target element is zero");
    if (!relations_.back().empty()) {
        MembershipResult m = membership(target_, *sets_.back());
        if (m.certified) throw ZeroTargetError("target element vanishes in S (reduces to 0)");
    }
}

const AutoreducedSet& Presentation::relation_set(int i) const {
    assert(!transcendental(i));
    return *sets_[i - 1];
}

DiffPoly witness_transcendental(const DiffPoly& B) {
    if (B.is_zero()) throw ZeroTargetError("zero target");
    return B.designated_leading_coefficient();
}

DiffPoly witness_algebraic(const AutoreducedSet& A, const DiffPoly& B) {
    if (B.is_zero()) throw ZeroTargetError("zero target");
    ReductionCertificate cert = full_reduce(B, A);
    if (cert.remainder.is_zero())
        throw ZeroTargetError("target reduces to 0 against the relations");
    RingPtr R = A.ring()->coefficient_ring();
    DiffPoly w = DiffPoly::from_long(R, 1);
    for (int i = 0; i < A.size(); ++i) {
        w = w * A.initial(i).designated_leading_coefficient();
        w = w * A.separant(i).designated_leading_coefficient();
    }
    w = w * cert.remainder.designated_leading_coefficient();
    return w;
}

DiffPoly witness_chain(const Presentation& p) {
    DiffPoly target = p.target();
    for (int i = p.levels(); i >= 1; --i) {
        if (!same_ring(target.ring(), p.level_ring(i)))
            target = repartition(target, p.level_ring(i));
        DiffPoly w = p.transcendental(i) ? witness_transcendental(target)
                                         : witness_algebraic(p.relation_set(i), target);
        // w lives in R{g1..g_{i-1}} (the coefficient ring of level i).
        target = std::move(w);
    }
    // Express the final witness in R's own view.
    RingPtr base = p.base_ring();
    if (!same_ring(target.ring(), base)) target = repartition(target, base);
    return target;
}

const char* verdict_name(Verdict v) {
    switch (v) {
        case Verdict::Consistent: return "Consistent";
        case Verdict::Inconsistent: return "Inconsistent";
        case Verdict::Unknown: return "Unknown";
    }
    return "?";
}

ConsistencyVerdict specialize_and_check(const AutoreducedSet& A, const DiffPoly& B,
                                        const Specialization& phi) {
    if (A.ring()->field().characteristic() != 0)
        throw UnsupportedCharacteristicError("specialization requires characteristic 0");
    RingPtr target = specialization_target(A.ring(), phi.n_params);

    std::vector<DiffPoly> image;
    for (int i = 0; i < A.size(); ++i) {
        DiffPoly fi = apply_specialization(A.member(i), phi, target);
        if (fi.is_zero())
            return {Verdict::Unknown, "member " + std::to_string(i) + " vanishes under phi"};
        if (fi.is_field_constant())
            return {Verdict::Inconsistent,
                    "member " + std::to_string(i) + " collapses to the nonzero constant " +
                        to_string(fi)};
        // Leader and leader degree must survive: equivalent to I_f^phi != 0.
        DiffPoly init = apply_specialization(A.initial(i), phi, target);
        if (init.is_zero())
            return {Verdict::Unknown,
                    "member " + std::to_string(i) + " loses its initial (leader drop)"};
        DiffVar u = fi.leader();
        if (!(u == A.leader(i)) || fi.degree_in(u) != A.leader_degree(i))
            return {Verdict::Unknown, "member " + std::to_string(i) + " changes leader"};
        DiffPoly sep = apply_specialization(A.separant(i), phi, target);
        if (sep.is_zero())
            return {Verdict::Unknown, "member " + std::to_string(i) + " loses its separant"};
        image.push_back(std::move(fi));
    }

    AutoreducedCheck chk = check_autoreduced(image);
    if (!chk.ok) return {Verdict::Unknown, "image is not autoreduced: " + chk.reason};
    AutoreducedSet Aphi = AutoreducedSet::make(image);

    CoherenceReport coh = coherence_check(Aphi);
    if (!coh.coherent) return {Verdict::Unknown, "image fails the coherence check"};

    DiffPoly Bphi = apply_specialization(B, phi, target);
    ReductionCertificate cert = full_reduce(Bphi, Aphi);
    if (cert.remainder.is_zero())
        return {Verdict::Inconsistent, "target reduces to 0 under phi"};
    return {Verdict::Consistent, "Rosenfeld criterion passes; target remainder " +
                                     to_string(cert.remainder)};
}

RatFun sample_ratfun(Rng& rng, int n_params) {
    auto random_poly = [&](bool allow_zero) {
        MPoly p(n_params);
        for (;;) {
            p = MPoly(n_params);
            int degree = static_cast<int>(rng.uniform(0, 2));
            // All monomials of total degree <= degree over n_params variables.
            std::vector<MPoly::Exps> exps;
            MPoly::Exps cur(n_params, 0);
            auto rec = [&](auto&& self, int var, int remaining) -> void {
                if (var == n_params) {
                    exps.push_back(cur);
                    return;
                }
                for (int e = 0; e <= remaining; ++e) {
                    cur[var] = e;
                    self(self, var + 1, remaining - e);
                }
                cur[var] = 0;
            };
            rec(rec, 0, degree);
            for (const auto& e : exps) p.add_term(e, Rat(rng.uniform(-3, 3)));
            if (allow_zero || !p.is_zero()) return p;
        }
    };
    MPoly num(n_params);
    if (!rng.one_in(8)) num = random_poly(true);
    MPoly den = random_poly(false);
    return RatFun(std::move(num), std::move(den));
}

RatFun specialize_element(const DiffPoly& a, const Specialization& phi) {
    // a is an element of R in R's own view: every variable is a coefficient
    // symbol, so the image is constant.
    RingPtr empty = RingConfig::make(a.ring()->n_derivations(), {},
                                     CoeffField::rational_functions(phi.n_params));
    DiffPoly img = apply_specialization(a, phi, empty);
    assert(img.is_field_constant());
    Coeff c = img.constant_value();
    return c.holds_ratfun() ? c.as_ratfun() : RatFun::constant(phi.n_params, c.as_rat());
}

LiftReport prime_lift_check(const AutoreducedSet& A, const DiffPoly& B, const DiffPoly& a,
                            int trials, std::uint64_t seed, Parallel par) {
    if (a.is_zero()) throw ZeroTargetError("witness element is zero");
    const int n_params = std::max(A.ring()->n_derivations(), 1);
    const std::vector<std::string>& symbols = A.ring()->coeff_vars();
    const std::vector<std::string> param_names = CoeffField::rational_functions(n_params).params;

    LiftReport report;
    report.trials = trials;
    report.outcomes.resize(trials);
    std::vector<long> rejected(trials, 0);

    auto run_trial = [&](int t) {
        Rng rng(Rng::mix(seed, static_cast<std::uint64_t>(t)));
        Specialization phi;
        phi.n_params = n_params;
        for (int attempt = 0;; ++attempt) {
            if (attempt > 1000)
                throw Error("could not sample a specialization with phi(a) != 0");
            phi.images.clear();
            for (const std::string& s : symbols) phi.images[s] = sample_ratfun(rng, n_params);
            if (!specialize_element(a, phi).is_zero()) break;
            rejected[t] += 1;
        }
        ConsistencyVerdict v = specialize_and_check(A, B, phi);
        LiftTrial& out = report.outcomes[t];
        out.index = t;
        out.verdict = v.verdict;
        out.reason = v.reason;
        for (const std::string& s : symbols)
            out.phi.emplace_back(s, to_string(phi.images.at(s), param_names));
    };

#ifdef _OPENMP
    if (par == Parallel::Auto) {
        std::exception_ptr err;
#pragma omp parallel for schedule(dynamic)
        for (int t = 0; t < trials; ++t) {
            try {
                run_trial(t);
            } catch (...) {
#pragma omp critical
                if (!err) err = std::current_exception();
            }
        }
        if (err) std::rethrow_exception(err);
    } else {
        for (int t = 0; t < trials; ++t) run_trial(t);
    }
#else
    (void)par;
    for (int t = 0; t < trials; ++t) run_trial(t);
#endif

    for (int t = 0; t < trials; ++t) {
        report.rejected_samples += rejected[t];
        switch (report.outcomes[t].verdict) {
            case Verdict::Consistent: report.consistent++; break;
            case Verdict::Inconsistent: report.inconsistent++; break;
            case Verdict::Unknown: report.unknown++; break;
        }
    }
    return report;
}

}  // namespace rittkit
