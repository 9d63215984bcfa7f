#include "rittkit/reduce.hpp"

#include <algorithm>
#include <cassert>

#include "rittkit/textio.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

namespace rittkit {

namespace {

void require_char_zero(const RingPtr& ring) {
    if (ring->field().characteristic() != 0)
        throw UnsupportedCharacteristicError("reduction requires characteristic 0");
}

}  // namespace

AutoreducedCheck check_autoreduced(const std::vector<DiffPoly>& members) {
    AutoreducedCheck out;
    auto fail = [&](std::string reason, int i, int j = -1) {
        out.ok = false;
        out.reason = std::move(reason);
        out.i = i;
        out.j = j;
        return out;
    };
    for (size_t i = 0; i < members.size(); ++i) {
        if (!same_ring(members[i].ring(), members[0].ring()))
            return fail("members live in different rings", static_cast<int>(i));
        if (members[i].is_coefficient_element())
            return fail("member has no leader (constant or coefficient-ring element)",
                        static_cast<int>(i));
    }
    std::vector<DiffVar> leaders;
    std::vector<int> degrees;
    for (const DiffPoly& f : members) {
        leaders.push_back(f.leader());
        degrees.push_back(f.degree_in(leaders.back()));
    }
    for (size_t i = 0; i < members.size(); ++i) {
        for (size_t j = 0; j < members.size(); ++j) {
            if (i == j) continue;
            if (leaders[i] == leaders[j])
                return fail("members share a leader", static_cast<int>(i), static_cast<int>(j));
            // members[j] must be reduced with respect to members[i].
            if (members[j].degree_in(leaders[i]) >= degrees[i])
                return fail("degree in another member's leader is not below that member's",
                            static_cast<int>(i), static_cast<int>(j));
            for (const DiffVar& v : members[j].variables()) {
                if (v.is_proper_derivative_of(leaders[i]))
                    return fail("member mentions a proper derivative of another leader",
                                static_cast<int>(i), static_cast<int>(j));
            }
        }
    }
    return out;
}

AutoreducedSet AutoreducedSet::make(std::vector<DiffPoly> members) {
    if (members.empty()) throw EmptyInputError("autoreduced set cannot be empty");
    AutoreducedCheck chk = check_autoreduced(members);
    if (!chk.ok) throw Error("not autoreduced: " + chk.reason);
    std::sort(members.begin(), members.end(), [](const DiffPoly& a, const DiffPoly& b) {
        return rank_of(a.leader()) < rank_of(b.leader());
    });
    AutoreducedSet A;
    A.ring_ = members.front().ring();
    A.members_ = std::move(members);
    A.h_ = DiffPoly::from_long(A.ring_, 1);
    for (const DiffPoly& f : A.members_) {
        auto d = f.initial_separant();
        A.leaders_.push_back(d.leader);
        A.degrees_.push_back(d.degree);
        A.initials_.push_back(d.initial);
        A.separants_.push_back(d.separant);
        A.h_ = A.h_ * d.separant * d.initial;
    }
    return A;
}

bool try_exact_divide(const DiffPoly& a, const DiffPoly& b, DiffPoly& q) {
    if (b.is_zero()) return false;
    q = DiffPoly::zero(a.ring());
    DiffPoly r = a;
    const auto& lead_b = *b.terms().rbegin();
    while (!r.is_zero()) {
        const auto& lead_r = *r.terms().rbegin();
        if (!lead_b.first.divides(lead_r.first)) return false;
        Monomial m = lead_b.first.divide_into(lead_r.first);
        Coeff c = lead_r.second / lead_b.second;
        DiffPoly t = DiffPoly::monomial_term(a.ring(), m, c);
        q += t;
        r -= t * b;
    }
    return true;
}

bool is_reduced_against(const DiffPoly& g, const AutoreducedSet& A) {
    for (int i = 0; i < A.size(); ++i) {
        if (g.degree_in(A.leader(i)) >= A.leader_degree(i)) return false;
        for (const DiffVar& v : g.variables())
            if (v.is_proper_derivative_of(A.leader(i))) return false;
    }
    return true;
}

namespace {

struct Offense {
    DiffVar var;
    int member;
    bool proper;  // var is a proper derivative of the member's leader
};

std::optional<Offense> find_offense(const DiffPoly& g, const AutoreducedSet& A) {
    std::vector<DiffVar> vars = g.variables();
    // Descending scan; the first offense found is the highest-ranked one.
    for (auto it = vars.rbegin(); it != vars.rend(); ++it) {
        const DiffVar& v = *it;
        if (v.block != VarBlock::Main) break;  // coefficient block sorts below main
        bool is_a_leader = false;
        for (int i = 0; i < A.size() && !is_a_leader; ++i) {
            if (v == A.leader(i)) {
                is_a_leader = true;
                if (g.degree_in(v) >= A.leader_degree(i)) return Offense{v, i, false};
            }
        }
        if (is_a_leader) continue;  // below the member's leader degree: not offending
        // Among members whose leader v properly derives from, take the one
        // with the highest-ranked leader (the smallest derivative operator).
        std::optional<Offense> cand;
        for (int i = 0; i < A.size(); ++i) {
            if (v.is_proper_derivative_of(A.leader(i))) {
                if (!cand || rank_of(A.leader(cand->member)) < rank_of(A.leader(i)))
                    cand = Offense{v, i, true};
            }
        }
        if (cand) return cand;
    }
    return std::nullopt;
}

}  // namespace

ReductionCertificate full_reduce(const DiffPoly& g, const AutoreducedSet& A) {
    require_char_zero(g.ring());
    if (!same_ring(g.ring(), A.ring())) throw RingMismatchError("polynomial and set rings differ");

    ReductionCertificate cert(g.ring());
    cert.remainder = g;

    while (auto off = find_offense(cert.remainder, A)) {
        const int j = off->member;
        const DiffVar& v = off->var;
        std::vector<int> theta(g.ring()->n_derivations(), 0);
        DiffPoly h = A.member(j);
        DiffPoly lead_coeff = A.initial(j);
        int h_degree = A.leader_degree(j);
        int threshold = A.leader_degree(j);
        if (off->proper) {
            for (size_t k = 0; k < theta.size(); ++k) theta[k] = v.exps[k] - A.leader(j).exps[k];
            h = h.derive_theta(theta);
            lead_coeff = A.separant(j);
            h_degree = 1;
            threshold = 1;
        }
        QuotientKey key{j, theta};
        int d;
        while ((d = cert.remainder.degree_in(v)) >= threshold) {
            DiffPoly lc = cert.remainder.coeff_of(v, d);
            Monomial shift = Monomial::power(v, d - h_degree);
            DiffPoly q0(g.ring());
            auto it = cert.quotients.try_emplace(key, DiffPoly::zero(g.ring())).first;
            if (!lead_coeff.is_field_constant() && try_exact_divide(lc, lead_coeff, q0)) {
                DiffPoly contrib = q0.times_monomial(shift, Coeff::one(g.ring()->field()));
                cert.remainder -= contrib * h;
                it->second += contrib;
            } else {
                for (auto& [k, q] : cert.quotients) q = q * lead_coeff;
                cert.multiplier = cert.multiplier * lead_coeff;
                cert.h_exponent += 1;
                DiffPoly contrib = lc.times_monomial(shift, Coeff::one(g.ring()->field()));
                cert.remainder = cert.remainder * lead_coeff - contrib * h;
                cert.quotients.at(key) += contrib;
            }
        }
        if (cert.quotients.at(key).is_zero()) cert.quotients.erase(key);
    }

#ifndef NDEBUG
    assert(certificate_valid(g, A, cert));
    assert(is_reduced_against(cert.remainder, A));
#endif
    return cert;
}

bool certificate_valid(const DiffPoly& g, const AutoreducedSet& A, const ReductionCertificate& c) {
    DiffPoly lhs = c.multiplier * g;
    DiffPoly rhs = c.remainder;
    for (const auto& [key, q] : c.quotients)
        rhs += q * A.member(key.member).derive_theta(key.theta);
    return lhs == rhs;
}

std::vector<ReductionCertificate> reduce_batch(const std::vector<DiffPoly>& gs,
                                               const AutoreducedSet& A, Parallel par) {
    std::vector<ReductionCertificate> out(gs.size(), ReductionCertificate(A.ring()));
#ifdef _OPENMP
    if (par == Parallel::Auto) {
        std::exception_ptr err;
#pragma omp parallel for schedule(dynamic)
        for (long i = 0; i < static_cast<long>(gs.size()); ++i) {
            try {
                out[i] = full_reduce(gs[i], A);
            } catch (...) {
#pragma omp critical
                if (!err) err = std::current_exception();
            }
        }
        if (err) std::rethrow_exception(err);
        return out;
    }
#else
    (void)par;
#endif
    for (size_t i = 0; i < gs.size(); ++i) out[i] = full_reduce(gs[i], A);
    return out;
}

namespace {

// Greedy minimal autoreduced subset of a basis of non-constant polynomials:
// ascending (leader rank, leader degree, canonical text), keep whatever is
// pairwise reduced against what was already chosen.  This realizes the
// classical Ritt order's minimal subset.
std::vector<DiffPoly> minimal_autoreduced_subset(std::vector<DiffPoly> basis) {
    struct Entry {
        DiffPoly poly;
        Rank rank;
        int degree;
        std::string text;
    };
    std::vector<Entry> entries;
    for (DiffPoly& f : basis) {
        DiffVar u = f.leader();
        int d = f.degree_in(u);
        std::string text = to_string(f);
        entries.push_back(Entry{std::move(f), rank_of(u), d, std::move(text)});
    }
    std::sort(entries.begin(), entries.end(), [](const Entry& a, const Entry& b) {
        if (a.rank != b.rank) return a.rank < b.rank;
        if (a.degree != b.degree) return a.degree < b.degree;
        return a.text < b.text;
    });
    std::vector<DiffPoly> chosen;
    std::vector<DiffVar> chosen_leaders;
    std::vector<int> chosen_degrees;
    for (Entry& e : entries) {
        bool ok = true;
        DiffVar u = e.poly.leader();
        for (size_t i = 0; i < chosen.size() && ok; ++i) {
            if (chosen_leaders[i] == u) ok = false;
            if (ok && e.poly.degree_in(chosen_leaders[i]) >= chosen_degrees[i]) ok = false;
            if (ok)
                for (const DiffVar& v : e.poly.variables())
                    if (v.is_proper_derivative_of(chosen_leaders[i])) {
                        ok = false;
                        break;
                    }
        }
        if (ok) {
            chosen_leaders.push_back(u);
            chosen_degrees.push_back(e.poly.degree_in(u));
            chosen.push_back(std::move(e.poly));
        }
    }
    return chosen;
}

}  // namespace

CharsetResult characteristic_set(const std::vector<DiffPoly>& inputs, Parallel par) {
    if (inputs.empty()) throw EmptyInputError("empty generating set");
    require_char_zero(inputs.front().ring());

    std::vector<DiffPoly> basis;
    for (const DiffPoly& f : inputs) {
        if (f.is_zero()) continue;
        if (f.is_coefficient_element()) return CharsetResult{true, std::nullopt};
        if (std::find(basis.begin(), basis.end(), f) == basis.end()) basis.push_back(f);
    }
    if (basis.empty()) throw EmptyInputError("all generators are zero");

    for (;;) {
        AutoreducedSet A = AutoreducedSet::make(minimal_autoreduced_subset(basis));
        std::vector<DiffPoly> others;
        for (const DiffPoly& f : basis) {
            bool in_A = false;
            for (const DiffPoly& a : A.members())
                if (a == f) in_A = true;
            if (!in_A) others.push_back(f);
        }
        std::vector<ReductionCertificate> certs = reduce_batch(others, A, par);
        std::vector<DiffPoly> fresh;
        for (const ReductionCertificate& c : certs) {
            if (c.remainder.is_zero()) continue;
            if (c.remainder.is_coefficient_element()) return CharsetResult{true, std::nullopt};
            if (std::find(fresh.begin(), fresh.end(), c.remainder) == fresh.end())
                fresh.push_back(c.remainder);
        }
        if (fresh.empty()) return CharsetResult{false, std::move(A)};
        basis.insert(basis.end(), fresh.begin(), fresh.end());
    }
}

MembershipResult membership(const DiffPoly& g, const AutoreducedSet& A) {
    ReductionCertificate cert = full_reduce(g, A);
    bool certified = cert.remainder.is_zero();
    return MembershipResult{certified, std::move(cert)};
}

CoherenceReport coherence_check(const AutoreducedSet& A) {
    require_char_zero(A.ring());
    CoherenceReport rep;
    for (int i = 0; i < A.size(); ++i) {
        for (int j = i + 1; j < A.size(); ++j) {
            const DiffVar& ui = A.leader(i);
            const DiffVar& uj = A.leader(j);
            if (ui.var != uj.var || ui.block != uj.block) continue;
            DiffVar common = ui;
            for (size_t k = 0; k < common.exps.size(); ++k)
                common.exps[k] = std::max(ui.exps[k], uj.exps[k]);
            if (common == ui || common == uj) continue;  // not proper for both
            std::vector<int> theta_i(common.exps.size()), theta_j(common.exps.size());
            for (size_t k = 0; k < common.exps.size(); ++k) {
                theta_i[k] = common.exps[k] - ui.exps[k];
                theta_j[k] = common.exps[k] - uj.exps[k];
            }
            DiffPoly delta = A.separant(j) * A.member(i).derive_theta(theta_i) -
                             A.separant(i) * A.member(j).derive_theta(theta_j);
            ReductionCertificate cert = full_reduce(delta, A);
            if (!cert.remainder.is_zero()) rep.coherent = false;
            rep.pairs.push_back(DeltaPairTrace{i, j, common, std::move(delta), cert.remainder});
        }
    }
    return rep;
}

}  // namespace rittkit
