#include "rittkit/poly.hpp"

#include <algorithm>
#include <cassert>

namespace rittkit {

DiffPoly DiffPoly::constant(RingPtr ring, Coeff c) {
    DiffPoly p(std::move(ring));
    if (!c.matches(p.ring_->field())) throw RingMismatchError("coefficient does not match the ring's field");
    if (!c.is_zero()) p.terms_.emplace(Monomial::one(), std::move(c));
    return p;
}

DiffPoly DiffPoly::from_long(RingPtr ring, long n) {
    Coeff c = Coeff::from_long(ring->field(), n);
    return constant(std::move(ring), std::move(c));
}

DiffPoly DiffPoly::from_rat(RingPtr ring, const Rat& r) {
    Coeff c = Coeff::from_rat(ring->field(), r);
    return constant(std::move(ring), std::move(c));
}

DiffPoly DiffPoly::variable(RingPtr ring, const DiffVar& v) {
    assert(static_cast<int>(v.exps.size()) == ring->n_derivations());
    DiffPoly p(ring);
    p.terms_.emplace(Monomial::power(v, 1), Coeff::one(ring->field()));
    return p;
}

DiffPoly DiffPoly::monomial_term(RingPtr ring, Monomial m, Coeff c) {
    DiffPoly p(std::move(ring));
    if (!c.is_zero()) p.terms_.emplace(std::move(m), std::move(c));
    return p;
}

bool DiffPoly::is_field_constant() const {
    return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.is_one());
}

bool DiffPoly::is_coefficient_element() const {
    for (const auto& [m, c] : terms_)
        if (m.has_main_var()) return false;
    return true;
}

Coeff DiffPoly::constant_value() const {
    if (terms_.empty()) return Coeff::zero(ring_->field());
    assert(is_field_constant());
    return terms_.begin()->second;
}

void DiffPoly::add_term(const Monomial& m, const Coeff& c) {
    if (c.is_zero()) return;
    auto it = terms_.find(m);
    if (it == terms_.end()) {
        terms_.emplace(m, c);
    } else {
        Coeff sum = it->second + c;
        if (sum.is_zero())
            terms_.erase(it);
        else
            it->second = std::move(sum);
    }
}

void DiffPoly::check_ring(const DiffPoly& o) const {
    if (!same_ring(ring_, o.ring_)) throw RingMismatchError("operands live in different rings");
}

DiffPoly DiffPoly::operator-() const {
    DiffPoly out(ring_);
    for (const auto& [m, c] : terms_) out.terms_.emplace(m, -c);
    return out;
}

DiffPoly& DiffPoly::operator+=(const DiffPoly& o) {
    check_ring(o);
    for (const auto& [m, c] : o.terms_) add_term(m, c);
    return *this;
}

DiffPoly& DiffPoly::operator-=(const DiffPoly& o) {
    check_ring(o);
    for (const auto& [m, c] : o.terms_) add_term(m, -c);
    return *this;
}

DiffPoly operator*(const DiffPoly& a, const DiffPoly& b) {
    a.check_ring(b);
    DiffPoly out(a.ring_);
    for (const auto& [ma, ca] : a.terms_)
        for (const auto& [mb, cb] : b.terms_) out.add_term(ma.times(mb), ca * cb);
    return out;
}

DiffPoly DiffPoly::scaled(const Coeff& c) const {
    DiffPoly out(ring_);
    if (c.is_zero()) return out;
    for (const auto& [m, k] : terms_) out.terms_.emplace(m, k * c);
    return out;
}

DiffPoly DiffPoly::times_monomial(const Monomial& m, const Coeff& c) const {
    DiffPoly out(ring_);
    if (c.is_zero()) return out;
    for (const auto& [mm, k] : terms_) out.add_term(mm.times(m), k * c);
    return out;
}

DiffPoly DiffPoly::pow(unsigned e) const {
    DiffPoly out = from_long(ring_, 1);
    for (unsigned i = 0; i < e; ++i) out = out * *this;
    return out;
}

bool DiffPoly::operator==(const DiffPoly& o) const {
    return same_ring(ring_, o.ring_) && terms_ == o.terms_;
}

DiffPoly DiffPoly::derive(int i) const {
    if (i < 1 || i > ring_->n_derivations())
        throw DerivationIndexError("derivation index " + std::to_string(i) + " out of range (N = " +
                                       std::to_string(ring_->n_derivations()) + ")",
                                   0, 0);
    int idx = i - 1;
    DiffPoly out(ring_);
    for (const auto& [m, c] : terms_) {
        // Coefficient part of the Leibniz rule (nontrivial over Q(t)).
        out.add_term(m, c.derive(idx));
        // Variable part.
        for (const auto& [v, e] : m.factors()) {
            Monomial rest = m.without(v, 1);
            out.add_term(rest.times(Monomial::power(v.derived(idx), 1)), c.times_int(e));
        }
    }
    return out;
}

DiffPoly DiffPoly::derive_theta(const std::vector<int>& theta) const {
    assert(static_cast<int>(theta.size()) == ring_->n_derivations());
    DiffPoly out = *this;
    for (size_t i = 0; i < theta.size(); ++i)
        for (int k = 0; k < theta[i]; ++k) out = out.derive(static_cast<int>(i) + 1);
    return out;
}

DiffVar DiffPoly::leader() const {
    const DiffVar* best = nullptr;
    for (const auto& [m, c] : terms_) {
        const DiffVar* v = m.top_main_var();
        if (v && (!best || var_less(*best, *v))) best = v;
    }
    if (!best) throw ConstantPolynomialError("polynomial has no differential variable");
    return *best;
}

int DiffPoly::degree_in(const DiffVar& v) const {
    int d = 0;
    for (const auto& [m, c] : terms_) d = std::max(d, m.degree_in(v));
    return d;
}

DiffPoly DiffPoly::coeff_of(const DiffVar& v, int power) const {
    DiffPoly out(ring_);
    for (const auto& [m, c] : terms_)
        if (m.degree_in(v) == power) out.add_term(m.without(v, power), c);
    return out;
}

bool DiffPoly::mentions(const DiffVar& v) const {
    for (const auto& [m, c] : terms_)
        if (m.contains(v)) return true;
    return false;
}

std::vector<DiffVar> DiffPoly::variables() const {
    std::vector<DiffVar> out;
    for (const auto& [m, c] : terms_)
        for (const auto& [v, e] : m.factors())
            if (std::find(out.begin(), out.end(), v) == out.end()) out.push_back(v);
    std::sort(out.begin(), out.end(), var_less);
    return out;
}

DiffPoly::Decomposition DiffPoly::initial_separant() const {
    DiffVar u = leader();
    int deg = degree_in(u);
    DiffPoly init = coeff_of(u, deg);
    DiffPoly sep(ring_);
    // S_f = sum_j j * I_j * u^(j-1)
    for (int j = 1; j <= deg; ++j) {
        DiffPoly ij = coeff_of(u, j);
        for (const auto& [m, c] : ij.terms())
            sep.add_term(m.times(Monomial::power(u, j - 1)), c.times_int(j));
    }
    return Decomposition{std::move(u), deg, std::move(init), std::move(sep)};
}

std::vector<std::pair<Monomial, Coeff>> DiffPoly::sorted_terms_for_print() const {
    std::vector<std::pair<Monomial, Coeff>> out(terms_.begin(), terms_.end());
    std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
        return monomial_print_less(b.first, a.first);  // descending
    });
    return out;
}

DiffPoly DiffPoly::designated_leading_coefficient() const {
    if (is_zero()) throw ZeroTargetError("zero polynomial has no leading coefficient");
    // Split every monomial into its main part and its coefficient-ring
    // part; pick the highest main part in canonical display order.
    const Monomial* best = nullptr;
    std::map<Monomial, DiffPoly, MonomialGrlexLess> groups;
    for (const auto& [m, c] : terms_) {
        Monomial main_part, coeff_part;
        for (const auto& [v, e] : m.factors()) {
            if (v.block == VarBlock::Main)
                main_part = main_part.times(Monomial::power(v, e));
            else
                coeff_part = coeff_part.times(Monomial::power(v, e));
        }
        auto [it, inserted] = groups.try_emplace(main_part, DiffPoly(ring_));
        it->second.add_term(coeff_part, c);
        if (!best || monomial_print_less(*best, it->first)) best = &it->first;
    }
    assert(best);
    return repartition(groups.at(*best), ring_->coefficient_ring());
}

DiffPoly h_product(std::span<const DiffPoly> members) {
    if (members.empty()) throw EmptyInputError("empty polynomial list");
    DiffPoly out = DiffPoly::from_long(members.front().ring(), 1);
    for (const DiffPoly& f : members) {
        auto d = f.initial_separant();  // throws ConstantPolynomialError
        out = out * d.separant * d.initial;
    }
    return out;
}

DiffPoly repartition(const DiffPoly& p, const RingPtr& target) {
    const RingConfig& src = *p.ring();
    if (src.n_derivations() != target->n_derivations())
        throw RingMismatchError("repartition requires the same number of derivations");
    if (!(src.field() == target->field()))
        throw RingMismatchError("repartition requires the same coefficient field");
    DiffPoly out(target);
    for (const auto& [m, c] : p.terms()) {
        Monomial mapped;
        for (const auto& [v, e] : m.factors()) {
            auto w = target->find_var(src.base_name(v));
            if (!w) throw RingMismatchError("variable '" + src.base_name(v) + "' has no counterpart");
            w->exps = v.exps;
            mapped = mapped.times(Monomial::power(*w, e));
        }
        out.add_term(mapped, c);
    }
    return out;
}

}  // namespace rittkit
