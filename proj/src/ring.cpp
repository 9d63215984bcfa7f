#include "rittkit/ring.hpp"

#include <algorithm>
#include <cassert>
#include <cctype>
#include <numeric>
#include <set>

namespace rittkit {

CoeffField CoeffField::prime_field(long p) {
    if (!is_prime_long(p)) throw Error("modulus " + std::to_string(p) + " is not prime");
    CoeffField f;
    f.kind = FieldKind::PrimeField;
    f.prime = p;
    return f;
}

CoeffField CoeffField::rational_functions(int k) {
    if (k < 0) throw Error("negative parameter count");
    CoeffField f;
    f.kind = FieldKind::RationalFunctions;
    for (int i = 1; i <= k; ++i) f.params.push_back("t" + std::to_string(i));
    return f;
}

std::optional<int> CoeffField::param_index(const std::string& name) const {
    if (kind != FieldKind::RationalFunctions) return std::nullopt;
    // "t" is accepted as an alias for the single parameter.
    if (params.size() == 1 && name == "t") return 0;
    for (size_t i = 0; i < params.size(); ++i)
        if (params[i] == name) return static_cast<int>(i);
    return std::nullopt;
}

int DiffVar::order() const {
    return std::accumulate(exps.begin(), exps.end(), 0);
}

bool DiffVar::is_derivative_of(const DiffVar& o) const {
    if (block != o.block || var != o.var || exps.size() != o.exps.size()) return false;
    for (size_t i = 0; i < exps.size(); ++i)
        if (exps[i] < o.exps[i]) return false;
    return true;
}

bool DiffVar::is_proper_derivative_of(const DiffVar& o) const {
    return is_derivative_of(o) && exps != o.exps;
}

DiffVar DiffVar::derived(int i) const {
    assert(i >= 0 && i < static_cast<int>(exps.size()));
    DiffVar out = *this;
    out.exps[i] += 1;
    return out;
}

Rank rank_of(const DiffVar& v) {
    return Rank{v.order(), v.var, v.exps};
}

bool var_less(const DiffVar& a, const DiffVar& b) {
    if (a.block != b.block) return a.block < b.block;
    return rank_of(a) < rank_of(b);
}

namespace {

bool valid_name(const std::string& name) {
    if (name.empty()) return false;
    if (!std::isalpha(static_cast<unsigned char>(name[0]))) return false;
    for (char c : name)
        if (!std::isalnum(static_cast<unsigned char>(c)) && c != '_') return false;
    // d<digits> is reserved for derivation operators.
    if (name[0] == 'd' && name.size() > 1 &&
        std::all_of(name.begin() + 1, name.end(),
                    [](char c) { return std::isdigit(static_cast<unsigned char>(c)); }))
        return false;
    return true;
}

}  // namespace

RingConfig::RingConfig(int n_derivations, std::vector<std::string> main_vars, CoeffField field,
                       std::vector<std::string> coeff_vars)
    : n_derivations_(n_derivations),
      main_vars_(std::move(main_vars)),
      coeff_vars_(std::move(coeff_vars)),
      field_(std::move(field)) {
    if (n_derivations_ < 0) throw Error("number of derivations must be nonnegative");
    if (field_.kind == FieldKind::PrimeField && !is_prime_long(field_.prime))
        throw Error("modulus is not prime");
    std::set<std::string> seen;
    auto check = [&](const std::string& name) {
        if (!valid_name(name)) throw Error("invalid variable name '" + name + "'");
        if (!seen.insert(name).second) throw Error("duplicate variable name '" + name + "'");
        if (field_.param_index(name)) throw Error("variable name '" + name + "' clashes with a parameter");
    };
    for (const auto& v : main_vars_) check(v);
    for (const auto& v : coeff_vars_) check(v);
}

RingPtr RingConfig::make(int n_derivations, std::vector<std::string> main_vars, CoeffField field,
                         std::vector<std::string> coeff_vars) {
    return std::make_shared<const RingConfig>(n_derivations, std::move(main_vars), std::move(field),
                                              std::move(coeff_vars));
}

const std::string& RingConfig::base_name(const DiffVar& v) const {
    const auto& names = block_names(v.block);
    assert(v.var >= 0 && v.var < static_cast<int>(names.size()));
    return names[v.var];
}

std::optional<DiffVar> RingConfig::find_var(const std::string& name) const {
    for (size_t i = 0; i < main_vars_.size(); ++i)
        if (main_vars_[i] == name)
            return DiffVar{VarBlock::Main, static_cast<int>(i), std::vector<int>(n_derivations_, 0)};
    for (size_t i = 0; i < coeff_vars_.size(); ++i)
        if (coeff_vars_[i] == name)
            return DiffVar{VarBlock::Coefficient, static_cast<int>(i), std::vector<int>(n_derivations_, 0)};
    return std::nullopt;
}

RingPtr RingConfig::coefficient_ring() const {
    return make(n_derivations_, coeff_vars_, field_, {});
}

RingPtr RingConfig::extension(std::vector<std::string> new_main_vars) const {
    std::vector<std::string> coeffs = coeff_vars_;
    coeffs.insert(coeffs.end(), main_vars_.begin(), main_vars_.end());
    return make(n_derivations_, std::move(new_main_vars), field_, std::move(coeffs));
}

Monomial Monomial::power(const DiffVar& v, int e) {
    Monomial m;
    if (e > 0) m.factors_.emplace_back(v, e);
    return m;
}

int Monomial::total_degree() const {
    int d = 0;
    for (const auto& [v, e] : factors_) d += e;
    return d;
}

int Monomial::degree_in(const DiffVar& v) const {
    for (const auto& [w, e] : factors_)
        if (w == v) return e;
    return 0;
}

const DiffVar* Monomial::top_var() const {
    return factors_.empty() ? nullptr : &factors_.back().first;
}

const DiffVar* Monomial::top_main_var() const {
    // Main-block variables sort above coefficient ones, so the top main
    // variable, if any, is the last factor.
    if (factors_.empty()) return nullptr;
    const DiffVar& v = factors_.back().first;
    return v.block == VarBlock::Main ? &v : nullptr;
}

Monomial Monomial::times(const Monomial& o) const {
    Monomial out;
    auto a = factors_.begin(), b = o.factors_.begin();
    while (a != factors_.end() || b != o.factors_.end()) {
        if (a == factors_.end()) {
            out.factors_.push_back(*b++);
        } else if (b == o.factors_.end()) {
            out.factors_.push_back(*a++);
        } else if (a->first == b->first) {
            out.factors_.emplace_back(a->first, a->second + b->second);
            ++a;
            ++b;
        } else if (var_less(a->first, b->first)) {
            out.factors_.push_back(*a++);
        } else {
            out.factors_.push_back(*b++);
        }
    }
    return out;
}

Monomial Monomial::without(const DiffVar& v, int e) const {
    Monomial out;
    for (const auto& [w, k] : factors_) {
        if (w == v) {
            assert(k >= e);
            if (k > e) out.factors_.emplace_back(w, k - e);
        } else {
            out.factors_.emplace_back(w, k);
        }
    }
    return out;
}

bool Monomial::divides(const Monomial& m) const {
    for (const auto& [v, e] : factors_)
        if (m.degree_in(v) < e) return false;
    return true;
}

Monomial Monomial::divide_into(const Monomial& m) const {
    Monomial out = m;
    for (const auto& [v, e] : factors_) out = out.without(v, e);
    return out;
}

bool monomial_grlex_less(const Monomial& a, const Monomial& b) {
    int da = a.total_degree(), db = b.total_degree();
    if (da != db) return da < db;
    // Lex on exponent vectors, reading the highest variable first.
    auto ia = a.factors().rbegin(), enda = a.factors().rend();
    auto ib = b.factors().rbegin(), endb = b.factors().rend();
    while (ia != enda && ib != endb) {
        if (ia->first == ib->first) {
            if (ia->second != ib->second) return ia->second < ib->second;
            ++ia;
            ++ib;
        } else {
            // The monomial owning the higher variable has a positive
            // exponent where the other has zero.
            return var_less(ia->first, ib->first);
        }
    }
    // Same total degree and a common prefix: both must be exhausted.
    return false;
}

bool monomial_print_less(const Monomial& a, const Monomial& b) {
    const DiffVar* va = a.top_var();
    const DiffVar* vb = b.top_var();
    if (!va || !vb) {
        if (!va && !vb) return false;
        return !va;  // the constant monomial prints last
    }
    if (!(*va == *vb)) return var_less(*va, *vb);
    int da = a.total_degree(), db = b.total_degree();
    if (da != db) return da < db;
    auto ia = a.factors().rbegin(), enda = a.factors().rend();
    auto ib = b.factors().rbegin(), endb = b.factors().rend();
    while (ia != enda && ib != endb) {
        if (ia->first == ib->first) {
            if (ia->second != ib->second) return ia->second < ib->second;
            ++ia;
            ++ib;
        } else {
            return var_less(ia->first, ib->first);
        }
    }
    return false;
}

}  // namespace rittkit
