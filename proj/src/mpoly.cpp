#include "rittkit/mpoly.hpp"

#include <cassert>
#include <numeric>

namespace rittkit {

namespace {

int exps_degree(const MPoly::Exps& e) {
    return std::accumulate(e.begin(), e.end(), 0);
}

bool exps_divides(const MPoly::Exps& a, const MPoly::Exps& b) {
    for (size_t i = 0; i < a.size(); ++i)
        if (a[i] > b[i]) return false;
    return true;
}

MPoly::Exps exps_sub(const MPoly::Exps& a, const MPoly::Exps& b) {
    MPoly::Exps out(a.size());
    for (size_t i = 0; i < a.size(); ++i) out[i] = a[i] - b[i];
    return out;
}

MPoly::Exps exps_add(const MPoly::Exps& a, const MPoly::Exps& b) {
    MPoly::Exps out(a.size());
    for (size_t i = 0; i < a.size(); ++i) out[i] = a[i] + b[i];
    return out;
}

}  // namespace

bool MPoly::GrlexLess::operator()(const Exps& a, const Exps& b) const {
    int da = exps_degree(a), db = exps_degree(b);
    if (da != db) return da < db;
    // t1 is the biggest variable: lex compare from the front.
    for (size_t i = 0; i < a.size(); ++i)
        if (a[i] != b[i]) return a[i] < b[i];
    return false;
}

MPoly MPoly::constant(int nvars, const Rat& c) {
    MPoly p(nvars);
    if (c != 0) p.terms_.emplace(Exps(nvars, 0), c);
    return p;
}

MPoly MPoly::variable(int nvars, int var) {
    assert(var >= 0 && var < nvars);
    MPoly p(nvars);
    Exps e(nvars, 0);
    e[var] = 1;
    p.terms_.emplace(std::move(e), Rat(1));
    return p;
}

bool MPoly::is_constant() const {
    return terms_.empty() || (terms_.size() == 1 && exps_degree(terms_.begin()->first) == 0);
}

Rat MPoly::constant_value() const {
    if (terms_.empty()) return Rat(0);
    return terms_.begin()->second;
}

int MPoly::total_degree() const {
    if (terms_.empty()) return -1;
    return exps_degree(terms_.rbegin()->first);
}

int MPoly::degree_in(int var) const {
    int d = 0;
    for (const auto& [e, c] : terms_) d = std::max(d, e[var]);
    return d;
}

void MPoly::add_term(const Exps& e, const Rat& c) {
    if (c == 0) return;
    auto it = terms_.find(e);
    if (it == terms_.end()) {
        terms_.emplace(e, c);
    } else {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

MPoly MPoly::operator-() const {
    MPoly out(nvars_);
    for (const auto& [e, c] : terms_) out.terms_.emplace(e, -c);
    return out;
}

MPoly& MPoly::operator+=(const MPoly& o) {
    assert(nvars_ == o.nvars_);
    for (const auto& [e, c] : o.terms_) add_term(e, c);
    return *this;
}

MPoly& MPoly::operator-=(const MPoly& o) {
    assert(nvars_ == o.nvars_);
    for (const auto& [e, c] : o.terms_) add_term(e, -c);
    return *this;
}

MPoly operator*(const MPoly& a, const MPoly& b) {
    assert(a.nvars_ == b.nvars_);
    MPoly out(a.nvars_);
    for (const auto& [ea, ca] : a.terms_)
        for (const auto& [eb, cb] : b.terms_)
            out.add_term(exps_add(ea, eb), ca * cb);
    return out;
}

MPoly MPoly::scaled(const Rat& c) const {
    MPoly out(nvars_);
    if (c == 0) return out;
    for (const auto& [e, k] : terms_) out.terms_.emplace(e, k * c);
    return out;
}

MPoly MPoly::pow(unsigned e) const {
    MPoly out = constant(nvars_, Rat(1));
    for (unsigned i = 0; i < e; ++i) out = out * *this;
    return out;
}

MPoly MPoly::derivative(int var) const {
    assert(var >= 0 && var < nvars_);
    MPoly out(nvars_);
    for (const auto& [e, c] : terms_) {
        if (e[var] == 0) continue;
        Exps d = e;
        d[var] -= 1;
        out.add_term(d, c * e[var]);
    }
    return out;
}

const MPoly::Exps& MPoly::leading_exps() const {
    assert(!terms_.empty());
    return terms_.rbegin()->first;
}

const Rat& MPoly::leading_coeff() const {
    assert(!terms_.empty());
    return terms_.rbegin()->second;
}

bool MPoly::try_divide(const MPoly& a, const MPoly& b, MPoly& q) {
    assert(a.nvars_ == b.nvars_);
    if (b.is_zero()) return false;
    q = MPoly(a.nvars_);
    MPoly r = a;
    const Exps& lb = b.leading_exps();
    const Rat& cb = b.leading_coeff();
    while (!r.is_zero()) {
        const Exps& lr = r.leading_exps();
        if (!exps_divides(lb, lr)) return false;
        Exps e = exps_sub(lr, lb);
        Rat c = r.leading_coeff() / cb;
        MPoly t(a.nvars_);
        t.terms_.emplace(std::move(e), c);
        q += t;
        r -= t * b;
    }
    return true;
}

namespace {

// Univariate view of p in variable `var`: degree -> coefficient (an MPoly
// with degree 0 in `var`).
std::map<int, MPoly> uview(const MPoly& p, int var) {
    std::map<int, MPoly> out;
    for (const auto& [e, c] : p.terms()) {
        MPoly::Exps rest = e;
        int d = rest[var];
        rest[var] = 0;
        auto [it, inserted] = out.try_emplace(d, MPoly(p.nvars()));
        it->second.add_term(rest, c);
    }
    return out;
}

MPoly from_uview(const std::map<int, MPoly>& v, int var, int nvars) {
    MPoly out(nvars);
    for (const auto& [d, coeff] : v) {
        MPoly::Exps shift(nvars, 0);
        shift[var] = d;
        MPoly x(nvars);
        x.add_term(shift, Rat(1));
        out += coeff * x;
    }
    return out;
}

MPoly content_wrt(const MPoly& p, int var) {
    MPoly g(p.nvars());
    for (const auto& [d, coeff] : uview(p, var)) g = MPoly::gcd(g, coeff);
    return g;
}

MPoly divide_exact(const MPoly& a, const MPoly& b) {
    MPoly q(a.nvars());
    bool ok = MPoly::try_divide(a, b, q);
    assert(ok);
    (void)ok;
    return q;
}

// Pseudo-remainder of a by b as univariate polynomials in `var`.
MPoly upoly_prem(const MPoly& a, const MPoly& b, int var) {
    MPoly r = a;
    int db = b.degree_in(var);
    auto bb = uview(b, var);
    const MPoly& lcb = bb.rbegin()->second;
    MPoly xpow(a.nvars());
    while (!r.is_zero()) {
        int dr = r.degree_in(var);
        if (dr < db) break;
        auto rr = uview(r, var);
        const MPoly& lcr = rr.rbegin()->second;
        MPoly::Exps shift(a.nvars(), 0);
        shift[var] = dr - db;
        MPoly mono(a.nvars());
        mono.add_term(shift, Rat(1));
        r = r * lcb - b * lcr * mono;
    }
    return r;
}

}  // namespace

MPoly MPoly::gcd(const MPoly& a, const MPoly& b) {
    auto monic = [](const MPoly& p) {
        if (p.is_zero()) return p;
        return p.scaled(Rat(1) / p.leading_coeff());
    };
    if (a.is_zero()) return monic(b);
    if (b.is_zero()) return monic(a);
    if (a.is_constant() || b.is_constant()) return constant(a.nvars_, Rat(1));

    // Main variable: the lowest-index parameter occurring in either.
    int var = -1;
    for (int i = 0; i < a.nvars_ && var < 0; ++i)
        if (a.degree_in(i) > 0 || b.degree_in(i) > 0) var = i;
    assert(var >= 0);

    MPoly ca = content_wrt(a, var), cb = content_wrt(b, var);
    MPoly ga = divide_exact(a, ca), gb = divide_exact(b, cb);
    MPoly cont = gcd(ca, cb);

    // Primitive PRS.
    MPoly r0 = ga, r1 = gb;
    if (r0.degree_in(var) < r1.degree_in(var)) std::swap(r0, r1);
    while (!r1.is_zero()) {
        MPoly r2 = upoly_prem(r0, r1, var);
        if (!r2.is_zero()) {
            MPoly c = content_wrt(r2, var);
            r2 = divide_exact(r2, c);
        }
        r0 = r1;
        r1 = r2;
    }
    if (r0.degree_in(var) == 0) return monic(cont);
    MPoly prim = divide_exact(r0, content_wrt(r0, var));
    return monic(prim * cont);
}

Rat MPoly::rational_content() const {
    if (terms_.empty()) return Rat(1);
    Int num_gcd = 0, den_lcm = 1;
    for (const auto& [e, c] : terms_) {
        mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), c.get_num().get_mpz_t());
        mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), c.get_den().get_mpz_t());
    }
    Rat content(num_gcd, den_lcm);
    content.canonicalize();
    if (leading_coeff() < 0) content = -content;
    return content;
}

Rat MPoly::evaluate(const std::vector<Rat>& point) const {
    assert(static_cast<int>(point.size()) == nvars_);
    Rat out(0);
    for (const auto& [e, c] : terms_) {
        Rat term = c;
        for (int i = 0; i < nvars_; ++i)
            if (e[i] > 0) term *= rat_pow(point[i], e[i]);
        out += term;
    }
    return out;
}

}  // namespace rittkit
