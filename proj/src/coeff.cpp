#include "rittkit/coeff.hpp"

#include <cassert>
#include <utility>

namespace rittkit {

namespace {

long mod_reduce(long v, long p) {
    long r = v % p;
    return r < 0 ? r + p : r;
}

long mod_inverse(long a, long p) {
    // Extended Euclid; p prime, a not divisible by p.
    long t = 0, new_t = 1, r = p, new_r = mod_reduce(a, p);
    while (new_r != 0) {
        long q = r / new_r;
        t = std::exchange(new_t, t - q * new_t);
        r = std::exchange(new_r, r - q * new_r);
    }
    assert(r == 1);
    return mod_reduce(t, p);
}

long rat_mod_p(const Rat& r, long p) {
    Int num = r.get_num() % p;
    Int den = r.get_den() % p;
    long n = mod_reduce(num.get_si(), p);
    long d = mod_reduce(den.get_si(), p);
    if (d == 0) throw DivisionByZeroError("denominator divisible by the field characteristic");
    return mod_reduce(n * mod_inverse(d, p), p);
}

void check_same_field(const Coeff& a, const Coeff& b) {
    if (a.holds_rat() && b.holds_rat()) return;
    if (a.holds_ratfun() && b.holds_ratfun() &&
        a.as_ratfun().nvars() == b.as_ratfun().nvars())
        return;
    if (a.holds_modp() && b.holds_modp() && a.as_modp().p == b.as_modp().p) return;
    throw RingMismatchError("coefficient field mismatch");
}

}  // namespace

Coeff Coeff::from_rat(const CoeffField& f, const Rat& r) {
    switch (f.kind) {
        case FieldKind::Rationals:
            return Coeff(r);
        case FieldKind::PrimeField:
            return Coeff(ModP{rat_mod_p(r, f.prime), f.prime});
        case FieldKind::RationalFunctions:
            return Coeff(RatFun::constant(f.n_params(), r));
    }
    throw Error("unreachable");
}

Coeff Coeff::mod_p(long value, long p) {
    return Coeff(ModP{mod_reduce(value, p), p});
}

Coeff Coeff::parameter(const CoeffField& f, int var) {
    assert(f.kind == FieldKind::RationalFunctions);
    return Coeff(RatFun::variable(f.n_params(), var));
}

bool Coeff::is_zero() const {
    if (holds_rat()) return as_rat() == 0;
    if (holds_modp()) return as_modp().value == 0;
    return as_ratfun().is_zero();
}

bool Coeff::is_one() const {
    if (holds_rat()) return as_rat() == 1;
    if (holds_modp()) return as_modp().value == 1;
    return as_ratfun().is_one();
}

bool Coeff::matches(const CoeffField& f) const {
    switch (f.kind) {
        case FieldKind::Rationals:
            return holds_rat();
        case FieldKind::PrimeField:
            return holds_modp() && as_modp().p == f.prime;
        case FieldKind::RationalFunctions:
            return holds_ratfun() && as_ratfun().nvars() == f.n_params();
    }
    return false;
}

Coeff operator+(const Coeff& a, const Coeff& b) {
    check_same_field(a, b);
    if (a.holds_rat()) return Coeff::rational(a.as_rat() + b.as_rat());
    if (a.holds_modp())
        return Coeff::mod_p(a.as_modp().value + b.as_modp().value, a.as_modp().p);
    return Coeff::rat_fun(a.as_ratfun() + b.as_ratfun());
}

Coeff operator-(const Coeff& a, const Coeff& b) {
    check_same_field(a, b);
    if (a.holds_rat()) return Coeff::rational(a.as_rat() - b.as_rat());
    if (a.holds_modp())
        return Coeff::mod_p(a.as_modp().value - b.as_modp().value, a.as_modp().p);
    return Coeff::rat_fun(a.as_ratfun() - b.as_ratfun());
}

Coeff operator*(const Coeff& a, const Coeff& b) {
    check_same_field(a, b);
    if (a.holds_rat()) return Coeff::rational(a.as_rat() * b.as_rat());
    if (a.holds_modp())
        return Coeff::mod_p(a.as_modp().value * b.as_modp().value, a.as_modp().p);
    return Coeff::rat_fun(a.as_ratfun() * b.as_ratfun());
}

Coeff operator/(const Coeff& a, const Coeff& b) {
    check_same_field(a, b);
    if (b.is_zero()) throw DivisionByZeroError("division by zero coefficient");
    if (a.holds_rat()) return Coeff::rational(a.as_rat() / b.as_rat());
    if (a.holds_modp())
        return Coeff::mod_p(a.as_modp().value * mod_inverse(b.as_modp().value, a.as_modp().p),
                            a.as_modp().p);
    return Coeff::rat_fun(a.as_ratfun() / b.as_ratfun());
}

Coeff Coeff::operator-() const {
    if (holds_rat()) return Coeff::rational(-as_rat());
    if (holds_modp()) return Coeff::mod_p(-as_modp().value, as_modp().p);
    return Coeff::rat_fun(-as_ratfun());
}

Coeff Coeff::times_int(long n) const {
    if (holds_rat()) return Coeff::rational(as_rat() * n);
    if (holds_modp()) return Coeff::mod_p(as_modp().value * mod_reduce(n, as_modp().p), as_modp().p);
    return Coeff::rat_fun(as_ratfun() * RatFun::constant(as_ratfun().nvars(), Rat(n)));
}

Coeff Coeff::derive(int i) const {
    if (holds_ratfun()) {
        const RatFun& f = as_ratfun();
        if (i < f.nvars()) return Coeff::rat_fun(f.derivative(i));
        return Coeff::rat_fun(RatFun(f.nvars()));
    }
    if (holds_modp()) return Coeff::mod_p(0, as_modp().p);
    return Coeff::rational(Rat(0));
}

}  // namespace rittkit
