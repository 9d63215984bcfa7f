#pragma once

#include <variant>

#include "rittkit/ratfun.hpp"
#include "rittkit/ring.hpp"

namespace rittkit {

// A value in the coefficient field of a ring: a rational, a residue mod p,
// or a rational function in the field parameters.
class Coeff {
public:
    struct ModP {
        long value;  // canonical residue 0..p-1
        long p;
        bool operator==(const ModP&) const = default;
    };

    Coeff() : v_(Rat(0)) {}

    static Coeff zero(const CoeffField& f) { return from_long(f, 0); }
    static Coeff one(const CoeffField& f) { return from_long(f, 1); }
    static Coeff from_long(const CoeffField& f, long n) { return from_rat(f, Rat(n)); }
    static Coeff from_rat(const CoeffField& f, const Rat& r);
    static Coeff rational(Rat r) { return Coeff(std::move(r)); }
    static Coeff mod_p(long value, long p);
    static Coeff rat_fun(RatFun f) { return Coeff(std::move(f)); }
    // The field parameter t_{var+1} as a coefficient.
    static Coeff parameter(const CoeffField& f, int var);

    bool is_zero() const;
    bool is_one() const;
    bool matches(const CoeffField& f) const;

    const Rat& as_rat() const { return std::get<Rat>(v_); }
    const RatFun& as_ratfun() const { return std::get<RatFun>(v_); }
    const ModP& as_modp() const { return std::get<ModP>(v_); }
    bool holds_rat() const { return std::holds_alternative<Rat>(v_); }
    bool holds_ratfun() const { return std::holds_alternative<RatFun>(v_); }
    bool holds_modp() const { return std::holds_alternative<ModP>(v_); }

    friend Coeff operator+(const Coeff& a, const Coeff& b);
    friend Coeff operator-(const Coeff& a, const Coeff& b);
    friend Coeff operator*(const Coeff& a, const Coeff& b);
    friend Coeff operator/(const Coeff& a, const Coeff& b);  // throws DivisionByZeroError
    Coeff operator-() const;
    // Multiplication by an integer (used by the Leibniz rule and separants;
    // may vanish in positive characteristic).
    Coeff times_int(long n) const;

    // Derivation d_i on the coefficient field (0-based index); zero on Q
    // and F_p, d/dt_i on rational functions.
    Coeff derive(int i) const;

    bool operator==(const Coeff&) const = default;

private:
    explicit Coeff(Rat r) : v_(std::move(r)) {}
    explicit Coeff(RatFun f) : v_(std::move(f)) {}
    explicit Coeff(ModP m) : v_(m) {}

    std::variant<Rat, ModP, RatFun> v_;
};

}  // namespace rittkit
