#pragma once

#include "rittkit/mpoly.hpp"

namespace rittkit {

// Element of Q(t1..tk).  Canonical form: gcd(num, den) = 1 and the
// denominator has coprime integer coefficients with positive leading
// coefficient (graded lex), so equality is identity of representations.
class RatFun {
public:
    explicit RatFun(int nvars = 0)
        : num_(MPoly(nvars)), den_(MPoly::constant(nvars, Rat(1))) {}
    RatFun(MPoly num, MPoly den);

    static RatFun constant(int nvars, const Rat& c) {
        return RatFun(MPoly::constant(nvars, c), MPoly::constant(nvars, Rat(1)));
    }
    static RatFun variable(int nvars, int var) {
        return RatFun(MPoly::variable(nvars, var), MPoly::constant(nvars, Rat(1)));
    }
    static RatFun from_poly(MPoly p) {
        int n = p.nvars();
        return RatFun(std::move(p), MPoly::constant(n, Rat(1)));
    }

    int nvars() const { return num_.nvars(); }
    const MPoly& num() const { return num_; }
    const MPoly& den() const { return den_; }
    bool is_zero() const { return num_.is_zero(); }
    bool is_one() const;
    bool is_constant() const { return num_.is_constant() && den_.is_constant(); }
    Rat constant_value() const { return num_.constant_value() / den_.constant_value(); }

    RatFun operator-() const;
    friend RatFun operator+(const RatFun& a, const RatFun& b);
    friend RatFun operator-(const RatFun& a, const RatFun& b);
    friend RatFun operator*(const RatFun& a, const RatFun& b);
    friend RatFun operator/(const RatFun& a, const RatFun& b);  // throws DivisionByZeroError
    bool operator==(const RatFun& o) const { return num_ == o.num_ && den_ == o.den_; }
    bool operator!=(const RatFun& o) const { return !(*this == o); }

    // d/dt_var by the quotient rule.
    RatFun derivative(int var) const;

private:
    void normalize();

    MPoly num_, den_;
};

}  // namespace rittkit
