#include "rittkit/ratfun.hpp"

#include <cassert>

#include "rittkit/errors.hpp"

namespace rittkit {

RatFun::RatFun(MPoly num, MPoly den) : num_(std::move(num)), den_(std::move(den)) {
    if (den_.is_zero()) throw DivisionByZeroError("zero denominator");
    normalize();
}

void RatFun::normalize() {
    if (num_.is_zero()) {
        den_ = MPoly::constant(num_.nvars(), Rat(1));
        return;
    }
    MPoly g = MPoly::gcd(num_, den_);
    if (!g.is_constant()) {
        MPoly q(num_.nvars());
        bool ok = MPoly::try_divide(num_, g, q);
        assert(ok);
        num_ = q;
        ok = MPoly::try_divide(den_, g, q);
        assert(ok);
        (void)ok;
        den_ = q;
    }
    Rat c = den_.rational_content();
    num_ = num_.scaled(Rat(1) / c);
    den_ = den_.scaled(Rat(1) / c);
}

bool RatFun::is_one() const {
    return num_.is_constant() && den_.is_constant() && !num_.is_zero() &&
           num_.constant_value() == den_.constant_value();
}

RatFun RatFun::operator-() const {
    RatFun out(nvars());
    out.num_ = -num_;
    out.den_ = den_;
    out.normalize();
    return out;
}

RatFun operator+(const RatFun& a, const RatFun& b) {
    return RatFun(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
}

RatFun operator-(const RatFun& a, const RatFun& b) {
    return RatFun(a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_);
}

RatFun operator*(const RatFun& a, const RatFun& b) {
    return RatFun(a.num_ * b.num_, a.den_ * b.den_);
}

RatFun operator/(const RatFun& a, const RatFun& b) {
    if (b.is_zero()) throw DivisionByZeroError("division by zero rational function");
    return RatFun(a.num_ * b.den_, a.den_ * b.num_);
}

RatFun RatFun::derivative(int var) const {
    // (n/d)' = (n'd - nd')/d^2
    MPoly n = num_.derivative(var) * den_ - num_ * den_.derivative(var);
    return RatFun(std::move(n), den_ * den_);
}

}  // namespace rittkit
