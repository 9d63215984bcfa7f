#include "rittkit/difference.hpp"

#include <algorithm>
#include <cassert>

#include "rittkit/poly.hpp"
#include "rittkit/textio.hpp"

namespace rittkit {

SigmaPoly::SigmaPoly(std::vector<Rat> coeffs) : coeffs_(std::move(coeffs)) {
    trim();
}

SigmaPoly SigmaPoly::constant(const Rat& c) {
    SigmaPoly p;
    if (c != 0) p.coeffs_.push_back(c);
    return p;
}

SigmaPoly SigmaPoly::x() {
    SigmaPoly p;
    p.coeffs_ = {Rat(0), Rat(1)};
    return p;
}

void SigmaPoly::trim() {
    while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

const Rat& SigmaPoly::leading_coeff() const {
    assert(!coeffs_.empty());
    return coeffs_.back();
}

Rat SigmaPoly::coeff(int i) const {
    if (i < 0 || i >= static_cast<int>(coeffs_.size())) return Rat(0);
    return coeffs_[i];
}

SigmaPoly SigmaPoly::operator-() const {
    SigmaPoly out = *this;
    for (Rat& c : out.coeffs_) c = -c;
    return out;
}

SigmaPoly operator+(const SigmaPoly& a, const SigmaPoly& b) {
    std::vector<Rat> c(std::max(a.coeffs_.size(), b.coeffs_.size()), Rat(0));
    for (size_t i = 0; i < a.coeffs_.size(); ++i) c[i] += a.coeffs_[i];
    for (size_t i = 0; i < b.coeffs_.size(); ++i) c[i] += b.coeffs_[i];
    return SigmaPoly(std::move(c));
}

SigmaPoly operator-(const SigmaPoly& a, const SigmaPoly& b) {
    return a + (-b);
}

SigmaPoly operator*(const SigmaPoly& a, const SigmaPoly& b) {
    if (a.is_zero() || b.is_zero()) return SigmaPoly();
    std::vector<Rat> c(a.coeffs_.size() + b.coeffs_.size() - 1, Rat(0));
    for (size_t i = 0; i < a.coeffs_.size(); ++i)
        for (size_t j = 0; j < b.coeffs_.size(); ++j) c[i + j] += a.coeffs_[i] * b.coeffs_[j];
    return SigmaPoly(std::move(c));
}

SigmaPoly SigmaPoly::scaled(const Rat& c) const {
    if (c == 0) return SigmaPoly();
    SigmaPoly out = *this;
    for (Rat& k : out.coeffs_) k *= c;
    return out;
}

Rat SigmaPoly::evaluate(const Rat& point) const {
    Rat out(0);
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) out = out * point + *it;
    return out;
}

void SigmaPoly::divmod(const SigmaPoly& a, const SigmaPoly& b, SigmaPoly& q, SigmaPoly& r) {
    if (b.is_zero()) throw DivisionByZeroError("division by the zero polynomial");
    q = SigmaPoly();
    r = a;
    while (!r.is_zero() && r.degree() >= b.degree()) {
        int shift = r.degree() - b.degree();
        Rat c = r.leading_coeff() / b.leading_coeff();
        std::vector<Rat> t(shift + 1, Rat(0));
        t[shift] = c;
        SigmaPoly term(std::move(t));
        q = q + term;
        r = r - term * b;
    }
}

bool SigmaPoly::divides(const SigmaPoly& a) const {
    SigmaPoly q, r;
    divmod(a, *this, q, r);
    return r.is_zero();
}

std::string SigmaPoly::to_text() const {
    RingPtr ring = RingConfig::make(0, {"x"}, CoeffField::rationals());
    DiffVar x = *ring->find_var("x");
    DiffPoly p(ring);
    for (size_t i = 0; i < coeffs_.size(); ++i)
        p.add_term(Monomial::power(x, static_cast<int>(i)), Coeff::rational(coeffs_[i]));
    return to_string(p);
}

SigmaPoly SigmaPoly::parse(const std::string& src) {
    RingPtr ring = RingConfig::make(0, {"x"}, CoeffField::rationals());
    DiffPoly p = parse_poly(src, ring);
    DiffVar x = *ring->find_var("x");
    std::vector<Rat> coeffs(p.degree_in(x) + 1, Rat(0));
    for (const auto& [m, c] : p.terms()) coeffs[m.degree_in(x)] = c.as_rat();
    return SigmaPoly(std::move(coeffs));
}

SigmaPoly sigma_apply(const SigmaPoly& f) {
    std::vector<Rat> c = f.coeffs();
    for (size_t i = 1; i < c.size(); i += 2) c[i] = -c[i];
    return SigmaPoly(std::move(c));
}

std::optional<Rat> associate_ratio(const SigmaPoly& a, const SigmaPoly& b) {
    if (a.is_zero() || b.is_zero()) return a.is_zero() == b.is_zero() ? std::optional<Rat>(Rat(1)) : std::nullopt;
    if (a.degree() != b.degree()) return std::nullopt;
    Rat c = b.leading_coeff() / a.leading_coeff();
    if (a.scaled(c) == b) return c;
    return std::nullopt;
}

namespace {

// Scale to a primitive integer polynomial with positive leading coefficient.
std::vector<Int> primitive_integer_coeffs(const SigmaPoly& p) {
    Int lcm_den = 1;
    for (const Rat& c : p.coeffs())
        mpz_lcm(lcm_den.get_mpz_t(), lcm_den.get_mpz_t(), c.get_den().get_mpz_t());
    std::vector<Int> out;
    Int gcd_num = 0;
    for (const Rat& c : p.coeffs()) {
        Rat scaled = c * lcm_den;
        assert(scaled.get_den() == 1);
        out.push_back(scaled.get_num());
        mpz_gcd(gcd_num.get_mpz_t(), gcd_num.get_mpz_t(), out.back().get_mpz_t());
    }
    if (out.back() < 0) gcd_num = -gcd_num;
    for (Int& c : out) c /= gcd_num;
    return out;
}

long to_long_checked(const Int& n) {
    if (!n.fits_slong_p())
        throw UnsupportedError("coefficients too large for desk-scale factorization");
    return n.get_si();
}

std::vector<long> divisors_of(long n) {
    n = std::abs(n);
    assert(n > 0);
    if (n > 4000000000000L)
        throw UnsupportedError("coefficients too large for desk-scale factorization");
    std::vector<long> small, big;
    for (long d = 1; d * d <= n; ++d) {
        if (n % d == 0) {
            small.push_back(d);
            if (d != n / d) big.push_back(n / d);
        }
    }
    small.insert(small.end(), big.rbegin(), big.rend());
    return small;
}

bool has_rational_root(const SigmaPoly& p, const std::vector<Int>& zc) {
    if (p.coeff(0) == 0) return true;  // root 0
    long a0 = to_long_checked(zc.front());
    long lead = to_long_checked(zc.back());
    for (long r : divisors_of(a0)) {
        for (long s : divisors_of(lead)) {
            Rat cand(r, s);
            cand.canonicalize();
            if (p.evaluate(cand) == 0 || p.evaluate(-cand) == 0) return true;
        }
    }
    return false;
}

// Does a primitive integer quartic split into two integer quadratics
// (p x^2 + q x + r)(s x^2 + t x + u)?  Leading and constant coefficients
// are enumerated over divisors; q and t then solve a linear (or, in the
// degenerate case, quadratic) system.
bool quartic_splits_in_quadratics(const std::vector<Int>& z) {
    const Int &a = z[4], &b = z[3], &c = z[2], &d = z[1], &e = z[0];
    assert(e != 0);  // zero constant term means a rational root, handled earlier
    auto check = [&](const Int& p, const Int& q, const Int& r, const Int& s, const Int& t,
                     const Int& u) {
        return p * t + q * s == b && p * u + q * t + r * s == c && q * u + r * t == d;
    };
    for (long pl : divisors_of(to_long_checked(a))) {
        Int p(pl);
        Int s = a / p;  // both positive: a > 0 after normalization
        for (long rl : divisors_of(to_long_checked(e))) {
            for (int sign = 0; sign < 2; ++sign) {
                Int r(sign ? -rl : rl);
                Int u = e / r;
                // Solve s*q + p*t = b, u*q + r*t = d for integers q, t.
                Int det = s * r - p * u;
                if (det != 0) {
                    Int qn = b * r - p * d;
                    Int tn = s * d - b * u;
                    if (qn % det != 0 || tn % det != 0) continue;
                    if (check(p, qn / det, r, s, tn / det, u)) return true;
                } else {
                    // The linear equations are proportional; they are
                    // consistent only when b*r = d*p, and the middle
                    // coefficient then gives s*q^2 - b*q + p*M = 0 with
                    // M = c - p*u - r*s.
                    if (b * r != d * p) continue;
                    Int M = c - p * u - r * s;
                    Int D = b * b - 4 * s * p * M;
                    if (D < 0 || !is_perfect_square(D)) continue;
                    Int sq;
                    mpz_sqrt(sq.get_mpz_t(), D.get_mpz_t());
                    for (int root_sign = 0; root_sign < 2; ++root_sign) {
                        Int num = root_sign ? Int(b - sq) : Int(b + sq);
                        Int den = 2 * s;
                        if (num % den != 0) continue;
                        Int q = num / den;
                        Int tnum = b - s * q;
                        if (tnum % p != 0) continue;
                        if (check(p, q, r, s, tnum / p, u)) return true;
                    }
                }
            }
        }
    }
    return false;
}

}  // namespace

bool is_irreducible(const SigmaPoly& q) {
    int deg = q.degree();
    assert(deg >= 1);
    if (deg == 1) return true;
    if (deg > 4) throw UnsupportedError("irreducibility test supports degree <= 4");
    std::vector<Int> z = primitive_integer_coeffs(q);
    if (has_rational_root(q, z)) return false;
    if (deg <= 3) return true;
    return !quartic_splits_in_quadratics(z);
}

bool is_transformally_prime_principal(const SigmaPoly& q) {
    if (q.is_zero() || q.is_constant())
        throw UnitOrZeroInputError("input must be a nonzero nonunit");
    if (!is_irreducible(q)) return false;
    return associate_ratio(q, sigma_apply(q)).has_value();
}

FiberReport fiber_nonempty(const Rat& n) {
    FiberReport rep;
    rep.n = n;
    if (n == 0) {
        rep.nonempty = true;
        rep.witness = SigmaPoly::x();
        assert(is_transformally_prime_principal(*rep.witness));
        return rep;
    }
    if (!is_rational_square(n)) {
        // x^2 - n: irreducible (n is not a square) and sigma-even.
        rep.nonempty = true;
        rep.witness = SigmaPoly({-n, Rat(0), Rat(1)});
        assert(is_transformally_prime_principal(*rep.witness));
        return rep;
    }
    // n = m^2: a transformally prime ideal over (x - n) would contain a
    // monic linear divisor of x^2 - n, and sigma-stability then forces the
    // nonzero constant d + sigma(d) into it.
    Rat m = rational_sqrt(n);
    rep.nonempty = false;
    rep.square_root = m;
    for (const Rat& root : {m, Rat(-m)}) {
        SigmaPoly d({-root, Rat(1)});  // x - root
        SigmaPoly s = sigma_apply(d);
        SigmaPoly sum = d + s;
        assert(sum.is_constant() && !sum.is_zero());
        rep.refutation.push_back(FiberRefutationStep{d, s, sum.coeff(0)});
    }
    return rep;
}

LiftObstructionReport lift_obstruction_demo(int exponent) {
    if (exponent < 1) throw Error("exponent must be positive");
    LiftObstructionReport rep;
    rep.exponent = exponent;
    std::string target = exponent == 1 ? "y" : "y^" + std::to_string(exponent);
    rep.facts.push_back("R = Q[x^2] embeds in S = Q[x] with sigma(x) = -x; sigma is trivial on R");
    rep.facts.push_back("phi maps R into the difference field (Q(y), trivial sigma) by x^2 -> " + target);
    rep.facts.push_back("any ring homomorphism psi: S -> Q(y) extending phi satisfies psi(x)^2 = " + target);
    if (exponent % 2 == 0) {
        rep.obstructed = false;
        rep.lift_image = exponent == 2 ? "y" : "y^" + std::to_string(exponent / 2);
        rep.facts.push_back(target + " is a square in Q(y): x -> " + rep.lift_image + " is a lift");
        return rep;
    }
    rep.obstructed = true;
    // Parity argument, checked on the degree ledger: for reduced f = p/q,
    // deg(f^2) = 2*deg(p) - 2*deg(q) is even, while deg(y^e) = e is odd.
    rep.facts.push_back("for reduced f = p/q in Q(y), f^2 has numerator degree 2*deg(p) (even) and denominator degree 2*deg(q) (even)");
    rep.facts.push_back("deg(" + target + ") = " + std::to_string(exponent) +
                        " is odd, so f^2 = " + target + " is impossible: " + target +
                        " has no square root in Q(y)");
    for (int dp = 0; dp <= 3; ++dp)
        for (int dq = 0; dq <= 3; ++dq)
            if (2 * dp - 2 * dq == exponent)
                rep.facts.push_back("unexpected: parity check failed");
    rep.facts.push_back("degree parity checked for all numerator/denominator degrees up to 3");
    rep.facts.push_back("no homomorphism psi: S -> Q(y) lifts phi");
    return rep;
}

}  // namespace rittkit
