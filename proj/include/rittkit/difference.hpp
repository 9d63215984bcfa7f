#pragma once

#include <optional>
#include <string>
#include <vector>

#include "rittkit/rational.hpp"

namespace rittkit {

// Element of the difference ring (Q[x], sigma) with sigma(x) = -x.
// Dense coefficient vector, trimmed; empty means 0.
class SigmaPoly {
public:
    SigmaPoly() = default;
    explicit SigmaPoly(std::vector<Rat> coeffs);
    static SigmaPoly constant(const Rat& c);
    static SigmaPoly x();

    bool is_zero() const { return coeffs_.empty(); }
    bool is_constant() const { return coeffs_.size() <= 1; }
    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
    const Rat& leading_coeff() const;
    Rat coeff(int i) const;
    const std::vector<Rat>& coeffs() const { return coeffs_; }

    SigmaPoly operator-() const;
    friend SigmaPoly operator+(const SigmaPoly& a, const SigmaPoly& b);
    friend SigmaPoly operator-(const SigmaPoly& a, const SigmaPoly& b);
    friend SigmaPoly operator*(const SigmaPoly& a, const SigmaPoly& b);
    SigmaPoly scaled(const Rat& c) const;
    bool operator==(const SigmaPoly&) const = default;

    Rat evaluate(const Rat& point) const;
    // Quotient and remainder of division by a nonzero polynomial.
    static void divmod(const SigmaPoly& a, const SigmaPoly& b, SigmaPoly& q, SigmaPoly& r);
    bool divides(const SigmaPoly& a) const;

    std::string to_text() const;  // canonical, variable printed as x
    static SigmaPoly parse(const std::string& src);

private:
    void trim();
    std::vector<Rat> coeffs_;  // coeffs_[i] multiplies x^i
};

// sigma: x -> -x (negates odd coefficients); a ring automorphism with
// sigma^2 = id.
SigmaPoly sigma_apply(const SigmaPoly& f);

// c with b = c*a, when a and b are associates.
std::optional<Rat> associate_ratio(const SigmaPoly& a, const SigmaPoly& b);

// Irreducibility over Q at desk scale: rational-root search for degrees
// 2 and 3, quadratic-factor enumeration over scaled integer candidates for
// degree 4.  Throws UnsupportedError beyond degree 4 or for coefficients
// too large to factor by trial division.
bool is_irreducible(const SigmaPoly& q);

// True iff (q) is a transformally prime ideal of (Q[x], sigma): q is
// irreducible and sigma(q) is a unit multiple of q.  Throws
// UnitOrZeroInputError for zero or constant input.
bool is_transformally_prime_principal(const SigmaPoly& q);

// One step of the refutation for square n: a monic linear divisor of
// x^2 - n whose sigma-image forces a nonzero constant into the ideal.
struct FiberRefutationStep {
    SigmaPoly divisor;
    SigmaPoly sigma_image;
    Rat forced_constant;  // divisor + sigma(divisor)
};

// Decision for the fiber of (x - n) under x -> x^2: nonempty with a
// transformally prime witness iff n = 0 or n is not a rational square;
// empty with a refutation trace otherwise.
struct FiberReport {
    Rat n;
    bool nonempty = false;
    std::optional<SigmaPoly> witness;
    Rat square_root;  // meaningful when !nonempty
    std::vector<FiberRefutationStep> refutation;
};
FiberReport fiber_nonempty(const Rat& n);

// Mechanical check that x^2 -> y^e (e odd) admits no difference-ring lift
// of Q[x] into (Q(y), trivial sigma): a lift would be a square root of y^e,
// and squares in Q(y) have even numerator-minus-denominator degree.
struct LiftObstructionReport {
    int exponent = 1;
    bool obstructed = true;
    // When not obstructed (even exponent), a lift image for x.
    std::string lift_image;
    std::vector<std::string> facts;
};
LiftObstructionReport lift_obstruction_demo(int exponent = 1);

}  // namespace rittkit
