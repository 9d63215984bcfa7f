#pragma once

#include <map>
#include <span>
#include <vector>

#include "rittkit/coeff.hpp"
#include "rittkit/ring.hpp"

namespace rittkit {

// Sparse differential polynomial: a map from monomials in the differential
// variables to nonzero coefficients.  The zero polynomial is the empty map
// and equal polynomials have identical term maps, so equality is identity.
//
// When the ring carries coefficient symbols, polynomials model R{y1..ym}
// with R a differential ring: the leader/initial/separant decomposition
// looks only at main-block variables, and a polynomial mentioning no main
// variable counts as a constant (an element of R).
class DiffPoly {
public:
    using TermMap = std::map<Monomial, Coeff, MonomialGrlexLess>;

    explicit DiffPoly(RingPtr ring) : ring_(std::move(ring)) {}

    static DiffPoly zero(RingPtr ring) { return DiffPoly(std::move(ring)); }
    static DiffPoly constant(RingPtr ring, Coeff c);
    static DiffPoly from_long(RingPtr ring, long n);
    static DiffPoly from_rat(RingPtr ring, const Rat& r);
    static DiffPoly variable(RingPtr ring, const DiffVar& v);
    static DiffPoly monomial_term(RingPtr ring, Monomial m, Coeff c);

    const RingPtr& ring() const { return ring_; }
    const TermMap& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    // No differential variable at all (a field element).
    bool is_field_constant() const;
    // No main-block variable: an element of the coefficient ring R.  For
    // rings without coefficient symbols this is the same as
    // is_field_constant().
    bool is_coefficient_element() const;
    Coeff constant_value() const;  // requires is_field_constant()

    void add_term(const Monomial& m, const Coeff& c);

    DiffPoly operator-() const;
    DiffPoly& operator+=(const DiffPoly& o);
    DiffPoly& operator-=(const DiffPoly& o);
    friend DiffPoly operator+(DiffPoly a, const DiffPoly& b) { return a += b; }
    friend DiffPoly operator-(DiffPoly a, const DiffPoly& b) { return a -= b; }
    friend DiffPoly operator*(const DiffPoly& a, const DiffPoly& b);
    DiffPoly scaled(const Coeff& c) const;
    DiffPoly times_monomial(const Monomial& m, const Coeff& c) const;
    DiffPoly pow(unsigned e) const;
    bool operator==(const DiffPoly& o) const;
    bool operator!=(const DiffPoly& o) const { return !(*this == o); }

    // d_i with 1-based index, per the d1..dN surface syntax.  Throws
    // DerivationIndexError when i is out of range (always, when N = 0).
    DiffPoly derive(int i) const;
    // Applies d1^e1...dN^eN.
    DiffPoly derive_theta(const std::vector<int>& theta) const;

    // Highest-rank main variable; throws ConstantPolynomialError.
    DiffVar leader() const;
    int degree_in(const DiffVar& v) const;
    // Coefficient of v^power (a polynomial free of v).
    DiffPoly coeff_of(const DiffVar& v, int power) const;
    bool mentions(const DiffVar& v) const;
    // All distinct variables occurring, ascending by var_less.
    std::vector<DiffVar> variables() const;

    struct Decomposition;
    // Leader, degree, initial I_f and separant S_f = df/du_f.
    Decomposition initial_separant() const;

    // Terms grouped and sorted for display: descending canonical order.
    std::vector<std::pair<Monomial, Coeff>> sorted_terms_for_print() const;

    // The coefficient (an element of the coefficient ring R, returned in
    // R's own ring view) of the highest main-block monomial.
    DiffPoly designated_leading_coefficient() const;

private:
    void check_ring(const DiffPoly& o) const;

    RingPtr ring_;
    TermMap terms_;
};

struct DiffPoly::Decomposition {
    DiffVar leader;
    int degree = 0;
    DiffPoly initial;
    DiffPoly separant;
};

// Product of S_f * I_f over the given polynomials; throws
// ConstantPolynomialError if any member is constant.
DiffPoly h_product(std::span<const DiffPoly> members);

// Reinterpret a polynomial in another ring with the same derivations and
// field: variables are matched by base name (either block).  Throws
// RingMismatchError when a variable has no counterpart.
DiffPoly repartition(const DiffPoly& p, const RingPtr& target);

}  // namespace rittkit
