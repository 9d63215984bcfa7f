#pragma once

#include <map>
#include <string>
#include <vector>

#include "rittkit/rational.hpp"

namespace rittkit {

// Sparse multivariate polynomial over Q in a fixed number of parameters
// t1..tk.  Exponent vectors always have length nvars().  Terms are kept in
// graded-lex order (t1 > t2 > ... within a degree block) and never store a
// zero coefficient, so equal polynomials have identical term maps.
class MPoly {
public:
    using Exps = std::vector<int>;

    struct GrlexLess {
        bool operator()(const Exps& a, const Exps& b) const;
    };

    using TermMap = std::map<Exps, Rat, GrlexLess>;

    explicit MPoly(int nvars = 0) : nvars_(nvars) {}

    static MPoly constant(int nvars, const Rat& c);
    static MPoly variable(int nvars, int var);

    int nvars() const { return nvars_; }
    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const;
    // Constant term; only meaningful together with is_constant().
    Rat constant_value() const;

    const TermMap& terms() const { return terms_; }
    int total_degree() const;
    int degree_in(int var) const;

    // Adds c * t^e, merging with an existing term.
    void add_term(const Exps& e, const Rat& c);

    MPoly operator-() const;
    MPoly& operator+=(const MPoly& o);
    MPoly& operator-=(const MPoly& o);
    friend MPoly operator+(MPoly a, const MPoly& b) { return a += b; }
    friend MPoly operator-(MPoly a, const MPoly& b) { return a -= b; }
    friend MPoly operator*(const MPoly& a, const MPoly& b);
    bool operator==(const MPoly& o) const { return nvars_ == o.nvars_ && terms_ == o.terms_; }
    bool operator!=(const MPoly& o) const { return !(*this == o); }

    MPoly scaled(const Rat& c) const;
    MPoly pow(unsigned e) const;

    // d/dt_var
    MPoly derivative(int var) const;

    // Leading term under graded lex.
    const Exps& leading_exps() const;
    const Rat& leading_coeff() const;

    // Exact division: returns true and sets q when b divides a.
    static bool try_divide(const MPoly& a, const MPoly& b, MPoly& q);

    // GCD, normalized monic (leading coefficient 1); gcd(0,0) = 0.
    static MPoly gcd(const MPoly& a, const MPoly& b);

    // The rational c such that (*this)/c has coprime integer coefficients
    // and a positive leading coefficient.
    Rat rational_content() const;

    Rat evaluate(const std::vector<Rat>& point) const;

private:
    int nvars_;
    TermMap terms_;
};

}  // namespace rittkit
