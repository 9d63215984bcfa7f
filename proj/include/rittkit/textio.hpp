#pragma once

#include <string>

#include "rittkit/poly.hpp"

namespace rittkit {

// Canonical text rendering.  Terms are printed in descending canonical
// order; a derivative is written d1^2(y1), or with primes when N = 1;
// rationals print as a/b.  parse(print(p)) == p for every polynomial.
std::string to_string(const DiffPoly& p);
std::string to_string(const DiffVar& v, const RingConfig& ring);
std::string to_string(const Monomial& m, const RingConfig& ring);
std::string to_string(const Coeff& c, const CoeffField& field);
std::string to_string(const MPoly& p, const std::vector<std::string>& params);
std::string to_string(const RatFun& f, const std::vector<std::string>& params);

// Parses an expression in the CLI grammar: rationals a/b, variables,
// derivation operators d<i>^<e>(...), '^' powers, explicit '*', prime
// shorthand when N = 1.  Throws SyntaxError / UnknownVariableError /
// DerivationIndexError with a source position.
DiffPoly parse_poly(const std::string& src, const RingPtr& ring);

// Parses a rational function over the given parameter field.
RatFun parse_ratfun(const std::string& src, const CoeffField& field);

// Parses "a" or "a/b".
Rat parse_rat(const std::string& src);

}  // namespace rittkit
