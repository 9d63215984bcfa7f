#pragma once

#include <map>
#include <string>
#include <vector>

#include "rittkit/poly.hpp"
#include "rittkit/ratfun.hpp"

namespace rittkit {

// Coefficient homomorphism into Q(t1..tk): an image for each coefficient
// symbol of R, extended to derivatives by the derivation rules
// (phi(d_i u) = d/dt_i phi(u)), so it commutes with the derivations by
// construction.
struct Specialization {
    int n_params = 0;
    std::map<std::string, RatFun> images;

    const RatFun& image_of(const std::string& symbol) const;
};

// The codomain ring: same derivations and main variables, coefficients in
// Q(t1..tk), no coefficient symbols left.
RingPtr specialization_target(const RingPtr& ring, int n_params);

// f^phi: applies phi to each coefficient.  Main variables must exist in the
// target; any unmapped coefficient symbol raises SpecializationDomainError.
DiffPoly apply_specialization(const DiffPoly& f, const Specialization& phi, const RingPtr& target);

// Wronskian determinant of rational functions of a single parameter:
// row i holds the (i-1)-st derivatives.  Computed fraction-free: the matrix
// is cleared to polynomial entries, eliminated Bareiss style, and divided
// once at the end.  Throws EmptyInputError / UnsupportedError (k != 1).
RatFun wronskian(const std::vector<RatFun>& fs);

}  // namespace rittkit
