#pragma once

#include <compare>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "rittkit/errors.hpp"
#include "rittkit/rational.hpp"

namespace rittkit {

enum class FieldKind { Rationals, PrimeField, RationalFunctions };

// Coefficient field of a differential polynomial ring: Q, F_p, or Q(t1..tk).
// For Q(t1..tk) the derivations act on the parameters by d_i(t_j) = [i == j].
struct CoeffField {
    FieldKind kind = FieldKind::Rationals;
    long prime = 0;                   // PrimeField only
    std::vector<std::string> params;  // RationalFunctions only

    static CoeffField rationals() { return {}; }
    static CoeffField prime_field(long p);
    static CoeffField rational_functions(int k);

    long characteristic() const { return kind == FieldKind::PrimeField ? prime : 0; }
    int n_params() const { return static_cast<int>(params.size()); }
    std::optional<int> param_index(const std::string& name) const;
    bool operator==(const CoeffField&) const = default;
};

// Main variables carry the elimination machinery; coefficient-block
// variables are the differential generators of the coefficient ring R and
// rank below every main variable.
enum class VarBlock : unsigned char { Coefficient = 0, Main = 1 };

// A derivative d1^e1...dN^eN applied to a base variable.
struct DiffVar {
    VarBlock block = VarBlock::Main;
    int var = 0;            // index into the block's name table
    std::vector<int> exps;  // length N; all zero = the base variable itself

    int order() const;
    bool is_derivative_of(const DiffVar& o) const;         // componentwise >=, same variable
    bool is_proper_derivative_of(const DiffVar& o) const;  // and not equal
    DiffVar derived(int i) const;                          // bump exps[i] (0-based)

    bool operator==(const DiffVar&) const = default;
};

// (total order, variable index, exponents), compared lexicographically.
struct Rank {
    int total_order = 0;
    int var_index = 0;
    std::vector<int> exps;

    auto operator<=>(const Rank&) const = default;
};

Rank rank_of(const DiffVar& v);

// Total order on differential variables: coefficient block below main
// block, rank order within a block.
bool var_less(const DiffVar& a, const DiffVar& b);

class RingConfig;
using RingPtr = std::shared_ptr<const RingConfig>;

class RingConfig {
public:
    // Throws Error on invalid input (duplicate/empty/reserved names,
    // non-prime modulus, negative N).
    RingConfig(int n_derivations, std::vector<std::string> main_vars, CoeffField field,
               std::vector<std::string> coeff_vars = {});

    static RingPtr make(int n_derivations, std::vector<std::string> main_vars,
                        CoeffField field = CoeffField::rationals(),
                        std::vector<std::string> coeff_vars = {});

    int n_derivations() const { return n_derivations_; }
    const CoeffField& field() const { return field_; }
    const std::vector<std::string>& main_vars() const { return main_vars_; }
    const std::vector<std::string>& coeff_vars() const { return coeff_vars_; }
    const std::vector<std::string>& block_names(VarBlock b) const {
        return b == VarBlock::Main ? main_vars_ : coeff_vars_;
    }

    const std::string& base_name(const DiffVar& v) const;
    std::optional<DiffVar> find_var(const std::string& name) const;

    // The coefficient ring R viewed as a ring in its own right: the
    // coefficient symbols become the main variables.
    RingPtr coefficient_ring() const;
    // R{new_vars}: this ring's variables all move to the coefficient block.
    RingPtr extension(std::vector<std::string> new_main_vars) const;

    bool operator==(const RingConfig&) const = default;

private:
    int n_derivations_;
    std::vector<std::string> main_vars_;
    std::vector<std::string> coeff_vars_;
    CoeffField field_;
};

inline bool same_ring(const RingPtr& a, const RingPtr& b) {
    return a == b || (a && b && *a == *b);
}

// Product of differential variables with positive exponents, sorted
// ascending by var_less.
class Monomial {
public:
    using Factor = std::pair<DiffVar, int>;

    Monomial() = default;
    static Monomial one() { return {}; }
    static Monomial power(const DiffVar& v, int e);

    bool is_one() const { return factors_.empty(); }
    const std::vector<Factor>& factors() const { return factors_; }
    int total_degree() const;
    int degree_in(const DiffVar& v) const;
    bool contains(const DiffVar& v) const { return degree_in(v) > 0; }
    // Highest variable, or nullptr for the empty monomial.
    const DiffVar* top_var() const;
    // Highest main-block variable, or nullptr.
    const DiffVar* top_main_var() const;
    bool has_main_var() const { return top_main_var() != nullptr; }

    Monomial times(const Monomial& o) const;
    // Remove v^e (requires degree_in(v) >= e).
    Monomial without(const DiffVar& v, int e) const;
    // True iff every exponent of *this is <= the matching exponent of m.
    bool divides(const Monomial& m) const;
    // m / *this (requires divides(m)).
    Monomial divide_into(const Monomial& m) const;

    bool operator==(const Monomial&) const = default;

private:
    std::vector<Factor> factors_;
};

// Graded-lex order used internally (term maps, exact division).
bool monomial_grlex_less(const Monomial& a, const Monomial& b);
// Canonical display order: highest-rank variable, then total degree, then
// a varwise lex tiebreak.
bool monomial_print_less(const Monomial& a, const Monomial& b);

struct MonomialGrlexLess {
    bool operator()(const Monomial& a, const Monomial& b) const { return monomial_grlex_less(a, b); }
};

}  // namespace rittkit
