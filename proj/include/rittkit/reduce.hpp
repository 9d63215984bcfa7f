#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "rittkit/poly.hpp"

namespace rittkit {

// Whether batch operations may fan out over OpenMP.  Results are identical
// either way; the serial path is the reference the parallel one is tested
// against.
enum class Parallel { Serial, Auto };

// Ordered set of pairwise-reduced polynomials with distinct leaders,
// carrying the cached leaders, initials, separants and H_A.
class AutoreducedSet {
public:
    // Validates and sorts ascending by leader rank; throws Error with the
    // violation message (see check_autoreduced for a non-throwing probe).
    static AutoreducedSet make(std::vector<DiffPoly> members);

    const RingPtr& ring() const { return ring_; }
    int size() const { return static_cast<int>(members_.size()); }
    const std::vector<DiffPoly>& members() const { return members_; }
    const DiffPoly& member(int i) const { return members_[i]; }
    const DiffVar& leader(int i) const { return leaders_[i]; }
    int leader_degree(int i) const { return degrees_[i]; }
    const DiffPoly& initial(int i) const { return initials_[i]; }
    const DiffPoly& separant(int i) const { return separants_[i]; }
    const DiffPoly& h_poly() const { return h_; }

private:
    AutoreducedSet() = default;

    RingPtr ring_;
    std::vector<DiffPoly> members_;
    std::vector<DiffVar> leaders_;
    std::vector<int> degrees_;
    std::vector<DiffPoly> initials_;
    std::vector<DiffPoly> separants_;
    DiffPoly h_ = DiffPoly(nullptr);
};

// Validity gate: reports the first violated autoreducedness condition
// instead of throwing.  i/j identify the offending member or pair.
struct AutoreducedCheck {
    bool ok = true;
    std::string reason;
    int i = -1;
    int j = -1;
};
AutoreducedCheck check_autoreduced(const std::vector<DiffPoly>& members);

// Derivative operator key: member index plus the theta exponent vector.
struct QuotientKey {
    int member;
    std::vector<int> theta;
    auto operator<=>(const QuotientKey&) const = default;
};

// Witness of the exact identity  multiplier * g = sum q_(f,theta) * theta(f) + r.
// The multiplier is the literal product of the initial/separant factors the
// reduction used; h_exponent counts those factors, so H_A^h_exponent is the
// loose bound the multiplier divides.
struct ReductionCertificate {
    int h_exponent = 0;
    DiffPoly multiplier;
    std::map<QuotientKey, DiffPoly> quotients;
    DiffPoly remainder;

    explicit ReductionCertificate(RingPtr ring)
        : multiplier(DiffPoly::from_long(ring, 1)), remainder(DiffPoly(std::move(ring))) {}
};

// Exact division in the polynomial ring: sets q and returns true when b
// divides a.
bool try_exact_divide(const DiffPoly& a, const DiffPoly& b, DiffPoly& q);

// True iff g is fully reduced with respect to A: no proper derivative of a
// leader occurs and the degree in each leader is below that member's.
bool is_reduced_against(const DiffPoly& g, const AutoreducedSet& A);

// Ritt reduction.  Offending variables are eliminated highest rank first;
// proper derivatives of leaders are removed entirely (via theta(f), degree
// one in the offender), then leader degrees are pushed below the member's
// by pseudo-division.  A step divides exactly by a non-constant initial or
// separant when possible and otherwise multiplies, recording the factor.
// Deterministic; throws UnsupportedCharacteristicError over F_p.
ReductionCertificate full_reduce(const DiffPoly& g, const AutoreducedSet& A);

// Re-expands the certificate identity; used by tests and debug builds.
bool certificate_valid(const DiffPoly& g, const AutoreducedSet& A, const ReductionCertificate& c);

std::vector<ReductionCertificate> reduce_batch(const std::vector<DiffPoly>& gs,
                                               const AutoreducedSet& A,
                                               Parallel par = Parallel::Auto);

// Ritt's characteristic-set iteration.  unit_ideal is set when a nonzero
// constant (or coefficient-ring element) turns up; otherwise set holds an
// autoreduced set against which every input reduces to zero.
struct CharsetResult {
    bool unit_ideal = false;
    std::optional<AutoreducedSet> set;
};
CharsetResult characteristic_set(const std::vector<DiffPoly>& inputs, Parallel par = Parallel::Auto);

// certified == true means remainder zero: a sound certificate that
// g lies in [A] : H_A^infinity.  Otherwise the nonzero remainder certifies
// g outside the ideal only under the caller's hypothesis that A is the
// characteristic set of a prime ideal meeting the coefficient ring in 0.
struct MembershipResult {
    bool certified;
    ReductionCertificate certificate;
};
MembershipResult membership(const DiffPoly& g, const AutoreducedSet& A);

// One Rosenfeld pair: leaders with a least common derivative that is
// proper for both sides.
struct DeltaPairTrace {
    int i, j;
    DiffVar common_derivative;
    DiffPoly delta;
    DiffPoly remainder;
};
struct CoherenceReport {
    bool coherent = true;
    std::vector<DeltaPairTrace> pairs;
};
CoherenceReport coherence_check(const AutoreducedSet& A);

}  // namespace rittkit
