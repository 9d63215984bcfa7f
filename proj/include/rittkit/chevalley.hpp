#pragma once

#include <optional>
#include <string>
#include <vector>

#include "rittkit/funcfield.hpp"
#include "rittkit/reduce.hpp"

namespace rittkit {

// A finitely generated extension S = R{g1..gn} where R = Q{coeff symbols}
// (possibly just Q), given by one relation set per generator: level i works
// in R{g1..g_{i-1}}{g_i}, with A_i an autoreduced set whose leaders are
// derivatives of g_i (empty for a differentially transcendental step), and
// a nonzero target element b = B(g_bar).
class Presentation {
public:
    // base: the coefficient ring R in its own view (its differential
    // generators are the main variables; empty for R = Q).
    Presentation(RingPtr base, std::vector<std::string> generators,
                 std::vector<std::vector<DiffPoly>> relations, DiffPoly target);

    const RingPtr& base_ring() const { return base_; }
    int levels() const { return static_cast<int>(generators_.size()); }
    const std::vector<std::string>& generators() const { return generators_; }
    // Ring of level i (1-based): main variable g_i over R{g1..g_{i-1}}.
    const RingPtr& level_ring(int i) const { return level_rings_[i - 1]; }
    const std::vector<DiffPoly>& relations(int i) const { return relations_[i - 1]; }
    bool transcendental(int i) const { return relations_[i - 1].empty(); }
    // Validated autoreduced set of level i; requires !transcendental(i).
    const AutoreducedSet& relation_set(int i) const;
    const DiffPoly& target() const { return target_; }

private:
    RingPtr base_;
    std::vector<std::string> generators_;
    std::vector<RingPtr> level_rings_;
    std::vector<std::vector<DiffPoly>> relations_;
    std::vector<std::optional<AutoreducedSet>> sets_;
    DiffPoly target_;
};

// Transcendental case: the designated (highest-term) coefficient of B,
// an element of R.  Throws ZeroTargetError on B = 0.
DiffPoly witness_transcendental(const DiffPoly& B);

// Algebraic case surrogate: the product of the designated leading
// coefficients of every I_f and S_f of A and of the remainder of B modulo
// A.  Nonzero by construction; throws ZeroTargetError when B reduces to 0.
DiffPoly witness_algebraic(const AutoreducedSet& A, const DiffPoly& B);

// Composes the per-generator witnesses down the tower, one generator at a
// time, ending with an element of R.
DiffPoly witness_chain(const Presentation& p);

enum class Verdict { Consistent, Inconsistent, Unknown };
const char* verdict_name(Verdict v);

struct ConsistencyVerdict {
    Verdict verdict;
    std::string reason;
};

// Applies phi coefficientwise and runs the Rosenfeld criterion on the
// image: Consistent iff every member keeps its leader and degree (initial
// and separant stay nonzero), the image is autoreduced and coherent, and
// B^phi does not reduce to 0.  Inconsistent when a member collapses to a
// nonzero constant or B^phi reduces to 0; Unknown in the residual cases
// (the criterion is sufficient, not necessary).
ConsistencyVerdict specialize_and_check(const AutoreducedSet& A, const DiffPoly& B,
                                        const Specialization& phi);

struct LiftTrial {
    int index = 0;
    Verdict verdict = Verdict::Unknown;
    std::string reason;
    std::vector<std::pair<std::string, std::string>> phi;  // symbol -> image, rendered
};

struct LiftReport {
    int trials = 0;
    int consistent = 0;
    int inconsistent = 0;
    int unknown = 0;
    long rejected_samples = 0;  // candidate phis with phi(a) = 0
    std::vector<LiftTrial> outcomes;  // sorted by trial index
};

// Randomized lift harness: samples specializations phi into Q(t_bar) with
// small rational-function images, rejects those with phi(a) = 0, and runs
// specialize_and_check(A, B, phi) for each.  Deterministic for a fixed
// seed; trials may run concurrently, results are merged by index.
LiftReport prime_lift_check(const AutoreducedSet& A, const DiffPoly& B, const DiffPoly& a,
                            int trials, std::uint64_t seed, Parallel par = Parallel::Auto);

// Samples one random rational function: numerator zero with probability
// 1/8, otherwise degree <= 2 with coefficients in -3..3; denominator a
// nonzero polynomial of degree <= 2.  Shared with the test harnesses.
RatFun sample_ratfun(Rng& rng, int n_params);

// phi(a) for an element a of R (R's own view), as a rational function.
RatFun specialize_element(const DiffPoly& a, const Specialization& phi);

}  // namespace rittkit
