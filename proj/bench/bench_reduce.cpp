// Benchmark: serial reference vs OpenMP batch paths for reduction and the
// lift-check harness.  Workloads are random but seeded, and the parallel
// results are checked against the serial ones before timing is reported.

#include <cstring>
#include <iostream>
#include <vector>

#ifdef _OPENMP
#include <omp.h>
#else
#include <chrono>
#endif

#include "rittkit/chevalley.hpp"
#include "rittkit/reduce.hpp"
#include "rittkit/textio.hpp"

using namespace rittkit;

namespace {

double now() {
#ifdef _OPENMP
    return omp_get_wtime();
#else
    return std::chrono::duration<double>(std::chrono::steady_clock::now().time_since_epoch()).count();
#endif
}

DiffPoly random_poly(Rng& rng, const RingPtr& ring, int max_order, int max_degree, int terms) {
    DiffPoly p(ring);
    const int m = static_cast<int>(ring->main_vars().size());
    for (int t = 0; t < terms; ++t) {
        Monomial mono;
        int factors = static_cast<int>(rng.uniform(1, 3));
        for (int f = 0; f < factors; ++f) {
            DiffVar v{VarBlock::Main, static_cast<int>(rng.uniform(0, m - 1)),
                      std::vector<int>(ring->n_derivations(), 0)};
            for (int i = 0; i < ring->n_derivations(); ++i)
                v.exps[i] = static_cast<int>(rng.uniform(0, max_order));
            mono = mono.times(Monomial::power(v, static_cast<int>(rng.uniform(1, max_degree))));
        }
        p.add_term(mono, Coeff::from_long(ring->field(), rng.uniform(-9, 9)));
    }
    return p;
}

}  // namespace

int main(int argc, char** argv) {
    int batch = 400;
    int trials = 400;
    for (int i = 1; i < argc; ++i) {
        if (!std::strcmp(argv[i], "--batch") && i + 1 < argc) batch = std::atoi(argv[++i]);
        if (!std::strcmp(argv[i], "--trials") && i + 1 < argc) trials = std::atoi(argv[++i]);
    }

#ifdef _OPENMP
    std::cout << "OpenMP threads: " << omp_get_max_threads() << "\n";
#else
    std::cout << "built without OpenMP; both paths run serially\n";
#endif

    RingPtr ring = RingConfig::make(2, {"y1", "y2"});
    AutoreducedSet A = AutoreducedSet::make({
        parse_poly("d1(y1)^2 - 4*y1", ring),
        parse_poly("d2(y2) - y1", ring),
    });

    Rng rng(2026);
    std::vector<DiffPoly> gs;
    for (int i = 0; i < batch; ++i) gs.push_back(random_poly(rng, ring, 2, 3, 6));

    double t0 = now();
    auto serial = reduce_batch(gs, A, Parallel::Serial);
    double t1 = now();
    auto parallel = reduce_batch(gs, A, Parallel::Auto);
    double t2 = now();

    bool same = serial.size() == parallel.size();
    for (size_t i = 0; same && i < serial.size(); ++i)
        same = serial[i].remainder == parallel[i].remainder &&
               serial[i].multiplier == parallel[i].multiplier;
    std::cout << "reduce_batch  n=" << batch << "  serial " << (t1 - t0) << "s  parallel "
              << (t2 - t1) << "s  speedup " << (t1 - t0) / (t2 - t1)
              << (same ? "" : "  RESULTS DIFFER") << "\n";

    RingPtr Ru = RingConfig::make(1, {"y"}, CoeffField::rationals(), {"u"});
    AutoreducedSet Au = AutoreducedSet::make({parse_poly("u*y' - 1", Ru)});
    DiffPoly B = parse_poly("y'", Ru);
    DiffPoly a = parse_poly("u^2", Ru->coefficient_ring());

    double t3 = now();
    LiftReport r1 = prime_lift_check(Au, B, a, trials, 42, Parallel::Serial);
    double t4 = now();
    LiftReport r2 = prime_lift_check(Au, B, a, trials, 42, Parallel::Auto);
    double t5 = now();

    bool lift_same = r1.consistent == r2.consistent && r1.inconsistent == r2.inconsistent &&
                     r1.unknown == r2.unknown;
    std::cout << "lift_check    n=" << trials << "  serial " << (t4 - t3) << "s  parallel "
              << (t5 - t4) << "s  speedup " << (t4 - t3) / (t5 - t4)
              << (lift_same ? "" : "  RESULTS DIFFER") << "\n";
    return same && lift_same ? 0 : 1;
}
