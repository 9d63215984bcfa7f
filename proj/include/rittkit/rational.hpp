#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>

#include "rittkit/errors.hpp"

namespace rittkit {

using Int = mpz_class;
using Rat = mpq_class;

// "a" or "a/b", lowest terms, positive denominator.
inline std::string rat_to_string(const Rat& r) {
    if (r.get_den() == 1) return r.get_num().get_str();
    return r.get_num().get_str() + "/" + r.get_den().get_str();
}

inline Rat rat_pow(const Rat& base, unsigned long e) {
    Rat out;
    mpz_pow_ui(mpq_numref(out.get_mpq_t()), mpq_numref(base.get_mpq_t()), e);
    mpz_pow_ui(mpq_denref(out.get_mpq_t()), mpq_denref(base.get_mpq_t()), e);
    return out;
}

inline bool is_perfect_square(const Int& n) {
    if (n < 0) return false;
    return mpz_perfect_square_p(n.get_mpz_t()) != 0;
}

// True iff r = (p/q)^2 for some rational p/q.
inline bool is_rational_square(const Rat& r) {
    if (r < 0) return false;
    return is_perfect_square(r.get_num()) && is_perfect_square(r.get_den());
}

// Exact square root of a rational square; caller checks is_rational_square.
inline Rat rational_sqrt(const Rat& r) {
    Int num, den;
    mpz_sqrt(num.get_mpz_t(), r.get_num().get_mpz_t());
    mpz_sqrt(den.get_mpz_t(), r.get_den().get_mpz_t());
    return Rat(num, den);
}

inline bool is_prime_long(long p) {
    if (p < 2) return false;
    for (long d = 2; d * d <= p; ++d)
        if (p % d == 0) return false;
    return true;
}

// Deterministic PRNG used by randomized harnesses.  Raw mt19937_64 output
// reduced by modulo, so sequences are identical across platforms.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : state_(splitmix(seed)) {}

    std::uint64_t next() {
        // xorshift* step; small, portable, and good enough for sampling.
        std::uint64_t x = state_;
        x ^= x >> 12;
        x ^= x << 25;
        x ^= x >> 27;
        state_ = x;
        return x * 0x2545F4914F6CDD1DULL;
    }

    // Uniform in [lo, hi] (inclusive).
    long uniform(long lo, long hi) {
        return lo + static_cast<long>(next() % static_cast<std::uint64_t>(hi - lo + 1));
    }

    bool one_in(unsigned n) { return next() % n == 0; }

    static std::uint64_t mix(std::uint64_t seed, std::uint64_t stream) {
        return splitmix(seed + 0x9E3779B97F4A7C15ULL * (stream + 1));
    }

private:
    static std::uint64_t splitmix(std::uint64_t z) {
        z += 0x9E3779B97F4A7C15ULL;
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
        z = z ^ (z >> 31);
        return z == 0 ? 0x1234567887654321ULL : z;
    }

    std::uint64_t state_;
};

}  // namespace rittkit
