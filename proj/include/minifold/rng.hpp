#ifndef MINIFOLD_RNG_HPP
#define MINIFOLD_RNG_HPP

#include <cstdint>

#include "minifold/rational.hpp"

namespace minifold {

// Deterministic splitmix64 stream; identical seeds give identical reports on
// every platform, which the report schema relies on.
class Rng {
  public:
    explicit Rng(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next() {
        std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ull);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
        return z ^ (z >> 31);
    }

    // Uniform in [lo, hi].
    long range(long lo, long hi) {
        return lo + static_cast<long>(next() % static_cast<std::uint64_t>(hi - lo + 1));
    }

    // Random rational with numerator in [-span, span] and denominator in [1, span].
    Rational rational(long span = 9) {
        return Rational(range(-span, span), range(1, span));
    }

    Rational nonzero_rational(long span = 9) {
        for (;;) {
            Rational r = rational(span);
            if (!r.is_zero()) return r;
        }
    }

  private:
    std::uint64_t state_;
};

}  // namespace minifold

#endif
