#pragma once

#include <cstdint>

#include "bialg/structure.hpp"

namespace testutil {

/// Deterministic PRNG for property tests (splitmix64).
struct Rng {
    std::uint64_t state;
    explicit Rng(std::uint64_t seed) : state(seed) {}
    std::uint64_t next() {
        std::uint64_t z = (state += 0x9e3779b97f4a7c15ull);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
        return z ^ (z >> 31);
    }
    long range(long lo, long hi) { // inclusive
        return lo + static_cast<long>(next() % static_cast<std::uint64_t>(hi - lo + 1));
    }
};

inline bialg::Rational random_rational(Rng& rng) {
    long num = rng.range(-9, 9);
    long den = rng.range(1, 9);
    return bialg::Rational(num, den);
}

inline bialg::Vec<bialg::Rational> random_vec(Rng& rng, int n) {
    bialg::Vec<bialg::Rational> v({}, n);
    for (int i = 0; i < n; ++i) v[i] = random_rational(rng);
    return v;
}

/// Random invertible matrix with small integer entries (retries until the
/// determinant is nonzero).
inline bialg::Mat<bialg::Rational> random_invertible(Rng& rng, int n) {
    for (;;) {
        bialg::Mat<bialg::Rational> f({}, n, n);
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j)
                f.at(i, j) = bialg::Rational(rng.range(-3, 3));
        if (!bialg::determinant(f).is_zero()) return f;
    }
}

} // namespace testutil
