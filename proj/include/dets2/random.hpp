#pragma once

#include <cstdint>
#include <random>

#include "dets2/edge_tensor.hpp"

namespace dets2 {

// All randomness in the library flows through this wrapper: mt19937_64 plus
// our own unbiased bounded sampling, so a seed pins the exact stream on every
// platform. Wall-clock seeding is deliberately not offered.
class SeededRng {
public:
    explicit SeededRng(std::uint64_t seed) : g_(seed) {}

    std::uint64_t u64() { return g_(); }

    // uniform in [0, n), rejection sampled
    std::uint64_t below(std::uint64_t n) {
        const std::uint64_t limit = UINT64_MAX - UINT64_MAX % n;
        std::uint64_t x;
        do {
            x = g_();
        } while (x >= limit);
        return x % n;
    }

    // uniform in [lo, hi], inclusive
    std::int64_t int_in(std::int64_t lo, std::int64_t hi) {
        return lo + static_cast<std::int64_t>(below(static_cast<std::uint64_t>(hi - lo) + 1));
    }

private:
    std::mt19937_64 g_;
};

// Small numerators and denominators keep exact eliminations fast.
inline Rational random_scalar(SeededRng& rng, const RationalField&) {
    return Rational(rng.int_in(-9, 9), rng.int_in(1, 9));
}

inline Fp random_scalar(SeededRng& rng, const PrimeField& f) {
    return Fp(rng.below(f.p), f.p);
}

template <class F>
VectorX<typename F::Scalar> random_vector(SeededRng& rng, int d, const F& field) {
    VectorX<typename F::Scalar> v(d);
    for (int r = 0; r < d; ++r) v(r) = random_scalar(rng, field);
    return v;
}

template <class F>
EdgeTensor<typename F::Scalar> random_tensor(SeededRng& rng, int d, const F& field) {
    EdgeTensor<typename F::Scalar> t(d, field);
    for (Edge e : edges(d)) t.set_vec(e, random_vector(rng, d, field));
    return t;
}

} // namespace dets2
