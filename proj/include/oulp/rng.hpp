#pragma once

#include "oulp/types.hpp"

#include <cmath>
#include <cstdint>
#include <initializer_list>
#include <random>
#include <vector>

namespace oulp {

using Rng = std::mt19937_64;

// Independent stream keyed by the master seed and any number of shard coordinates.
inline Rng make_rng(std::uint64_t seed, std::initializer_list<std::uint64_t> keys = {})
{
    std::vector<std::uint32_t> words;
    auto push = [&](std::uint64_t v) {
        words.push_back(static_cast<std::uint32_t>(v));
        words.push_back(static_cast<std::uint32_t>(v >> 32));
    };
    push(seed);
    for (auto k : keys)
        push(k);
    std::seed_seq seq(words.begin(), words.end());
    return Rng(seq);
}

// Circularly-symmetric complex Gaussian with E|z|^2 = variance.
inline cdouble complex_gaussian(Rng& rng, double variance)
{
    std::normal_distribution<double> n(0.0, std::sqrt(variance / 2.0));
    double re = n(rng);
    double im = n(rng);
    return {re, im};
}

} // namespace oulp
