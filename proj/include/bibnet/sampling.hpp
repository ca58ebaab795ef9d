#pragma once

#include <cstddef>
#include <cstdint>
#include <random>
#include <vector>

namespace bibnet {

/// Uniform integer in [0, bound) without the implementation-defined behaviour
/// of std::uniform_int_distribution, so seeded runs agree across toolchains.
std::uint64_t bounded_random(std::mt19937_64& rng, std::uint64_t bound);

/// k distinct indices drawn uniformly from [0, n), returned in ascending
/// order. k >= n returns every index.
std::vector<std::size_t> sample_indices(std::size_t n, std::size_t k,
                                        std::uint64_t seed);

}  // namespace bibnet
