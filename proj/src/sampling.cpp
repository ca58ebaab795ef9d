#include "bibnet/sampling.hpp"

#include <algorithm>
#include <limits>
#include <numeric>

namespace bibnet {

std::uint64_t bounded_random(std::mt19937_64& rng, std::uint64_t bound) {
  // Rejection sampling on the top of the range keeps the draw unbiased.
  const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() -
                              std::numeric_limits<std::uint64_t>::max() % bound;
  std::uint64_t x = rng();
  while (x >= limit) x = rng();
  return x % bound;
}

std::vector<std::size_t> sample_indices(std::size_t n, std::size_t k, std::uint64_t seed) {
  std::vector<std::size_t> idx(n);
  std::iota(idx.begin(), idx.end(), std::size_t{0});
  if (k >= n) return idx;
  std::mt19937_64 rng(seed);
  for (std::size_t i = 0; i < k; ++i) {
    auto j = i + bounded_random(rng, n - i);
    std::swap(idx[i], idx[j]);
  }
  idx.resize(k);
  std::sort(idx.begin(), idx.end());
  return idx;
}

}  // namespace bibnet
