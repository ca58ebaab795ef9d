#pragma once

#include <cstddef>
#include <cstdint>
#include <ostream>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace bibnet {

/// Unit-cost edit distance over Unicode scalar values.
std::size_t levenshtein(std::string_view a, std::string_view b);

/// (|a| + |b| - lev(a, b)) / (|a| + |b|), lengths in scalar values.
/// Throws std::invalid_argument when both strings are empty.
double similarity_ratio(std::string_view a, std::string_view b);

struct SuspectPair {
  std::string name_a;  // name_a < name_b
  std::string name_b;
  double ratio = 0.0;

  bool operator==(const SuspectPair&) const = default;
};

struct SuspectSearch {
  double threshold = 0.8;
  /// Only compare names sharing their first scalar value. Exact within
  /// buckets, misses cross-bucket pairs.
  bool bucket_by_first_letter = false;
};

/// Every unordered pair with ratio >= threshold, sorted by ratio descending
/// and then by (name_a, name_b). Repeated input names are collapsed.
std::vector<SuspectPair> find_suspect_pairs(std::span<const std::string> names,
                                            const SuspectSearch& search = {});

/// Seeded uniform sample of `n` names, in input order.
std::vector<std::string> sample_names(std::span<const std::string> names,
                                      std::size_t n, std::uint64_t seed);

/// name_a,name_b,ratio with the ratio printed to six decimals.
void write_suspect_pairs_csv(std::ostream& out, std::span<const SuspectPair> pairs);

}  // namespace bibnet
