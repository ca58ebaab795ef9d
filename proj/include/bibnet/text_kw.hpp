#pragma once

#include <cstddef>
#include <filesystem>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "bibnet/metrics.hpp"
#include "bibnet/record.hpp"

namespace bibnet {

struct StopwordSet {
  std::set<std::string> words;  // lower-case
  std::set<char> punctuation;
  bool include_digits = true;   // drop tokens made of digits and punctuation

  /// Bundled English list with ASCII punctuation and digit filtering.
  static const StopwordSet& english();
  /// One word per line; '#' starts a comment. Punctuation and digit
  /// settings come from the bundled set.
  static StopwordSet load(const std::filesystem::path& path);
};

/// Version tag of the bundled stopword list.
inline constexpr std::string_view kStopwordListVersion = "en-1";

/// Title and abstract joined by a space, lower-cased, split on whitespace,
/// with leading and trailing punctuation stripped from each token.
std::vector<std::string> tokenize(std::string_view title,
                                  std::optional<std::string_view> abstract = std::nullopt);

std::vector<std::string> filter_stopwords(const std::vector<std::string>& tokens,
                                          const StopwordSet& stopwords);

/// Token counts over all records, count descending then token. Throws
/// std::invalid_argument when n < 1.
std::vector<RankedEntry> keyword_frequencies(const Corpus& corpus, const StopwordSet& stopwords,
                                             std::size_t n);

}  // namespace bibnet
