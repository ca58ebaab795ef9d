#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "bibnet/normalize.hpp"
#include "bibnet/record.hpp"

namespace bibnet {

// ---------------------------------------------------------------------------
// Author-level indices

/// Largest h such that h papers have at least h citations each.
int h_index(std::span<const std::int64_t> citations);

/// Largest g such that the g most cited papers together have at least g^2
/// citations. g never exceeds the number of papers.
int g_index(std::span<const std::int64_t> citations);

struct AuthorRow {
  std::string name;
  std::int64_t total_cited = 0;
  int papers = 0;
  double cited_per_paper = 0.0;
  int h = 0;
  int g = 0;
};

/// Every author gets full credit for each paper's times-cited count; a
/// missing TC counts as zero. Sorted by total_cited descending, then name.
std::vector<AuthorRow> author_table(const Corpus& corpus, std::size_t k);

// ---------------------------------------------------------------------------
// Collaboration ratios. Each overload taking indices restricts the
// computation to those records (used for the per-month series).

/// Papers with >= 2 authors over papers with >= 1 author.
/// Throws DegenerateError when no record has an author.
double degree_of_collaboration(const Corpus& corpus);
double degree_of_collaboration(const Corpus& corpus, std::span<const std::size_t> subset);

/// Papers with >= 2 distinct countries over papers with >= 1 country.
double international_collab_ratio(const Corpus& corpus,
                                  const RuleTables& rules = RuleTables::defaults());
double international_collab_ratio(const Corpus& corpus, std::span<const std::size_t> subset,
                                  const RuleTables& rules = RuleTables::defaults());

/// Papers with >= 2 research areas over papers with >= 1.
double multidisciplinary_ratio(const Corpus& corpus);
double multidisciplinary_ratio(const Corpus& corpus, std::span<const std::size_t> subset);

// ---------------------------------------------------------------------------
// Correlation

/// Population Pearson coefficient. Returns nullopt when either input has zero
/// variance; throws std::invalid_argument on length mismatch or fewer than
/// two observations.
std::optional<double> pearson(std::span<const double> x, std::span<const double> y);

inline constexpr std::array<const char*, 6> kCorrelationVariables = {
    "authors", "cited_refs", "times_cited", "research_areas", "countries", "pages"};

struct CorrelationMatrix {
  std::vector<std::string> variables;
  /// entries[i][j]; nullopt where a variable has zero variance.
  std::vector<std::vector<std::optional<double>>> entries;
  std::size_t rows_used = 0;
};

/// Per-record variables with listwise deletion of incomplete rows. A zero
/// author, area or country count is treated as missing.
/// Throws DegenerateError with fewer than two complete rows.
CorrelationMatrix correlation_matrix(const Corpus& corpus,
                                     const RuleTables& rules = RuleTables::defaults());

// ---------------------------------------------------------------------------
// Rankings and series

struct RankedEntry {
  std::string key;
  std::int64_t count = 0;

  bool operator==(const RankedEntry&) const = default;
};

/// Count descending, ties by key ascending, first k. Throws
/// std::invalid_argument when k < 1.
std::vector<RankedEntry> top_k(const std::map<std::string, std::int64_t>& counts,
                               std::size_t k);

enum class GroupBy { all, country, source, research_area };

struct MonthlySeries {
  std::string key;  // "ALL" for GroupBy::all
  std::map<YearMonth, std::int64_t> points;
};

/// Paper counts per month over the dated view. Every month between the
/// first and last dated month is present (zero-filled). With `keys`, only
/// the top-k groups by total are returned. A paper counts once per group.
/// Throws DegenerateError when the dated view is empty.
std::vector<MonthlySeries> monthly_counts(const Corpus& corpus, GroupBy group_by,
                                          std::optional<std::size_t> keys = std::nullopt,
                                          const RuleTables& rules = RuleTables::defaults());

struct MostCitedRow {
  std::string title;
  std::string first_author_et_al;
  std::int64_t times_cited = 0;
  std::vector<std::string> research_areas;
};

std::vector<MostCitedRow> most_cited(const Corpus& corpus, std::size_t k);

struct DescriptiveStats {
  double min = 0;
  double max = 0;
  double mean = 0;
  double median = 0;
  double mode = 0;  // smallest of the most frequent values
};

/// Throws std::invalid_argument on empty input.
DescriptiveStats descriptive_stats(std::span<const double> values);

}  // namespace bibnet
