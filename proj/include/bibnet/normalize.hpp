#pragma once

#include <filesystem>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "bibnet/record.hpp"

namespace bibnet {

enum class ExtractionMode {
  unique,    // first occurrence only, for per-paper counting
  multiset,  // one entry per address segment, for network building
};

/// Country, month and season rules used by the cleaning step.
///
/// The defaults reproduce the published cleaning rules. A JSON override file
/// may replace any of the tables:
///
///   {
///     "country_contains": [["USA", "USA"]],
///     "country_aliases": {"Wales": "United Kingdom"},
///     "months": {"JAN": 1, "SEPT": 9},
///     "seasons": ["FAL", "WIN"]
///   }
///
/// Alias keys match case-insensitively; month and season tokens are
/// upper-case.
class RuleTables {
 public:
  /// Substring rules, tried in order before aliases. Matching is
  /// case-sensitive ("USA" must not fire on "Jerusalem").
  std::vector<std::pair<std::string, std::string>> country_contains;
  /// Keyed by lower-cased name.
  std::map<std::string, std::string> country_aliases;
  std::map<std::string, int> months;
  std::set<std::string> seasons;

  static const RuleTables& defaults();
  /// Tables present in the file replace the defaults; absent ones are kept.
  static RuleTables load(const std::filesystem::path& path);
  static RuleTables from_json_text(std::string_view json_text);
};

/// Resolves a PD field to a year-month. Returns nullopt ("dropped") for
/// season-only dates, unparseable values, or a missing/invalid year.
std::optional<YearMonth> normalize_date(std::string_view raw,
                                        std::optional<int> year,
                                        const RuleTables& rules = RuleTables::defaults());

/// Splits a C1 field into its `[authors] inst, dept, ..., country` segments.
/// Separators are semicolons outside square brackets; a trailing period on a
/// segment is removed.
std::vector<std::string> split_address_segments(std::string_view address);

std::vector<std::string> extract_institutions(std::string_view address,
                                              ExtractionMode mode);

/// Counts segments for which the institution rule yields an empty name.
std::size_t count_empty_institution_segments(std::string_view address);

std::vector<std::string> extract_countries(std::string_view address,
                                           ExtractionMode mode,
                                           const RuleTables& rules = RuleTables::defaults());

/// Throws std::invalid_argument when `raw` is blank.
std::string canonicalize_country(std::string_view raw,
                                 const RuleTables& rules = RuleTables::defaults());

/// Splits an AF field on "; ", dropping "[anonymous]" entries and repeated
/// names within the record.
std::vector<std::string> split_authors(std::string_view af_field);

/// Generic multi-value split: trims and drops empty pieces.
std::vector<std::string> split_list_field(std::string_view field,
                                          std::string_view separator,
                                          bool lowercase = false);

/// "Article; Early Access" -> "Article".
std::string primary_document_type(std::string_view dt_field);

}  // namespace bibnet
