#pragma once

#include <compare>
#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace bibnet {

class RuleTables;

/// WoS "PT" codes.
enum class PublicationType : char {
  book = 'B',
  journal = 'J',
  patent = 'P',
  book_in_series = 'S',
};

std::optional<PublicationType> parse_publication_type(std::string_view code);
char to_code(PublicationType t);

struct YearMonth {
  int year = 1900;
  int month = 1;

  auto operator<=>(const YearMonth&) const = default;

  /// "YYYY-MM"
  std::string to_string() const;
  YearMonth next() const;
};

/// One publication, restricted to the retained export columns.
struct BiblioRecord {
  PublicationType publication_type = PublicationType::journal;  // PT
  std::vector<std::string> author_full_names;                   // AF
  std::string title;                                            // TI
  std::string source_abbrev;                                    // JI
  std::string language;                                         // LA
  std::string document_type;                                    // DT
  std::vector<std::string> author_keywords;                     // DE
  std::optional<std::string> abstract;                          // AB
  std::string addresses;                                        // C1
  std::optional<int> cited_reference_count;                     // NR
  std::optional<int> times_cited;                               // TC
  std::string publication_date;                                 // PD
  std::optional<int> publication_year;                          // PY
  std::vector<std::string> research_areas;                      // SC
  std::optional<int> page_count;                                // PG
  std::optional<std::string> accession_id;                      // UT

  bool operator==(const BiblioRecord&) const = default;
};

/// Validated record collection plus the sub-view of records whose
/// publication date resolves to a YearMonth.
class Corpus {
 public:
  Corpus() = default;
  explicit Corpus(std::vector<BiblioRecord> records);
  Corpus(std::vector<BiblioRecord> records, const RuleTables& rules);

  std::span<const BiblioRecord> records() const { return records_; }
  std::size_t size() const { return records_.size(); }
  bool empty() const { return records_.empty(); }
  const BiblioRecord& operator[](std::size_t i) const { return records_[i]; }

  /// Indices into records(), ascending.
  std::span<const std::size_t> dated_view() const { return dated_; }
  std::optional<YearMonth> month_of(std::size_t i) const { return months_[i]; }

 private:
  std::vector<BiblioRecord> records_;
  std::vector<std::optional<YearMonth>> months_;
  std::vector<std::size_t> dated_;
};

}  // namespace bibnet
