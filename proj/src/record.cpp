#include "bibnet/record.hpp"

#include <cstdio>

#include "bibnet/normalize.hpp"

namespace bibnet {

std::optional<PublicationType> parse_publication_type(std::string_view code) {
  if (code.size() != 1) return std::nullopt;
  switch (code[0]) {
    case 'B': return PublicationType::book;
    case 'J': return PublicationType::journal;
    case 'P': return PublicationType::patent;
    case 'S': return PublicationType::book_in_series;
    default: return std::nullopt;
  }
}

char to_code(PublicationType t) { return static_cast<char>(t); }

std::string YearMonth::to_string() const {
  char buf[16];
  std::snprintf(buf, sizeof buf, "%04d-%02d", year, month);
  return buf;
}

YearMonth YearMonth::next() const {
  return month == 12 ? YearMonth{year + 1, 1} : YearMonth{year, month + 1};
}

Corpus::Corpus(std::vector<BiblioRecord> records)
    : Corpus(std::move(records), RuleTables::defaults()) {}

Corpus::Corpus(std::vector<BiblioRecord> records, const RuleTables& rules)
    : records_(std::move(records)) {
  months_.reserve(records_.size());
  for (std::size_t i = 0; i < records_.size(); ++i) {
    const auto& r = records_[i];
    months_.push_back(normalize_date(r.publication_date, r.publication_year, rules));
    if (months_.back()) dated_.push_back(i);
  }
}

}  // namespace bibnet
