#pragma once

#include <cstddef>
#include <istream>
#include <ostream>
#include <span>
#include <string>
#include <vector>

#include "bibnet/record.hpp"

namespace bibnet {

enum class ExportFormat {
  tagged,         // "PT J" / continuation lines / "ER" / "EF"
  tab_delimited,  // header row of field tags, one record per row
};

struct ParseWarning {
  std::size_t line = 0;
  std::string message;
};

struct ParseResult {
  std::vector<BiblioRecord> records;
  std::vector<ParseWarning> warnings;
  /// Records dropped because a mandatory field was missing or invalid.
  std::size_t skipped = 0;
};

/// Parses one export stream. Unknown tags are ignored. Throws FormatError
/// for structural problems (bad header, stray lines).
ParseResult parse_export(std::istream& in, ExportFormat format);

/// Guesses the dialect from the first non-blank line.
ExportFormat detect_format(std::istream& in);

/// Writes records as a tab-delimited export holding the retained columns.
void write_tab_delimited(std::ostream& out, std::span<const BiblioRecord> records);

/// A set of indices (ascending) into the input that refer to the same work.
using DuplicateGroup = std::vector<std::size_t>;

/// Records match when their accession ids are equal, or, when either lacks
/// an id, when their (case-folded trimmed title, first author, source)
/// triples are equal. Groups are the equivalence classes of size >= 2,
/// ordered by their first member.
std::vector<DuplicateGroup> detect_duplicates(std::span<const BiblioRecord> records);

struct MergeResult {
  Corpus corpus;
  std::size_t duplicates_removed = 0;
};

/// Concatenates parts in order, keeps the first record of each duplicate
/// group, and builds the dated view.
MergeResult merge_corpora(std::vector<std::vector<BiblioRecord>> parts);
MergeResult merge_corpora(std::vector<std::vector<BiblioRecord>> parts,
                          const RuleTables& rules);

}  // namespace bibnet
