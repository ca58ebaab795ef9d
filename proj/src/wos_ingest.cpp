#include "bibnet/wos_ingest.hpp"

#include <algorithm>
#include <charconv>
#include <map>
#include <numeric>
#include <string_view>
#include <unordered_map>

#include "bibnet/error.hpp"
#include "bibnet/normalize.hpp"
#include "bibnet/strings.hpp"

namespace bibnet {

namespace {

using FieldMap = std::map<std::string, std::string, std::less<>>;

constexpr std::string_view kBom = "\xEF\xBB\xBF";

bool is_tag_char(char c) { return (c >= 'A' && c <= 'Z') || (c >= '0' && c <= '9'); }

bool is_tag(std::string_view s) { return s.size() == 2 && is_tag_char(s[0]) && is_tag_char(s[1]); }

// Tags whose continuation lines each hold a separate list entry.
bool is_line_list_tag(std::string_view tag) {
  return tag == "AU" || tag == "AF" || tag == "C1" || tag == "CR" || tag == "BA" || tag == "BE";
}

std::string_view field(const FieldMap& f, std::string_view tag) {
  auto it = f.find(tag);
  return it == f.end() ? std::string_view{} : std::string_view(it->second);
}

std::optional<int> parse_count(std::string_view tag, std::string_view raw,
                               std::vector<std::string>& notes) {
  raw = text::trim(raw);
  if (raw.empty()) return std::nullopt;
  int v = 0;
  auto [ptr, ec] = std::from_chars(raw.data(), raw.data() + raw.size(), v);
  if (ec != std::errc{} || ptr != raw.data() + raw.size() || v < 0) {
    notes.push_back(std::string(tag) + " is not a nonnegative integer: '" + std::string(raw) + "'");
    return std::nullopt;
  }
  return v;
}

/// Shared by both dialects. Returns nullopt (with a note) for records that
/// must be skipped.
std::optional<BiblioRecord> build_record(const FieldMap& f, std::vector<std::string>& notes) {
  BiblioRecord r;
  auto pt = parse_publication_type(text::trim(field(f, "PT")));
  if (!pt) {
    notes.push_back("missing or invalid publication type '" + std::string(field(f, "PT")) + "'");
    return std::nullopt;
  }
  r.publication_type = *pt;
  r.title = std::string(text::trim(field(f, "TI")));
  if (r.title.empty()) {
    notes.push_back("record has no title");
    return std::nullopt;
  }
  auto af = field(f, "AF");
  if (text::trim(af).empty()) af = field(f, "AU");
  r.author_full_names = split_authors(af);
  r.source_abbrev = std::string(text::trim(field(f, "JI")));
  r.language = std::string(text::trim(field(f, "LA")));
  r.document_type = std::string(text::trim(field(f, "DT")));
  r.author_keywords = split_list_field(field(f, "DE"), ";");
  if (auto ab = text::trim(field(f, "AB")); !ab.empty()) r.abstract = std::string(ab);
  r.addresses = std::string(text::trim(field(f, "C1")));
  r.cited_reference_count = parse_count("NR", field(f, "NR"), notes);
  r.times_cited = parse_count("TC", field(f, "TC"), notes);
  r.publication_date = std::string(text::trim(field(f, "PD")));
  r.publication_year = parse_count("PY", field(f, "PY"), notes);
  r.research_areas = split_list_field(field(f, "SC"), ";");
  r.page_count = parse_count("PG", field(f, "PG"), notes);
  if (r.page_count && *r.page_count == 0) r.page_count.reset();
  if (auto ut = text::trim(field(f, "UT")); !ut.empty()) r.accession_id = std::string(ut);
  return r;
}

class LineReader {
 public:
  explicit LineReader(std::istream& in) : in_(in) {}

  bool next(std::string& line) {
    if (!std::getline(in_, line)) return false;
    ++number_;
    if (number_ == 1 && line.starts_with(kBom)) line.erase(0, kBom.size());
    if (!line.empty() && line.back() == '\r') line.pop_back();
    return true;
  }

  std::size_t number() const { return number_; }

 private:
  std::istream& in_;
  std::size_t number_ = 0;
};

void finish_record(ParseResult& result, const FieldMap& fields, std::size_t line) {
  std::vector<std::string> notes;
  auto record = build_record(fields, notes);
  for (auto& n : notes) result.warnings.push_back({line, std::move(n)});
  if (record) {
    result.records.push_back(std::move(*record));
  } else {
    ++result.skipped;
  }
}

ParseResult parse_tagged(std::istream& in) {
  ParseResult result;
  LineReader reader(in);
  std::string line;
  FieldMap fields;
  std::string last_tag;
  bool in_record = false;
  std::size_t record_line = 0;

  while (reader.next(line)) {
    if (text::trim(line).empty()) continue;
    if (line.front() == ' ' || line.front() == '\t') {
      if (!in_record || last_tag.empty()) {
        throw FormatError(reader.number(), "continuation line outside a record field");
      }
      auto value = text::trim(line);
      auto& target = fields[last_tag];
      if (!target.empty()) target += is_line_list_tag(last_tag) ? "; " : " ";
      target += value;
      continue;
    }
    auto tag = std::string_view(line).substr(0, 2);
    if (!is_tag(tag) || (line.size() > 2 && line[2] != ' ')) {
      throw FormatError(reader.number(), "expected a two-character field tag");
    }
    auto value = line.size() > 3 ? text::trim(std::string_view(line).substr(3)) : std::string_view{};

    if (tag == "EF") break;
    if (tag == "ER") {
      if (in_record) {
        finish_record(result, fields, record_line);
      } else {
        result.warnings.push_back({reader.number(), "ER without an open record"});
      }
      fields.clear();
      last_tag.clear();
      in_record = false;
      continue;
    }
    if (!in_record) {
      if (tag == "FN" || tag == "VR") continue;
      in_record = true;
      record_line = reader.number();
    }
    last_tag = std::string(tag);
    auto& target = fields[last_tag];
    if (!target.empty()) target += is_line_list_tag(tag) ? "; " : " ";
    target += value;
  }
  if (in_record) {
    result.warnings.push_back({record_line, "record not terminated by ER"});
    finish_record(result, fields, record_line);
  }
  return result;
}

ParseResult parse_tab_delimited(std::istream& in) {
  ParseResult result;
  LineReader reader(in);
  std::string line;
  if (!reader.next(line)) return result;
  while (text::trim(line).empty()) {
    if (!reader.next(line)) return result;
  }

  std::vector<std::string> header;
  for (auto cell : text::split(line, "\t")) header.emplace_back(text::trim(cell));
  while (!header.empty() && header.back().empty()) header.pop_back();
  if (header.empty()) throw FormatError(reader.number(), "malformed header: no field tags");
  for (const auto& tag : header) {
    if (!is_tag(tag)) throw FormatError(reader.number(), "malformed header: bad field tag '" + tag + "'");
  }
  if (std::find(header.begin(), header.end(), "PT") == header.end()) {
    throw FormatError(reader.number(), "malformed header: no PT column");
  }

  while (reader.next(line)) {
    if (text::trim(line).empty()) continue;
    auto cells = text::split(line, "\t");
    bool overflow = false;
    for (std::size_t i = header.size(); i < cells.size(); ++i) {
      if (!text::trim(cells[i]).empty()) overflow = true;
    }
    if (overflow) {
      result.warnings.push_back({reader.number(), "row has more cells than the header"});
      ++result.skipped;
      continue;
    }
    FieldMap fields;
    for (std::size_t i = 0; i < header.size() && i < cells.size(); ++i) {
      if (cells[i].empty()) continue;
      fields.try_emplace(header[i], cells[i]);
    }
    finish_record(result, fields, reader.number());
  }
  return result;
}

std::string join(const std::vector<std::string>& xs, std::string_view sep) {
  std::string out;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    if (i) out += sep;
    out += xs[i];
  }
  return out;
}

std::string opt_int(const std::optional<int>& v) { return v ? std::to_string(*v) : std::string{}; }

struct UnionFind {
  std::vector<std::size_t> parent;
  explicit UnionFind(std::size_t n) : parent(n) { std::iota(parent.begin(), parent.end(), std::size_t{0}); }
  std::size_t find(std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  void unite(std::size_t a, std::size_t b) {
    a = find(a);
    b = find(b);
    if (a != b) parent[std::max(a, b)] = std::min(a, b);
  }
};

}  // namespace

ParseResult parse_export(std::istream& in, ExportFormat format) {
  return format == ExportFormat::tagged ? parse_tagged(in) : parse_tab_delimited(in);
}

ExportFormat detect_format(std::istream& in) {
  auto start = in.tellg();
  std::string line;
  ExportFormat format = ExportFormat::tab_delimited;
  bool first = true;
  while (std::getline(in, line)) {
    if (first && line.starts_with(kBom)) line.erase(0, kBom.size());
    first = false;
    if (text::trim(line).empty()) continue;
    if (line.find('\t') == std::string::npos &&
        (line.starts_with("FN ") || line.starts_with("VR ") || line.starts_with("PT "))) {
      format = ExportFormat::tagged;
    }
    break;
  }
  in.clear();
  in.seekg(start);
  return format;
}

void write_tab_delimited(std::ostream& out, std::span<const BiblioRecord> records) {
  out << "PT\tAF\tTI\tJI\tLA\tDT\tDE\tAB\tC1\tNR\tTC\tPD\tPY\tSC\tPG\tUT\n";
  for (const auto& r : records) {
    out << to_code(r.publication_type) << '\t' << join(r.author_full_names, "; ") << '\t'
        << r.title << '\t' << r.source_abbrev << '\t' << r.language << '\t' << r.document_type
        << '\t' << join(r.author_keywords, "; ") << '\t' << r.abstract.value_or("") << '\t'
        << r.addresses << '\t' << opt_int(r.cited_reference_count) << '\t'
        << opt_int(r.times_cited) << '\t' << r.publication_date << '\t'
        << opt_int(r.publication_year) << '\t' << join(r.research_areas, "; ") << '\t'
        << opt_int(r.page_count) << '\t' << r.accession_id.value_or("") << '\n';
  }
}

std::vector<DuplicateGroup> detect_duplicates(std::span<const BiblioRecord> records) {
  UnionFind uf(records.size());
  std::unordered_map<std::string, std::size_t> by_id;
  std::unordered_map<std::string, std::vector<std::size_t>> by_triple;
  for (std::size_t i = 0; i < records.size(); ++i) {
    const auto& r = records[i];
    if (r.accession_id) {
      auto [it, fresh] = by_id.try_emplace(*r.accession_id, i);
      if (!fresh) uf.unite(it->second, i);
    }
    std::string key = text::to_lower_ascii(text::trim(r.title));
    key += '\x1f';
    if (!r.author_full_names.empty()) key += r.author_full_names.front();
    key += '\x1f';
    key += r.source_abbrev;
    by_triple[key].push_back(i);
  }
  for (const auto& [key, members] : by_triple) {
    // A missing id on either side falls back to the triple, so every member
    // without an id matches every other member of the bucket.
    auto anchor = std::find_if(members.begin(), members.end(),
                               [&](std::size_t i) { return !records[i].accession_id; });
    if (anchor == members.end()) continue;
    for (auto i : members) uf.unite(*anchor, i);
  }

  std::map<std::size_t, DuplicateGroup> groups;
  for (std::size_t i = 0; i < records.size(); ++i) groups[uf.find(i)].push_back(i);
  std::vector<DuplicateGroup> out;
  for (auto& [root, members] : groups) {
    if (members.size() >= 2) out.push_back(std::move(members));
  }
  return out;
}

MergeResult merge_corpora(std::vector<std::vector<BiblioRecord>> parts) {
  return merge_corpora(std::move(parts), RuleTables::defaults());
}

MergeResult merge_corpora(std::vector<std::vector<BiblioRecord>> parts, const RuleTables& rules) {
  std::vector<BiblioRecord> all;
  for (auto& p : parts) std::move(p.begin(), p.end(), std::back_inserter(all));
  std::vector<bool> drop(all.size(), false);
  std::size_t removed = 0;
  for (const auto& group : detect_duplicates(all)) {
    for (std::size_t k = 1; k < group.size(); ++k) drop[group[k]] = true;
    removed += group.size() - 1;
  }
  std::vector<BiblioRecord> kept;
  kept.reserve(all.size() - removed);
  for (std::size_t i = 0; i < all.size(); ++i) {
    if (!drop[i]) kept.push_back(std::move(all[i]));
  }
  return {Corpus(std::move(kept), rules), removed};
}

}  // namespace bibnet
