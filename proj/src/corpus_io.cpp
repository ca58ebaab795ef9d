#include "bibnet/corpus_io.hpp"

#include <string>

#include "bibnet/error.hpp"

namespace bibnet {

namespace {

template <typename T>
nlohmann::ordered_json optional_json(const std::optional<T>& v) {
  return v ? nlohmann::ordered_json(*v) : nlohmann::ordered_json(nullptr);
}

template <typename T>
std::optional<T> optional_from(const nlohmann::json& j, const char* key) {
  if (!j.contains(key) || j.at(key).is_null()) return std::nullopt;
  return j.at(key).get<T>();
}

}  // namespace

nlohmann::ordered_json record_to_json(const BiblioRecord& r) {
  nlohmann::ordered_json j;
  j["publication_type"] = std::string(1, to_code(r.publication_type));
  j["author_full_names"] = r.author_full_names;
  j["title"] = r.title;
  j["source_abbrev"] = r.source_abbrev;
  j["language"] = r.language;
  j["document_type"] = r.document_type;
  j["author_keywords"] = r.author_keywords;
  j["abstract"] = optional_json(r.abstract);
  j["addresses"] = r.addresses;
  j["cited_reference_count"] = optional_json(r.cited_reference_count);
  j["times_cited"] = optional_json(r.times_cited);
  j["publication_date"] = r.publication_date;
  j["publication_year"] = optional_json(r.publication_year);
  j["research_areas"] = r.research_areas;
  j["page_count"] = optional_json(r.page_count);
  j["accession_id"] = optional_json(r.accession_id);
  return j;
}

BiblioRecord record_from_json(const nlohmann::json& j) {
  try {
    BiblioRecord r;
    auto pt = parse_publication_type(j.at("publication_type").get<std::string>());
    if (!pt) throw InputError("invalid publication_type");
    r.publication_type = *pt;
    r.author_full_names = j.at("author_full_names").get<std::vector<std::string>>();
    r.title = j.at("title").get<std::string>();
    r.source_abbrev = j.at("source_abbrev").get<std::string>();
    r.language = j.at("language").get<std::string>();
    r.document_type = j.at("document_type").get<std::string>();
    r.author_keywords = j.at("author_keywords").get<std::vector<std::string>>();
    r.abstract = optional_from<std::string>(j, "abstract");
    r.addresses = j.at("addresses").get<std::string>();
    r.cited_reference_count = optional_from<int>(j, "cited_reference_count");
    r.times_cited = optional_from<int>(j, "times_cited");
    r.publication_date = j.at("publication_date").get<std::string>();
    r.publication_year = optional_from<int>(j, "publication_year");
    r.research_areas = j.at("research_areas").get<std::vector<std::string>>();
    r.page_count = optional_from<int>(j, "page_count");
    r.accession_id = optional_from<std::string>(j, "accession_id");
    return r;
  } catch (const nlohmann::json::exception& e) {
    throw InputError(std::string("bad corpus record: ") + e.what());
  }
}

void write_corpus_jsonl(std::ostream& out, const Corpus& corpus) {
  for (const auto& r : corpus.records()) out << record_to_json(r).dump() << '\n';
}

Corpus read_corpus_jsonl(std::istream& in, const RuleTables& rules) {
  std::vector<BiblioRecord> records;
  std::string line;
  std::size_t n = 0;
  while (std::getline(in, line)) {
    ++n;
    if (line.empty()) continue;
    try {
      records.push_back(record_from_json(nlohmann::json::parse(line)));
    } catch (const nlohmann::json::exception& e) {
      throw FormatError(n, std::string("invalid JSON: ") + e.what());
    } catch (const InputError& e) {
      throw FormatError(n, e.what());
    }
  }
  return Corpus(std::move(records), rules);
}

}  // namespace bibnet
