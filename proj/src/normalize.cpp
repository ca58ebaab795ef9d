#include "bibnet/normalize.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

#include "bibnet/error.hpp"
#include "bibnet/strings.hpp"

namespace bibnet {

namespace {

RuleTables make_defaults() {
  RuleTables t;
  t.country_contains = {{"USA", "USA"}};
  for (const char* uk : {"North Ireland", "Wales", "Scotland", "England"}) {
    t.country_aliases[text::to_lower_ascii(uk)] = "United Kingdom";
  }
  for (const char* cn : {"P. R. China", "Peoples R China"}) {
    t.country_aliases[text::to_lower_ascii(cn)] = "China";
  }
  for (const char* vn : {"Viet Nam", "Vietnam"}) {
    t.country_aliases[text::to_lower_ascii(vn)] = "Vietnam";
  }
  static constexpr const char* kMonths[] = {"JAN", "FEB", "MAR", "APR", "MAY", "JUN",
                                            "JUL", "AUG", "SEP", "OCT", "NOV", "DEC"};
  for (int m = 0; m < 12; ++m) t.months[kMonths[m]] = m + 1;
  t.months["SEPT"] = 9;
  t.seasons = {"FAL", "WIN", "SUM", "SPR"};
  return t;
}

bool is_alpha(char c) { return (c >= 'A' && c <= 'Z') || (c >= 'a' && c <= 'z'); }

std::string first_alpha_token(std::string_view raw) {
  std::size_t i = 0;
  while (i < raw.size() && !is_alpha(raw[i])) ++i;
  std::size_t j = i;
  while (j < raw.size() && is_alpha(raw[j])) ++j;
  return text::to_upper_ascii(raw.substr(i, j - i));
}

template <typename Lookup>
bool token_matches(const std::string& token, Lookup&& contains) {
  return contains(token) || (token.size() > 3 && contains(token.substr(0, 3)));
}

std::string_view strip_trailing_period(std::string_view s) {
  s = text::trim(s);
  while (!s.empty() && s.back() == '.') s.remove_suffix(1);
  return text::trim(s);
}

/// Text after the bracketed author list, or the whole segment when there is
/// none. nullopt for an unterminated bracket.
std::optional<std::string_view> after_author_list(std::string_view seg) {
  seg = text::trim(seg);
  if (seg.empty() || seg.front() != '[') return seg;
  int depth = 0;
  for (std::size_t i = 0; i < seg.size(); ++i) {
    if (seg[i] == '[') ++depth;
    if (seg[i] == ']' && --depth == 0) {
      // "]," per the export format; "] " is accepted as well.
      auto rest = text::trim(seg.substr(i + 1));
      if (!rest.empty() && rest.front() == ',') rest.remove_prefix(1);
      return text::trim(rest);
    }
  }
  return std::nullopt;
}

std::string institution_of(std::string_view seg) {
  auto rest = after_author_list(seg);
  if (!rest) return {};
  auto comma = rest->find(',');
  return std::string(text::trim(rest->substr(0, comma)));
}

std::optional<std::string> raw_country_of(std::string_view seg) {
  auto rest = after_author_list(seg);
  if (!rest) return std::nullopt;
  auto comma = rest->rfind(',');
  if (comma == std::string_view::npos) return std::nullopt;
  auto country = strip_trailing_period(rest->substr(comma + 1));
  if (country.empty()) return std::nullopt;
  return std::string(country);
}

std::vector<std::string> apply_mode(std::vector<std::string> values, ExtractionMode mode) {
  if (mode == ExtractionMode::multiset) return values;
  std::vector<std::string> unique;
  for (auto& v : values) {
    if (std::find(unique.begin(), unique.end(), v) == unique.end()) unique.push_back(std::move(v));
  }
  return unique;
}

}  // namespace

const RuleTables& RuleTables::defaults() {
  static const RuleTables tables = make_defaults();
  return tables;
}

RuleTables RuleTables::from_json_text(std::string_view json_text) {
  RuleTables t = defaults();
  try {
    auto j = nlohmann::json::parse(json_text);
    if (!j.is_object()) throw ConfigError("rule file must hold a JSON object");
    for (const auto& [key, value] : j.items()) {
      if (key == "country_contains") {
        t.country_contains.clear();
        for (const auto& rule : value) {
          t.country_contains.emplace_back(rule.at(0).get<std::string>(),
                                          rule.at(1).get<std::string>());
        }
      } else if (key == "country_aliases") {
        t.country_aliases.clear();
        for (const auto& [name, canonical] : value.items()) {
          t.country_aliases[text::to_lower_ascii(name)] = canonical.get<std::string>();
        }
      } else if (key == "months") {
        t.months.clear();
        for (const auto& [token, month] : value.items()) {
          int m = month.get<int>();
          if (m < 1 || m > 12) throw ConfigError("month out of range for token " + token);
          t.months[text::to_upper_ascii(token)] = m;
        }
      } else if (key == "seasons") {
        t.seasons.clear();
        for (const auto& s : value) t.seasons.insert(text::to_upper_ascii(s.get<std::string>()));
      } else {
        throw ConfigError("unknown rule table: " + key);
      }
    }
  } catch (const nlohmann::json::exception& e) {
    throw ConfigError(std::string("invalid rule file: ") + e.what());
  }
  return t;
}

RuleTables RuleTables::load(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot read rule file " + path.string());
  std::stringstream ss;
  ss << in.rdbuf();
  return from_json_text(ss.str());
}

std::optional<YearMonth> normalize_date(std::string_view raw, std::optional<int> year,
                                        const RuleTables& rules) {
  if (!year || *year < 1900) return std::nullopt;
  auto token = first_alpha_token(raw);
  if (token.empty()) return std::nullopt;
  if (token_matches(token, [&](const std::string& t) { return rules.seasons.count(t) > 0; })) {
    return std::nullopt;
  }
  auto it = rules.months.find(token);
  if (it == rules.months.end() && token.size() > 3) it = rules.months.find(token.substr(0, 3));
  if (it == rules.months.end()) return std::nullopt;
  return YearMonth{*year, it->second};
}

std::vector<std::string> split_address_segments(std::string_view address) {
  std::vector<std::string> segments;
  int depth = 0;
  std::size_t start = 0;
  auto flush = [&](std::size_t end) {
    auto seg = strip_trailing_period(address.substr(start, end - start));
    if (!seg.empty()) segments.emplace_back(seg);
  };
  for (std::size_t i = 0; i < address.size(); ++i) {
    char c = address[i];
    if (c == '[') {
      ++depth;
    } else if (c == ']') {
      depth = std::max(0, depth - 1);
    } else if (c == ';' && depth == 0) {
      flush(i);
      start = i + 1;
    }
  }
  flush(address.size());
  return segments;
}

std::vector<std::string> extract_institutions(std::string_view address, ExtractionMode mode) {
  std::vector<std::string> out;
  for (const auto& seg : split_address_segments(address)) {
    auto inst = institution_of(seg);
    if (!inst.empty()) out.push_back(std::move(inst));
  }
  return apply_mode(std::move(out), mode);
}

std::size_t count_empty_institution_segments(std::string_view address) {
  std::size_t n = 0;
  for (const auto& seg : split_address_segments(address)) {
    if (institution_of(seg).empty()) ++n;
  }
  return n;
}

std::vector<std::string> extract_countries(std::string_view address, ExtractionMode mode,
                                           const RuleTables& rules) {
  std::vector<std::string> out;
  for (const auto& seg : split_address_segments(address)) {
    if (auto raw = raw_country_of(seg)) out.push_back(canonicalize_country(*raw, rules));
  }
  return apply_mode(std::move(out), mode);
}

std::string canonicalize_country(std::string_view raw, const RuleTables& rules) {
  auto name = strip_trailing_period(raw);
  if (name.empty()) throw std::invalid_argument("empty country name");
  for (const auto& [needle, canonical] : rules.country_contains) {
    if (name.find(needle) != std::string_view::npos) return canonical;
  }
  if (auto it = rules.country_aliases.find(text::to_lower_ascii(name));
      it != rules.country_aliases.end()) {
    return it->second;
  }
  return text::title_case(name);
}

std::vector<std::string> split_authors(std::string_view af_field) {
  std::vector<std::string> names;
  for (auto piece : text::split(af_field, ";")) {
    auto name = text::trim(piece);
    if (name.empty() || text::iequals(name, "[anonymous]")) continue;
    if (std::find(names.begin(), names.end(), name) == names.end()) names.emplace_back(name);
  }
  return names;
}

std::vector<std::string> split_list_field(std::string_view field, std::string_view separator,
                                          bool lowercase) {
  auto sep = text::trim(separator);
  if (sep.empty()) sep = separator;
  std::vector<std::string> out;
  for (auto piece : text::split(field, sep)) {
    auto v = text::trim(piece);
    if (v.empty()) continue;
    out.push_back(lowercase ? text::to_lower_ascii(v) : std::string(v));
  }
  return out;
}

std::string primary_document_type(std::string_view dt_field) {
  return std::string(text::trim(dt_field.substr(0, dt_field.find(';'))));
}

}  // namespace bibnet
