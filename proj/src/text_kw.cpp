#include "bibnet/text_kw.hpp"

#include <fstream>
#include <map>
#include <sstream>
#include <stdexcept>

#include "bibnet/error.hpp"
#include "bibnet/strings.hpp"

namespace bibnet {

namespace {

// English stopword list, version en-1 (179 entries).
constexpr const char* kEnglishStopwords[] = {
    "i", "me", "my", "myself", "we", "our", "ours", "ourselves", "you", "you're", "you've",
    "you'll", "you'd", "your", "yours", "yourself", "yourselves", "he", "him", "his", "himself",
    "she", "she's", "her", "hers", "herself", "it", "it's", "its", "itself", "they", "them",
    "their", "theirs", "themselves", "what", "which", "who", "whom", "this", "that", "that'll",
    "these", "those", "am", "is", "are", "was", "were", "be", "been", "being", "have", "has",
    "had", "having", "do", "does", "did", "doing", "a", "an", "the", "and", "but", "if", "or",
    "because", "as", "until", "while", "of", "at", "by", "for", "with", "about", "against",
    "between", "into", "through", "during", "before", "after", "above", "below", "to", "from",
    "up", "down", "in", "out", "on", "off", "over", "under", "again", "further", "then", "once",
    "here", "there", "when", "where", "why", "how", "all", "any", "both", "each", "few", "more",
    "most", "other", "some", "such", "no", "nor", "not", "only", "own", "same", "so", "than",
    "too", "very", "s", "t", "can", "will", "just", "don", "don't", "should", "should've", "now",
    "d", "ll", "m", "o", "re", "ve", "y", "ain", "aren", "aren't", "couldn", "couldn't", "didn",
    "didn't", "doesn", "doesn't", "hadn", "hadn't", "hasn", "hasn't", "haven", "haven't", "isn",
    "isn't", "ma", "mightn", "mightn't", "mustn", "mustn't", "needn", "needn't", "shan", "shan't",
    "shouldn", "shouldn't", "wasn", "wasn't", "weren", "weren't", "won", "won't", "wouldn",
    "wouldn't"};

constexpr std::string_view kAsciiPunctuation = "!\"#$%&'()*+,-./:;<=>?@[\\]^_`{|}~";

bool is_punct(char c) { return kAsciiPunctuation.find(c) != std::string_view::npos; }

bool is_space(char c) { return c == ' ' || c == '\t' || c == '\n' || c == '\r' || c == '\f' || c == '\v'; }

StopwordSet make_english() {
  StopwordSet s;
  for (const char* w : kEnglishStopwords) s.words.insert(w);
  s.punctuation.insert(kAsciiPunctuation.begin(), kAsciiPunctuation.end());
  s.include_digits = true;
  return s;
}

}  // namespace

const StopwordSet& StopwordSet::english() {
  static const StopwordSet set = make_english();
  return set;
}

StopwordSet StopwordSet::load(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot read stopword list " + path.string());
  StopwordSet s;
  s.punctuation = english().punctuation;
  s.include_digits = english().include_digits;
  std::string line;
  while (std::getline(in, line)) {
    auto word = text::trim(line.substr(0, line.find('#')));
    if (!word.empty()) s.words.insert(text::to_lower_ascii(word));
  }
  return s;
}

std::vector<std::string> tokenize(std::string_view title, std::optional<std::string_view> abstract) {
  std::string joined(title);
  if (abstract) {
    joined += ' ';
    joined += *abstract;
  }
  joined = text::to_lower_ascii(joined);
  std::vector<std::string> tokens;
  std::size_t i = 0;
  while (i < joined.size()) {
    while (i < joined.size() && is_space(joined[i])) ++i;
    std::size_t j = i;
    while (j < joined.size() && !is_space(joined[j])) ++j;
    std::size_t a = i, b = j;
    while (a < b && is_punct(joined[a])) ++a;
    while (b > a && is_punct(joined[b - 1])) --b;
    if (a < b) tokens.push_back(joined.substr(a, b - a));
    i = j;
  }
  return tokens;
}

std::vector<std::string> filter_stopwords(const std::vector<std::string>& tokens,
                                          const StopwordSet& stopwords) {
  std::vector<std::string> out;
  for (const auto& t : tokens) {
    if (t.empty() || stopwords.words.count(t)) continue;
    bool all_punct = true, has_letter = false, has_digit = false;
    for (char c : t) {
      if (!stopwords.punctuation.count(c)) all_punct = false;
      if ((c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') || static_cast<unsigned char>(c) >= 0x80) {
        has_letter = true;
      }
      if (c >= '0' && c <= '9') has_digit = true;
    }
    if (all_punct) continue;
    if (stopwords.include_digits && has_digit && !has_letter) continue;
    out.push_back(t);
  }
  return out;
}

std::vector<RankedEntry> keyword_frequencies(const Corpus& corpus, const StopwordSet& stopwords,
                                             std::size_t n) {
  if (n < 1) throw std::invalid_argument("n must be at least 1");
  std::map<std::string, std::int64_t> counts;
  for (const auto& r : corpus.records()) {
    std::optional<std::string_view> abstract;
    if (r.abstract) abstract = *r.abstract;
    for (auto& t : filter_stopwords(tokenize(r.title, abstract), stopwords)) ++counts[t];
  }
  return top_k(counts, n);
}

}  // namespace bibnet
