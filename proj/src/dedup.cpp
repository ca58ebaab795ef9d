#include "bibnet/dedup.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <stdexcept>

#include "bibnet/sampling.hpp"
#include "bibnet/strings.hpp"

namespace bibnet {

namespace {

std::size_t edit_distance(const std::u32string& a, const std::u32string& b) {
  if (a.size() < b.size()) return edit_distance(b, a);
  std::vector<std::size_t> row(b.size() + 1);
  for (std::size_t j = 0; j <= b.size(); ++j) row[j] = j;
  for (std::size_t i = 1; i <= a.size(); ++i) {
    std::size_t diag = row[0];
    row[0] = i;
    for (std::size_t j = 1; j <= b.size(); ++j) {
      std::size_t up = row[j];
      std::size_t sub = diag + (a[i - 1] == b[j - 1] ? 0 : 1);
      row[j] = std::min({up + 1, row[j - 1] + 1, sub});
      diag = up;
    }
  }
  return row[b.size()];
}

double ratio_of(const std::u32string& a, const std::u32string& b) {
  auto total = static_cast<double>(a.size() + b.size());
  return (total - static_cast<double>(edit_distance(a, b))) / total;
}

}  // namespace

std::size_t levenshtein(std::string_view a, std::string_view b) {
  return edit_distance(text::decode_utf8(a), text::decode_utf8(b));
}

double similarity_ratio(std::string_view a, std::string_view b) {
  auto ua = text::decode_utf8(a);
  auto ub = text::decode_utf8(b);
  if (ua.empty() && ub.empty()) throw std::invalid_argument("similarity of two empty strings");
  return ratio_of(ua, ub);
}

std::vector<SuspectPair> find_suspect_pairs(std::span<const std::string> names,
                                            const SuspectSearch& search) {
  if (!(search.threshold > 0.0 && search.threshold <= 1.0)) {
    throw std::invalid_argument("threshold must lie in (0, 1]");
  }
  std::vector<std::string> sorted(names.begin(), names.end());
  std::sort(sorted.begin(), sorted.end());
  sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());

  std::vector<std::u32string> decoded;
  decoded.reserve(sorted.size());
  for (const auto& s : sorted) decoded.push_back(text::decode_utf8(s));

  // Buckets of indices that get compared against each other.
  std::vector<std::vector<std::size_t>> buckets;
  if (search.bucket_by_first_letter) {
    std::map<char32_t, std::vector<std::size_t>> by_letter;
    for (std::size_t i = 0; i < decoded.size(); ++i) {
      by_letter[decoded[i].empty() ? U'\0' : decoded[i][0]].push_back(i);
    }
    for (auto& [letter, members] : by_letter) buckets.push_back(std::move(members));
  } else {
    buckets.emplace_back(decoded.size());
    for (std::size_t i = 0; i < decoded.size(); ++i) buckets[0][i] = i;
  }

  const double slack = 1.0 - search.threshold;
  std::vector<SuspectPair> pairs;
  for (const auto& bucket : buckets) {
    for (std::size_t x = 0; x < bucket.size(); ++x) {
      const auto& a = decoded[bucket[x]];
      for (std::size_t y = x + 1; y < bucket.size(); ++y) {
        const auto& b = decoded[bucket[y]];
        auto la = static_cast<double>(a.size());
        auto lb = static_cast<double>(b.size());
        if (la + lb == 0) continue;
        // lev >= ||a| - |b||, so a length gap wider than the allowed edit
        // budget can never reach the threshold.
        if (std::abs(la - lb) > slack * (la + lb) + 1e-12) continue;
        double r = ratio_of(a, b);
        if (r >= search.threshold) pairs.push_back({sorted[bucket[x]], sorted[bucket[y]], r});
      }
    }
  }
  std::sort(pairs.begin(), pairs.end(), [](const SuspectPair& p, const SuspectPair& q) {
    if (p.ratio != q.ratio) return p.ratio > q.ratio;
    if (p.name_a != q.name_a) return p.name_a < q.name_a;
    return p.name_b < q.name_b;
  });
  return pairs;
}

std::vector<std::string> sample_names(std::span<const std::string> names, std::size_t n,
                                      std::uint64_t seed) {
  std::vector<std::string> out;
  for (auto i : sample_indices(names.size(), n, seed)) out.push_back(names[i]);
  return out;
}

void write_suspect_pairs_csv(std::ostream& out, std::span<const SuspectPair> pairs) {
  out << "name_a,name_b,ratio\n";
  for (const auto& p : pairs) {
    out << text::csv_cell(p.name_a) << ',' << text::csv_cell(p.name_b) << ','
        << text::format_fixed6(p.ratio) << '\n';
  }
}

}  // namespace bibnet
