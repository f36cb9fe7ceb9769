#include "coword/report.hpp"

#include <algorithm>
#include <unordered_map>

#include "coword/error.hpp"

namespace coword {

std::map<int, std::size_t> docs_per_year(const Corpus& corpus) {
  std::map<int, std::size_t> out;
  for (const auto& d : corpus.documents) {
    if (d.year) ++out[*d.year];
  }
  if (!out.empty()) {
    for (int y = out.begin()->first; y <= out.rbegin()->first; ++y) out.try_emplace(y, 0);
  }
  return out;
}

std::vector<KeywordStats> top_keywords(const KeywordCorpus& corpus, std::size_t k, ShareDenominator denominator) {
  if (k < 1) throw InvalidArgument("top_keywords needs k >= 1");

  std::unordered_map<std::string, std::size_t> frequency;
  std::unordered_map<std::string, std::map<int, std::size_t>> by_year;
  std::optional<std::pair<int, int>> range;
  for (const auto& d : corpus.documents) {
    if (!d.year) continue;
    range = range ? std::pair{std::min(range->first, *d.year), std::max(range->second, *d.year)}
                  : std::pair{*d.year, *d.year};
    std::vector<std::string_view> seen;
    for (const auto& kw : d.keywords) {
      if (std::find(seen.begin(), seen.end(), kw) != seen.end()) continue;
      seen.push_back(kw);
      ++frequency[kw];
      ++by_year[kw][*d.year];
    }
  }

  std::vector<std::pair<std::string, std::size_t>> ranked(frequency.begin(), frequency.end());
  std::sort(ranked.begin(), ranked.end(), [](const auto& a, const auto& b) {
    return a.second != b.second ? a.second > b.second : a.first < b.first;
  });
  std::size_t corpus_total = 0;
  for (const auto& [kw, f] : ranked) corpus_total += f;
  ranked.resize(std::min(k, ranked.size()));
  std::size_t top_total = 0;
  for (const auto& [kw, f] : ranked) top_total += f;
  const auto denom = static_cast<double>(denominator == ShareDenominator::TopK ? top_total : corpus_total);

  std::vector<KeywordStats> out;
  for (const auto& [kw, f] : ranked) {
    KeywordStats s{kw, f, static_cast<double>(f) / denom, {}};
    if (range) {
      const auto& years = by_year[kw];
      std::size_t cumulative = 0;
      for (int y = range->first; y <= range->second; ++y) {
        if (auto it = years.find(y); it != years.end()) cumulative += it->second;
        s.per_year[y] = cumulative;
      }
    }
    out.push_back(std::move(s));
  }
  return out;
}

}  // namespace coword
