#pragma once

#include <cstddef>
#include <map>
#include <string>
#include <vector>

#include "coword/thesaurus.hpp"

namespace coword {

/// Documents per year; years inside the observed range without documents
/// are present with 0. Yearless documents are not counted.
std::map<int, std::size_t> docs_per_year(const Corpus& corpus);

struct KeywordStats {
  std::string keyword;
  std::size_t total_frequency = 0;
  double share = 0.0;
  /// Cumulative document count per year over the corpus' year range.
  std::map<int, std::size_t> per_year;

  friend bool operator==(const KeywordStats&, const KeywordStats&) = default;
};

enum class ShareDenominator { TopK, Corpus };

/// The `k` most frequent keywords (document frequency over dated documents),
/// ties by keyword.
/// Shares are relative to the returned set unless `denominator` is Corpus,
/// in which case they are relative to the summed frequency of every keyword.
/// Throws InvalidArgument when k < 1.
std::vector<KeywordStats> top_keywords(const KeywordCorpus& corpus, std::size_t k,
                                       ShareDenominator denominator = ShareDenominator::TopK);

}  // namespace coword
