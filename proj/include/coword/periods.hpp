#pragma once

#include <cstddef>
#include <set>
#include <string>
#include <vector>

#include "coword/thesaurus.hpp"

namespace coword {

struct Period {
  std::string label;
  int start_year = 0;
  int end_year = 0;  // inclusive

  bool contains(int year) const noexcept { return year >= start_year && year <= end_year; }
  friend bool operator==(const Period&, const Period&) = default;
};

/// Ascending, non-overlapping periods. Throws InvalidScheme naming the
/// offending periods.
class PeriodScheme {
 public:
  PeriodScheme() = default;
  explicit PeriodScheme(std::vector<Period> periods);

  const std::vector<Period>& periods() const noexcept { return periods_; }
  std::size_t size() const noexcept { return periods_.size(); }

  /// 2005-2010, 2011-2016, 2017-2022.
  static PeriodScheme default_scheme();

  friend bool operator==(const PeriodScheme&, const PeriodScheme&) = default;

 private:
  std::vector<Period> periods_;
};

struct CorpusSlice {
  Period period;
  KeywordField field = KeywordField::AuthorKeywords;
  std::vector<KeywordDoc> documents;

  /// Distinct keywords over all documents, sorted.
  std::set<std::string> vocabulary() const;

  friend bool operator==(const CorpusSlice&, const CorpusSlice&) = default;
};

struct SliceResult {
  std::vector<CorpusSlice> slices;
  std::size_t dropped_out_of_range = 0;
  std::size_t dropped_without_year = 0;
};

SliceResult slice_periods(const KeywordCorpus& corpus, const PeriodScheme& scheme);

/// Removes keywords whose document frequency in the slice is below
/// `min_frequency`. Documents left empty stay in the slice.
CorpusSlice filter_keywords(const CorpusSlice& slice, int min_frequency);

}  // namespace coword
