#include "coword/periods.hpp"

#include <algorithm>
#include <unordered_map>

#include "coword/error.hpp"

namespace coword {

PeriodScheme::PeriodScheme(std::vector<Period> periods) : periods_(std::move(periods)) {
  if (periods_.empty()) throw InvalidScheme("period scheme has no periods");
  for (std::size_t i = 0; i < periods_.size(); ++i) {
    const auto& p = periods_[i];
    if (p.label.empty()) throw InvalidScheme("period " + std::to_string(i + 1) + " has no label");
    if (p.start_year > p.end_year) {
      throw InvalidScheme("period '" + p.label + "' starts after it ends");
    }
    for (std::size_t j = 0; j < i; ++j) {
      if (periods_[j].label == p.label) throw InvalidScheme("period label '" + p.label + "' repeats");
    }
    if (i == 0) continue;
    const auto& prev = periods_[i - 1];
    if (p.start_year <= prev.end_year) {
      const bool overlap = p.end_year >= prev.start_year;
      throw InvalidScheme("periods '" + prev.label + "' and '" + p.label + "' " +
                          (overlap ? "overlap" : "are not in ascending order"));
    }
  }
}

PeriodScheme PeriodScheme::default_scheme() {
  return PeriodScheme({{"2005-2010", 2005, 2010}, {"2011-2016", 2011, 2016}, {"2017-2022", 2017, 2022}});
}

std::set<std::string> CorpusSlice::vocabulary() const {
  std::set<std::string> out;
  for (const auto& d : documents) out.insert(d.keywords.begin(), d.keywords.end());
  return out;
}

SliceResult slice_periods(const KeywordCorpus& corpus, const PeriodScheme& scheme) {
  SliceResult result;
  for (const auto& p : scheme.periods()) result.slices.push_back({p, corpus.field, {}});
  for (const auto& doc : corpus.documents) {
    if (!doc.year) {
      ++result.dropped_without_year;
      continue;
    }
    auto it = std::find_if(result.slices.begin(), result.slices.end(),
                           [&](const CorpusSlice& s) { return s.period.contains(*doc.year); });
    if (it == result.slices.end()) {
      ++result.dropped_out_of_range;
    } else {
      it->documents.push_back(doc);
    }
  }
  return result;
}

CorpusSlice filter_keywords(const CorpusSlice& slice, int min_frequency) {
  if (min_frequency < 1) throw InvalidArgument("min_frequency must be at least 1");
  std::unordered_map<std::string, int> frequency;
  for (const auto& d : slice.documents) {
    std::set<std::string> distinct(d.keywords.begin(), d.keywords.end());
    for (const auto& k : distinct) ++frequency[k];
  }
  CorpusSlice out{slice.period, slice.field, {}};
  out.documents.reserve(slice.documents.size());
  for (const auto& d : slice.documents) {
    KeywordDoc kept{d.id, d.year, {}};
    for (const auto& k : d.keywords) {
      if (frequency.at(k) >= min_frequency) kept.keywords.push_back(k);
    }
    out.documents.push_back(std::move(kept));
  }
  return out;
}

}  // namespace coword
