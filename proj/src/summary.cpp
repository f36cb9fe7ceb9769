#include "coword/summary.hpp"

#include <algorithm>
#include <unordered_set>

#include "coword/text.hpp"

namespace coword {

namespace {
std::string fold_case(const std::string& s) { return text::to_upper(text::trim(s)); }
}  // namespace

SummaryStats corpus_summary(const Corpus& corpus, KeywordField keyword_field) {
  SummaryStats stats;
  stats.keyword_field = keyword_field;
  for (DocType t : kAllDocTypes) stats.counts_by_doc_type[t] = 0;

  std::unordered_set<std::string> author_keywords;
  std::unordered_set<std::string> keywords_plus;
  std::unordered_set<std::string> authors;

  for (const auto& doc : corpus.documents) {
    ++stats.n_documents;
    ++stats.counts_by_doc_type[doc.doc_type];
    for (const auto& k : doc.author_keywords) author_keywords.insert(fold_case(k));
    for (const auto& k : doc.keywords_plus) keywords_plus.insert(fold_case(k));
    for (const auto& a : doc.authors) authors.insert(fold_case(a));
    if (doc.authors.size() == 1) ++stats.n_single_authored_docs;
    if (doc.year) {
      if (!stats.year_range) {
        stats.year_range = std::pair{*doc.year, *doc.year};
      } else {
        stats.year_range->first = std::min(stats.year_range->first, *doc.year);
        stats.year_range->second = std::max(stats.year_range->second, *doc.year);
      }
    }
  }
  stats.n_distinct_author_keywords = author_keywords.size();
  stats.n_distinct_keywords_plus = keywords_plus.size();
  stats.n_authors = authors.size();
  return stats;
}

}  // namespace coword
