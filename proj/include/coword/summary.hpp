#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <utility>

#include "coword/document.hpp"

namespace coword {

struct SummaryStats {
  KeywordField keyword_field = KeywordField::AuthorKeywords;
  std::size_t n_documents = 0;
  std::map<DocType, std::size_t> counts_by_doc_type;
  std::size_t n_distinct_author_keywords = 0;
  std::size_t n_distinct_keywords_plus = 0;
  std::size_t n_authors = 0;
  std::size_t n_single_authored_docs = 0;
  std::optional<std::pair<int, int>> year_range;

  friend bool operator==(const SummaryStats&, const SummaryStats&) = default;
};

/// Table-style corpus statistics. Keyword and author distinctness compare
/// trimmed raw strings case-insensitively. `keyword_field` is recorded so
/// reports know which field the analysis used.
SummaryStats corpus_summary(const Corpus& corpus, KeywordField keyword_field);

}  // namespace coword
