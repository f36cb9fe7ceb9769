#pragma once

#include <map>
#include <optional>
#include <set>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "coword/document.hpp"
#include "coword/keywords.hpp"

namespace coword {

struct ThesaurusGroup {
  std::string canonical;
  std::set<std::string> variants;

  friend bool operator==(const ThesaurusGroup&, const ThesaurusGroup&) = default;
};

/// User-curated unification table. Construction validates the invariants:
/// distinct canonicals, each variant in one group only, and no variant that
/// is also a canonical. Violations throw ThesaurusConflict.
class Thesaurus {
 public:
  Thesaurus() = default;
  explicit Thesaurus(std::vector<ThesaurusGroup> groups);

  const std::vector<ThesaurusGroup>& groups() const noexcept { return groups_; }
  bool empty() const noexcept { return groups_.empty(); }

  /// Canonical for `keyword`, or `keyword` itself when it is not a variant.
  const std::string& resolve(const std::string& keyword) const;

  /// Every canonical and variant term.
  std::vector<std::string> terms() const;

  friend bool operator==(const Thesaurus&, const Thesaurus&) = default;

 private:
  std::vector<ThesaurusGroup> groups_;
  std::map<std::string, std::string> variant_to_canonical_;
};

/// Reads `CANONICAL = VARIANT-1 | VARIANT-2` lines; `#` starts a comment.
/// Terms pass through canonical_form(). Repeated canonicals merge.
Thesaurus parse_thesaurus(std::string_view text);

/// Writes one line per group, groups and variants sorted.
std::string format_thesaurus(const Thesaurus& thesaurus);

/// Commented-out thesaurus lines for reviewer approval.
std::string format_merge_suggestions(std::span<const MergeCandidate> candidates);

/// Keywords of one document after normalization and unification.
struct KeywordDoc {
  std::string id;
  std::optional<int> year;
  /// Canonical, deduplicated, first-occurrence order.
  std::vector<std::string> keywords;

  friend bool operator==(const KeywordDoc&, const KeywordDoc&) = default;
};

struct KeywordCorpus {
  KeywordField field = KeywordField::AuthorKeywords;
  std::vector<KeywordDoc> documents;

  friend bool operator==(const KeywordCorpus&, const KeywordCorpus&) = default;
};

/// Normalizes the chosen keyword field of every document (plural folding
/// licensed by the corpus vocabulary plus the thesaurus terms), replaces
/// variants by their canonical and deduplicates each document.
KeywordCorpus apply_thesaurus(const Corpus& corpus, const Thesaurus& thesaurus,
                              KeywordField field = KeywordField::AuthorKeywords);

}  // namespace coword
