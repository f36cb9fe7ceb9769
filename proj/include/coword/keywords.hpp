#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <unordered_set>
#include <vector>

#include "coword/document.hpp"

namespace coword {

/// Surface canonicalization: trim, collapse whitespace, uppercase and join
/// words with hyphens. No plural folding. Throws EmptyKeyword.
std::string canonical_form(std::string_view raw);

/// Set of surface-canonical forms used to license plural folding.
using Vocabulary = std::unordered_set<std::string>;

/// Canonical keyword: canonical_form() followed by conditional plural
/// folding. A trailing `IES` becomes `Y`, or a trailing `S` is dropped
/// (stem of at least 3 bytes), only when the folded form is in `vocabulary`.
/// Folding repeats until no rule applies, so the function is idempotent.
std::string normalize_keyword(std::string_view raw, const Vocabulary& vocabulary);

enum class MergeReason { CaseOnly, Plural, HyphenSpace };
const char* to_string(MergeReason reason);

/// `variant` would be merged into `target`.
struct MergeCandidate {
  std::string variant;
  std::string target;
  MergeReason reason;
  std::size_t combined_frequency;

  friend bool operator==(const MergeCandidate&, const MergeCandidate&) = default;
};

/// Advisory near-duplicate detection over the raw keyword strings of one
/// field. Ordered by descending combined document frequency, then by
/// (variant, target).
std::vector<MergeCandidate> suggest_merges(const Corpus& corpus,
                                           KeywordField field = KeywordField::AuthorKeywords);

}  // namespace coword
