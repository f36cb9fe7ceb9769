#include "coword/keywords.hpp"

#include <algorithm>
#include <map>
#include <unordered_map>

#include "coword/error.hpp"
#include "coword/text.hpp"

namespace coword {

std::string canonical_form(std::string_view raw) {
  std::string form = text::to_upper(text::collapse_whitespace(raw));
  if (form.empty()) throw EmptyKeyword("keyword is empty after trimming");
  std::replace(form.begin(), form.end(), ' ', '-');
  return form;
}

std::string normalize_keyword(std::string_view raw, const Vocabulary& vocabulary) {
  std::string form = canonical_form(raw);
  for (;;) {
    if (form.size() > 3 && form.ends_with("IES")) {
      std::string folded = form.substr(0, form.size() - 3) + "Y";
      if (vocabulary.contains(folded)) {
        form = std::move(folded);
        continue;
      }
    }
    if (form.size() >= 4 && form.ends_with('S')) {
      std::string folded = form.substr(0, form.size() - 1);
      if (vocabulary.contains(folded)) {
        form = std::move(folded);
        continue;
      }
    }
    return form;
  }
}

const char* to_string(MergeReason reason) {
  switch (reason) {
    case MergeReason::CaseOnly: return "CaseOnly";
    case MergeReason::Plural: return "Plural";
    case MergeReason::HyphenSpace: return "HyphenSpace";
  }
  return "?";
}

std::vector<MergeCandidate> suggest_merges(const Corpus& corpus, KeywordField field) {
  // document frequency of every raw spelling
  std::map<std::string, std::size_t> frequency;
  for (const auto& doc : corpus.documents) {
    std::vector<std::string> seen;
    for (const auto& raw : doc.keywords(field)) {
      std::string k(text::trim(raw));
      if (k.empty() || std::find(seen.begin(), seen.end(), k) != seen.end()) continue;
      seen.push_back(k);
      ++frequency[k];
    }
  }

  struct Group {
    std::vector<std::string> spellings;
    std::string representative;
    std::size_t total = 0;
  };
  std::map<std::string, Group> groups;  // keyed by canonical form
  for (const auto& [raw, freq] : frequency) {
    auto& g = groups[canonical_form(raw)];
    g.spellings.push_back(raw);
    g.total += freq;
    if (g.representative.empty() || freq > frequency.at(g.representative)) g.representative = raw;
  }

  std::vector<MergeCandidate> out;
  for (const auto& [key, g] : groups) {
    const std::string rep_surface = text::to_upper(text::collapse_whitespace(g.representative));
    for (const auto& s : g.spellings) {
      if (s == g.representative) continue;
      const bool case_only = text::to_upper(text::collapse_whitespace(s)) == rep_surface;
      out.push_back({s, g.representative, case_only ? MergeReason::CaseOnly : MergeReason::HyphenSpace,
                     frequency.at(s) + frequency.at(g.representative)});
    }
  }
  for (const auto& [key, g] : groups) {
    std::vector<std::string> singulars;
    if (key.size() > 3 && key.ends_with("IES")) singulars.push_back(key.substr(0, key.size() - 3) + "Y");
    if (key.size() >= 4 && key.ends_with('S')) singulars.push_back(key.substr(0, key.size() - 1));
    for (const auto& singular : singulars) {
      auto it = groups.find(singular);
      if (it == groups.end()) continue;
      out.push_back({g.representative, it->second.representative, MergeReason::Plural,
                     g.total + it->second.total});
      break;
    }
  }

  std::sort(out.begin(), out.end(), [](const MergeCandidate& a, const MergeCandidate& b) {
    if (a.combined_frequency != b.combined_frequency) return a.combined_frequency > b.combined_frequency;
    if (a.variant != b.variant) return a.variant < b.variant;
    return a.target < b.target;
  });
  return out;
}

}  // namespace coword
