#include "coword/thesaurus.hpp"

#include <algorithm>
#include <sstream>
#include <unordered_map>

#include "coword/error.hpp"
#include "coword/text.hpp"

namespace coword {

Thesaurus::Thesaurus(std::vector<ThesaurusGroup> groups) : groups_(std::move(groups)) {
  std::sort(groups_.begin(), groups_.end(),
            [](const auto& a, const auto& b) { return a.canonical < b.canonical; });
  std::set<std::string> canonicals;
  for (const auto& g : groups_) {
    if (g.canonical.empty()) throw ThesaurusConflict("empty canonical term");
    if (!canonicals.insert(g.canonical).second) {
      throw ThesaurusConflict("canonical " + g.canonical + " defined twice");
    }
  }
  for (const auto& g : groups_) {
    for (const auto& v : g.variants) {
      if (canonicals.contains(v)) {
        throw ThesaurusConflict("variant " + v + " of " + g.canonical + " is itself a canonical");
      }
      auto [it, inserted] = variant_to_canonical_.emplace(v, g.canonical);
      if (!inserted) {
        throw ThesaurusConflict("variant " + v + " appears under both " + it->second + " and " +
                                g.canonical);
      }
    }
  }
}

const std::string& Thesaurus::resolve(const std::string& keyword) const {
  auto it = variant_to_canonical_.find(keyword);
  return it == variant_to_canonical_.end() ? keyword : it->second;
}

std::vector<std::string> Thesaurus::terms() const {
  std::vector<std::string> out;
  for (const auto& g : groups_) {
    out.push_back(g.canonical);
    out.insert(out.end(), g.variants.begin(), g.variants.end());
  }
  return out;
}

Thesaurus parse_thesaurus(std::string_view text) {
  std::map<std::string, std::set<std::string>> groups;
  std::map<std::string, std::pair<std::string, std::size_t>> variant_owner;
  std::map<std::string, std::size_t> canonical_line;

  std::size_t line_no = 0;
  std::istringstream in{std::string(text)};
  std::string line;
  const auto fail = [&](const std::string& what) {
    throw ThesaurusConflict("thesaurus line " + std::to_string(line_no) + ": " + what);
  };
  while (std::getline(in, line)) {
    ++line_no;
    const auto body = text::trim(line);
    if (body.empty() || body.front() == '#') continue;
    const auto eq = body.find('=');
    if (eq == std::string_view::npos) fail("expected 'CANONICAL = VARIANT | ...'");
    std::string canonical;
    try {
      canonical = canonical_form(body.substr(0, eq));
    } catch (const EmptyKeyword&) {
      fail("empty canonical term");
    }
    canonical_line.try_emplace(canonical, line_no);
    auto& variants = groups[canonical];
    for (const auto& raw : text::split_trimmed(body.substr(eq + 1), '|')) {
      std::string v = canonical_form(raw);
      if (v == canonical) fail(v + " is listed as a variant of itself");
      auto [it, inserted] = variant_owner.emplace(v, std::pair{canonical, line_no});
      if (!inserted && it->second.first != canonical) {
        fail("variant " + v + " already belongs to " + it->second.first + " (line " +
             std::to_string(it->second.second) + ")");
      }
      variants.insert(std::move(v));
    }
  }
  for (const auto& [variant, owner] : variant_owner) {
    if (groups.contains(variant)) {
      line_no = owner.second;
      fail("variant " + variant + " is also a canonical (line " +
           std::to_string(canonical_line.at(variant)) + ")");
    }
  }

  std::vector<ThesaurusGroup> out;
  for (auto& [canonical, variants] : groups) out.push_back({canonical, std::move(variants)});
  return Thesaurus(std::move(out));
}

std::string format_thesaurus(const Thesaurus& thesaurus) {
  std::string out;
  for (const auto& g : thesaurus.groups()) {
    out += g.canonical;
    out += " =";
    bool first = true;
    for (const auto& v : g.variants) {
      out += first ? " " : " | ";
      out += v;
      first = false;
    }
    out += '\n';
  }
  return out;
}

std::string format_merge_suggestions(std::span<const MergeCandidate> candidates) {
  std::string out = "# Suggested keyword merges. Remove the leading '# ' to accept a line.\n";
  for (const auto& c : candidates) {
    const std::string target = canonical_form(c.target);
    const std::string variant = canonical_form(c.variant);
    out += "## ";
    out += to_string(c.reason);
    out += ", combined frequency " + std::to_string(c.combined_frequency) + ": '" + c.variant +
           "' -> '" + c.target + "'";
    if (target == variant) {
      out += " (already unified by normalization)\n";
      continue;
    }
    out += "\n# " + target + " = " + variant + "\n";
  }
  return out;
}

KeywordCorpus apply_thesaurus(const Corpus& corpus, const Thesaurus& thesaurus, KeywordField field) {
  Vocabulary vocabulary;
  std::unordered_map<std::string, std::string> surface;  // raw -> canonical_form
  for (const auto& doc : corpus.documents) {
    for (const auto& raw : doc.keywords(field)) {
      if (surface.contains(raw)) continue;
      auto form = canonical_form(raw);
      vocabulary.insert(form);
      surface.emplace(raw, std::move(form));
    }
  }
  std::set<std::string> thesaurus_terms;
  for (auto& t : thesaurus.terms()) {
    vocabulary.insert(t);
    thesaurus_terms.insert(std::move(t));
  }

  std::unordered_map<std::string, std::string> resolved;  // canonical_form -> final
  const auto finalize = [&](const std::string& form) -> const std::string& {
    auto it = resolved.find(form);
    if (it != resolved.end()) return it->second;
    std::string out = thesaurus_terms.contains(form) ? thesaurus.resolve(form)
                                                     : thesaurus.resolve(normalize_keyword(form, vocabulary));
    return resolved.emplace(form, std::move(out)).first->second;
  };

  KeywordCorpus out;
  out.field = field;
  out.documents.reserve(corpus.documents.size());
  for (const auto& doc : corpus.documents) {
    KeywordDoc kd{doc.id, doc.year, {}};
    for (const auto& raw : doc.keywords(field)) {
      const std::string& k = finalize(surface.at(raw));
      if (std::find(kd.keywords.begin(), kd.keywords.end(), k) == kd.keywords.end()) {
        kd.keywords.push_back(k);
      }
    }
    out.documents.push_back(std::move(kd));
  }
  return out;
}

}  // namespace coword
