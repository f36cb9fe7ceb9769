#include "coword/evolution.hpp"

#include <algorithm>
#include <iterator>
#include <tuple>

#include "coword/error.hpp"

namespace coword {

OverlapStats overlap_from_counts(std::size_t prev_count, std::size_t next_count, std::size_t shared) {
  if (prev_count == 0 || next_count == 0) throw EmptyVocabulary("overlap needs two non-empty vocabularies");
  if (shared > std::min(prev_count, next_count)) {
    throw InvalidArgument("shared keywords exceed a vocabulary size");
  }
  OverlapStats s;
  s.prev_count = prev_count;
  s.next_count = next_count;
  s.shared = shared;
  s.dropped = prev_count - shared;
  s.introduced = next_count - shared;
  s.stability = Rational(shared, std::min(prev_count, next_count));
  return s;
}

OverlapStats keyword_overlap(const std::set<std::string>& prev, const std::set<std::string>& next) {
  if (prev.empty() || next.empty()) throw EmptyVocabulary("overlap needs two non-empty vocabularies");
  std::size_t shared = 0;
  for (const auto& k : prev) shared += next.count(k);
  return overlap_from_counts(prev.size(), next.size(), shared);
}

Rational inclusion_index(const std::set<std::string>& u, const std::set<std::string>& v) {
  if (u.empty() || v.empty()) throw EmptySet("inclusion index of an empty set");
  std::size_t shared = 0;
  for (const auto& k : u) shared += v.count(k);
  return Rational(shared, std::min(u.size(), v.size()));
}

EvolutionMap build_evolution_map(std::span<const StrategicDiagram> diagrams) {
  if (diagrams.size() < 2) throw TooFewPeriods("an evolution map needs at least two periods");

  EvolutionMap map;
  for (const auto& d : diagrams) {
    EvolutionColumn col{d.period_label, {}};
    for (const auto& t : d.themes) col.themes.push_back({t.label, t.members, t.documents.size()});
    map.columns.push_back(std::move(col));
  }

  for (std::size_t c = 0; c + 1 < map.columns.size(); ++c) {
    std::vector<EvolutionLink> links;
    for (const auto& u : map.columns[c].themes) {
      const std::set<std::string> u_set(u.members.begin(), u.members.end());
      for (const auto& v : map.columns[c + 1].themes) {
        const std::set<std::string> v_set(v.members.begin(), v.members.end());
        std::vector<std::string> shared;
        std::set_intersection(u_set.begin(), u_set.end(), v_set.begin(), v_set.end(),
                              std::back_inserter(shared));
        if (shared.empty()) continue;
        const bool solid = std::binary_search(shared.begin(), shared.end(), u.label) ||
                           std::binary_search(shared.begin(), shared.end(), v.label);
        links.push_back({c, u.label, v.label, shared, inclusion_index(u_set, v_set), solid});
      }
    }
    std::sort(links.begin(), links.end(), [](const EvolutionLink& a, const EvolutionLink& b) {
      return std::tie(a.from, a.to) < std::tie(b.from, b.to);
    });
    map.links.insert(map.links.end(), links.begin(), links.end());
  }
  return map;
}

}  // namespace coword
