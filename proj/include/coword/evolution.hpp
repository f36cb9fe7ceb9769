#pragma once

#include <cstddef>
#include <set>
#include <span>
#include <string>
#include <vector>

#include "coword/rational.hpp"
#include "coword/themes.hpp"

namespace coword {

struct OverlapStats {
  std::size_t prev_count = 0;
  std::size_t next_count = 0;
  std::size_t shared = 0;
  std::size_t dropped = 0;
  std::size_t introduced = 0;
  Rational stability;  // shared / min(prev_count, next_count)

  friend bool operator==(const OverlapStats&, const OverlapStats&) = default;
};

/// Throws EmptyVocabulary when either set is empty.
OverlapStats keyword_overlap(const std::set<std::string>& prev, const std::set<std::string>& next);

/// Overlap from bare counts (sizes and intersection), for reported figures.
OverlapStats overlap_from_counts(std::size_t prev_count, std::size_t next_count,
                                 std::size_t shared);

/// |u ∩ v| / min(|u|, |v|). Throws EmptySet.
Rational inclusion_index(const std::set<std::string>& u, const std::set<std::string>& v);

struct ThemeRef {
  std::string label;
  std::vector<std::string> members;
  std::size_t documents = 0;

  friend bool operator==(const ThemeRef&, const ThemeRef&) = default;
};

struct EvolutionColumn {
  std::string period_label;
  std::vector<ThemeRef> themes;

  friend bool operator==(const EvolutionColumn&, const EvolutionColumn&) = default;
};

struct EvolutionLink {
  std::size_t column = 0;  // link runs from column to column + 1
  std::string from;        // theme label in `column`
  std::string to;          // theme label in `column + 1`
  std::vector<std::string> shared_keywords;
  Rational inclusion;
  bool solid = false;

  friend bool operator==(const EvolutionLink&, const EvolutionLink&) = default;
};

struct EvolutionMap {
  std::vector<EvolutionColumn> columns;
  std::vector<EvolutionLink> links;

  friend bool operator==(const EvolutionMap&, const EvolutionMap&) = default;
};

/// Links every theme pair of adjacent periods that shares a keyword. A link
/// is solid when the shared set contains the label of either theme. Links
/// are ordered by column, then source label, then target label. Throws
/// TooFewPeriods for fewer than two diagrams.
EvolutionMap build_evolution_map(std::span<const StrategicDiagram> diagrams);

}  // namespace coword
