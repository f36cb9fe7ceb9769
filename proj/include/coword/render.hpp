#pragma once

#include <array>
#include <span>
#include <string>

#include "coword/evolution.hpp"

namespace coword {

struct RenderStyle {
  int width = 900;
  int height = 700;
  int margin = 70;
  std::string font_family = "sans-serif";
  double min_radius = 6.0;
  double max_radius = 40.0;
  std::array<std::string, 4> quadrant_colors = {"#d62728", "#1f77b4", "#2ca02c", "#7f7f7f"};
  double min_stroke = 1.0;
  double max_stroke = 8.0;
  std::string dash_pattern = "6,4";

  /// Throws InvalidArgument unless min_radius < max_radius and the canvas is
  /// at least 200x200.
  void validate() const;

  friend bool operator==(const RenderStyle&, const RenderStyle&) = default;
};

/// Radius giving circle area proportional to `documents`, relative to the
/// largest count, clamped to the style bounds.
double sphere_radius(std::size_t documents, std::size_t max_documents, const RenderStyle& style);

/// Stroke width affine in the inclusion index.
double link_stroke(double inclusion, const RenderStyle& style);

/// Throws EmptyDiagram.
std::string render_strategic_svg(const StrategicDiagram& diagram, const RenderStyle& style);

/// Throws TooFewPeriods.
std::string render_evolution_svg(const EvolutionMap& map, const RenderStyle& style);

struct PeriodVocabulary {
  std::string label;
  std::size_t size = 0;
};

/// `stats[i]` relates `periods[i]` and `periods[i + 1]`. Throws EmptyChain
/// or InvalidArgument when the lengths disagree.
std::string render_overlap_svg(std::span<const PeriodVocabulary> periods,
                               std::span<const OverlapStats> stats, const RenderStyle& style);

/// DOT graph of a whole network. Throws EmptyGraph.
std::string render_network_dot(const CoWordNetwork& network);

/// DOT graph of one theme's members and internal edges. Throws EmptyGraph.
std::string render_network_dot(const Theme& theme, const CoWordNetwork& network);

}  // namespace coword
