#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "coword/clustering.hpp"

namespace coword {

enum class Quadrant { Q1_Motor, Q2_Basic, Q3_Specialized, Q4_EmergingOrDeclining };
enum class Category { Cat1_CoreAndPeriphery, Cat2_InStructuring, Cat3_Consolidated };
enum class AssociationMode { Core, Loose };

const char* to_string(Quadrant q);
const char* to_string(Category c);
const char* to_string(AssociationMode m);
std::optional<Quadrant> quadrant_from_string(std::string_view s);
std::optional<Category> category_from_string(std::string_view s);
std::optional<AssociationMode> association_mode_from_string(std::string_view s);

struct ThemeMetrics {
  double centrality = 0.0;
  double density = 0.0;
};

/// Centrality is 10 times the summed equivalence of edges joining a member
/// to a keyword of another theme (`theme_of[node]` is the theme index, or
/// -1 when unassigned). Density is 100 times the summed equivalence of
/// internal edges divided by the member count. Throws EmptyTheme.
ThemeMetrics theme_metrics(std::span<const NodeId> members, const CoWordNetwork& network,
                           std::span<const int> theme_of);

/// Documents associated with a theme. Core: at least two member keywords
/// (one for a singleton theme). Loose: at least one. Returns ids in slice
/// order. Throws EmptyTheme.
std::vector<std::string> associate_documents(std::span<const std::string> members,
                                             const CorpusSlice& slice, AssociationMode mode);

/// Member with the largest summed internal equivalence; ties go to the
/// lexicographically smallest keyword. Throws EmptyTheme.
std::string theme_label(std::span<const NodeId> members, const CoWordNetwork& network);

/// Network edge addressed by keyword, `a < b`.
struct ThemeEdge {
  std::string a;
  std::string b;
  std::uint32_t cooccurrence = 0;
  Rational equivalence;

  friend bool operator==(const ThemeEdge&, const ThemeEdge&) = default;
};

struct Theme {
  std::string label;
  std::vector<std::string> members;  // sorted
  std::vector<ThemeEdge> internal_edges;
  double centrality = 0.0;
  double density = 0.0;
  std::vector<std::string> documents;
  Quadrant quadrant = Quadrant::Q4_EmergingOrDeclining;

  friend bool operator==(const Theme&, const Theme&) = default;
};

struct QuadrantSplit {
  double median_centrality = 0.0;
  double median_density = 0.0;
  std::vector<Quadrant> quadrants;
  std::optional<Category> category;
};

/// Median split with `>=` counting as high, plus the structure category:
/// Cat3 when all four quadrants are occupied, else Cat1 when at least
/// `category_threshold` of themes lie in Q1+Q4, else Cat2 when at least that
/// share lies in Q2+Q3, else Cat3. No themes yields no category.
QuadrantSplit split_quadrants(std::span<const ThemeMetrics> metrics, double category_threshold);

double median(std::vector<double> values);

struct DiagramParams {
  ClusterParams cluster;
  AssociationMode association = AssociationMode::Core;
  double category_threshold = 0.70;
};

struct StrategicDiagram {
  std::string period_label;
  std::vector<Theme> themes;
  double median_centrality = 0.0;
  double median_density = 0.0;
  std::optional<Category> category;

  friend bool operator==(const StrategicDiagram&, const StrategicDiagram&) = default;
};

/// Clusters, labels and measures the themes of one period. Themes are listed
/// by quadrant, then descending centrality, then label (table order).
StrategicDiagram build_strategic_diagram(const CoWordNetwork& network, const CorpusSlice& slice,
                                         const DiagramParams& params);

}  // namespace coword
