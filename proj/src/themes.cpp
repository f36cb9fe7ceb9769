#include "coword/themes.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <unordered_set>

#include "coword/error.hpp"

namespace coword {

const char* to_string(Quadrant q) {
  switch (q) {
    case Quadrant::Q1_Motor: return "Q1_Motor";
    case Quadrant::Q2_Basic: return "Q2_Basic";
    case Quadrant::Q3_Specialized: return "Q3_Specialized";
    case Quadrant::Q4_EmergingOrDeclining: return "Q4_EmergingOrDeclining";
  }
  return "?";
}

const char* to_string(Category c) {
  switch (c) {
    case Category::Cat1_CoreAndPeriphery: return "Cat1_CoreAndPeriphery";
    case Category::Cat2_InStructuring: return "Cat2_InStructuring";
    case Category::Cat3_Consolidated: return "Cat3_Consolidated";
  }
  return "?";
}

const char* to_string(AssociationMode m) { return m == AssociationMode::Core ? "core" : "loose"; }

std::optional<Quadrant> quadrant_from_string(std::string_view s) {
  for (auto q : {Quadrant::Q1_Motor, Quadrant::Q2_Basic, Quadrant::Q3_Specialized,
                 Quadrant::Q4_EmergingOrDeclining}) {
    if (s == to_string(q)) return q;
  }
  return std::nullopt;
}

std::optional<Category> category_from_string(std::string_view s) {
  for (auto c : {Category::Cat1_CoreAndPeriphery, Category::Cat2_InStructuring, Category::Cat3_Consolidated}) {
    if (s == to_string(c)) return c;
  }
  return std::nullopt;
}

std::optional<AssociationMode> association_mode_from_string(std::string_view s) {
  if (s == "core") return AssociationMode::Core;
  if (s == "loose") return AssociationMode::Loose;
  return std::nullopt;
}

namespace {

bool is_member(std::span<const NodeId> sorted_members, NodeId n) {
  return std::binary_search(sorted_members.begin(), sorted_members.end(), n);
}

std::vector<NodeId> sorted_copy(std::span<const NodeId> members) {
  std::vector<NodeId> out(members.begin(), members.end());
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

ThemeMetrics metrics_with(std::span<const NodeId> members, const CoWordNetwork& network,
                          const Adjacency& adjacency, std::span<const int> theme_of) {
  if (members.empty()) throw EmptyTheme("theme has no members");
  const auto sorted = sorted_copy(members);
  double external = 0.0;
  double internal = 0.0;
  for (NodeId m : sorted) {
    for (const auto& inc : adjacency.of(m)) {
      const double e = network.edges[inc.edge].equivalence.value();
      if (is_member(sorted, inc.neighbour)) {
        if (inc.neighbour > m) internal += e;
      } else if (inc.neighbour < theme_of.size() && theme_of[inc.neighbour] >= 0) {
        external += e;
      }
    }
  }
  return {10.0 * external, 100.0 * internal / static_cast<double>(sorted.size())};
}

std::string label_with(std::span<const NodeId> members, const CoWordNetwork& network,
                       const Adjacency& adjacency) {
  if (members.empty()) throw EmptyTheme("theme has no members");
  const auto sorted = sorted_copy(members);
  NodeId best = sorted.front();
  double best_strength = -1.0;
  for (NodeId m : sorted) {
    double strength = 0.0;
    for (const auto& inc : adjacency.of(m)) {
      if (is_member(sorted, inc.neighbour)) strength += network.edges[inc.edge].equivalence.value();
    }
    // ascending ids are ascending keywords, so strict > keeps the smallest on ties
    if (strength > best_strength) {
      best = m;
      best_strength = strength;
    }
  }
  return network.keywords[best];
}

}  // namespace

ThemeMetrics theme_metrics(std::span<const NodeId> members, const CoWordNetwork& network,
                           std::span<const int> theme_of) {
  if (members.empty()) throw EmptyTheme("theme has no members");
  return metrics_with(members, network, Adjacency(network), theme_of);
}

std::string theme_label(std::span<const NodeId> members, const CoWordNetwork& network) {
  if (members.empty()) throw EmptyTheme("theme has no members");
  return label_with(members, network, Adjacency(network));
}

std::vector<std::string> associate_documents(std::span<const std::string> members, const CorpusSlice& slice,
                                             AssociationMode mode) {
  if (members.empty()) throw EmptyTheme("theme has no members");
  const std::unordered_set<std::string> member_set(members.begin(), members.end());
  const std::size_t needed = (mode == AssociationMode::Core && member_set.size() > 1) ? 2 : 1;
  std::vector<std::string> out;
  for (const auto& d : slice.documents) {
    std::unordered_set<std::string_view> hits;
    for (const auto& k : d.keywords) {
      if (member_set.contains(k)) hits.insert(k);
    }
    if (hits.size() >= needed) out.push_back(d.id);
  }
  return out;
}

double median(std::vector<double> values) {
  if (values.empty()) return 0.0;
  std::sort(values.begin(), values.end());
  const std::size_t n = values.size();
  return n % 2 == 1 ? values[n / 2] : (values[n / 2 - 1] + values[n / 2]) / 2.0;
}

QuadrantSplit split_quadrants(std::span<const ThemeMetrics> metrics, double category_threshold) {
  QuadrantSplit split;
  if (metrics.empty()) return split;
  std::vector<double> c;
  std::vector<double> d;
  for (const auto& m : metrics) {
    c.push_back(m.centrality);
    d.push_back(m.density);
  }
  split.median_centrality = median(c);
  split.median_density = median(d);

  // Values equal to the median up to rounding count as high.
  const auto high = [](double value, double med) {
    return value >= med - 1e-9 * std::max(1.0, std::abs(med));
  };
  std::array<std::size_t, 4> occupancy{};
  for (const auto& m : metrics) {
    const bool hc = high(m.centrality, split.median_centrality);
    const bool hd = high(m.density, split.median_density);
    const Quadrant q = hc ? (hd ? Quadrant::Q1_Motor : Quadrant::Q2_Basic)
                          : (hd ? Quadrant::Q3_Specialized : Quadrant::Q4_EmergingOrDeclining);
    split.quadrants.push_back(q);
    ++occupancy[static_cast<std::size_t>(q)];
  }

  const double n = static_cast<double>(metrics.size());
  const double first_bisector = static_cast<double>(occupancy[0] + occupancy[3]) / n;
  const double second_bisector = static_cast<double>(occupancy[1] + occupancy[2]) / n;
  if (std::all_of(occupancy.begin(), occupancy.end(), [](std::size_t k) { return k > 0; })) {
    split.category = Category::Cat3_Consolidated;
  } else if (first_bisector >= category_threshold) {
    split.category = Category::Cat1_CoreAndPeriphery;
  } else if (second_bisector >= category_threshold) {
    split.category = Category::Cat2_InStructuring;
  } else {
    split.category = Category::Cat3_Consolidated;
  }
  return split;
}

namespace {

// associate_documents for every theme in one pass over the slice.
std::vector<std::vector<std::string>> associate_all(const std::vector<MemberSet>& clusters,
                                                    const std::vector<int>& theme_of, const CoWordNetwork& network,
                                                    const CorpusSlice& slice, AssociationMode mode) {
  std::vector<std::vector<std::string>> out(clusters.size());
  std::vector<std::size_t> needed(clusters.size());
  for (std::size_t t = 0; t < clusters.size(); ++t) {
    needed[t] = (mode == AssociationMode::Core && clusters[t].size() > 1) ? 2 : 1;
  }
  std::vector<NodeId> hits;
  for (const auto& d : slice.documents) {
    hits.clear();
    for (const auto& k : d.keywords) {
      if (const auto id = network.find(k); id && theme_of[*id] >= 0) hits.push_back(*id);
    }
    if (hits.empty()) continue;
    std::sort(hits.begin(), hits.end(), [&](NodeId a, NodeId b) {
      return theme_of[a] != theme_of[b] ? theme_of[a] < theme_of[b] : a < b;
    });
    hits.erase(std::unique(hits.begin(), hits.end()), hits.end());
    for (std::size_t i = 0; i < hits.size();) {
      const int t = theme_of[hits[i]];
      std::size_t j = i;
      while (j < hits.size() && theme_of[hits[j]] == t) ++j;
      if (j - i >= needed[t]) out[t].push_back(d.id);
      i = j;
    }
  }
  return out;
}

}  // namespace

StrategicDiagram build_strategic_diagram(const CoWordNetwork& network, const CorpusSlice& slice,
                                         const DiagramParams& params) {
  const auto clusters = cluster_simple_centers(network, params.cluster);
  const Adjacency adjacency(network);

  std::vector<int> theme_of(network.node_count(), -1);
  for (std::size_t t = 0; t < clusters.size(); ++t) {
    for (NodeId n : clusters[t]) theme_of[n] = static_cast<int>(t);
  }

  auto documents = associate_all(clusters, theme_of, network, slice, params.association);

  StrategicDiagram diagram;
  diagram.period_label = network.period_label;
  std::vector<ThemeMetrics> metrics;
  for (std::size_t t = 0; t < clusters.size(); ++t) {
    const auto& members = clusters[t];
    Theme theme;
    theme.label = label_with(members, network, adjacency);
    for (NodeId n : members) theme.members.push_back(network.keywords[n]);
    for (NodeId m : members) {
      for (const auto& inc : adjacency.of(m)) {
        if (inc.neighbour > m && is_member(members, inc.neighbour)) {
          const auto& e = network.edges[inc.edge];
          theme.internal_edges.push_back(
              {network.keywords[e.u], network.keywords[e.v], e.cooccurrence, e.equivalence});
        }
      }
    }
    const auto m = metrics_with(members, network, adjacency, theme_of);
    theme.centrality = m.centrality;
    theme.density = m.density;
    theme.documents = std::move(documents[t]);
    metrics.push_back(m);
    diagram.themes.push_back(std::move(theme));
  }

  const auto split = split_quadrants(metrics, params.category_threshold);
  diagram.median_centrality = split.median_centrality;
  diagram.median_density = split.median_density;
  diagram.category = split.category;
  for (std::size_t i = 0; i < diagram.themes.size(); ++i) diagram.themes[i].quadrant = split.quadrants[i];

  std::sort(diagram.themes.begin(), diagram.themes.end(), [](const Theme& a, const Theme& b) {
    if (a.quadrant != b.quadrant) return a.quadrant < b.quadrant;
    if (a.centrality != b.centrality) return a.centrality > b.centrality;
    return a.label < b.label;
  });
  return diagram;
}

}  // namespace coword
