#include "coword/clustering.hpp"

#include <algorithm>
#include <functional>
#include <queue>

#include "coword/error.hpp"

namespace coword {

void ClusterParams::validate() const {
  if (min_keyword_frequency < 1) throw InvalidArgument("min_keyword_frequency must be at least 1");
  if (min_cooccurrence < 1) throw InvalidArgument("min_cooccurrence must be at least 1");
  if (min_network_size < 1 || min_network_size > max_network_size) {
    throw InvalidArgument("network size bounds must satisfy 1 <= min_network_size <= max_network_size");
  }
}

std::vector<MemberSet> cluster_simple_centers(const CoWordNetwork& network, const ClusterParams& params) {
  params.validate();
  const auto& edges = network.edges;

  std::vector<std::uint32_t> ranked;
  for (std::uint32_t e = 0; e < edges.size(); ++e) {
    const auto& edge = edges[e];
    if (edge.cooccurrence >= static_cast<std::uint32_t>(params.min_cooccurrence) &&
        network.counts[edge.u] >= static_cast<std::uint32_t>(params.min_keyword_frequency) &&
        network.counts[edge.v] >= static_cast<std::uint32_t>(params.min_keyword_frequency)) {
      ranked.push_back(e);
    }
  }
  // Node ids follow keyword order, so (u, v) ascending is the lexicographic tie-break.
  std::sort(ranked.begin(), ranked.end(), [&](std::uint32_t a, std::uint32_t b) {
    const auto& ea = edges[a];
    const auto& eb = edges[b];
    if (ea.equivalence != eb.equivalence) return ea.equivalence > eb.equivalence;
    return std::pair{ea.u, ea.v} < std::pair{eb.u, eb.v};
  });

  constexpr std::uint32_t kIneligible = ~std::uint32_t{0};
  std::vector<std::uint32_t> rank_of(edges.size(), kIneligible);
  for (std::uint32_t r = 0; r < ranked.size(); ++r) rank_of[ranked[r]] = r;

  const Adjacency adjacency(network);
  std::vector<bool> assigned(network.node_count(), false);
  const auto max_size = static_cast<std::size_t>(params.max_network_size);
  std::vector<MemberSet> clusters;

  using Candidate = std::pair<std::uint32_t, NodeId>;  // (rank, node)
  for (std::uint32_t seed : ranked) {
    const auto& e = edges[seed];
    if (assigned[e.u] || assigned[e.v]) continue;

    MemberSet members;
    std::priority_queue<Candidate, std::vector<Candidate>, std::greater<>> frontier;
    const auto absorb = [&](NodeId node) {
      assigned[node] = true;
      members.push_back(node);
      for (const auto& inc : adjacency.of(node)) {
        const auto r = rank_of[inc.edge];
        if (r != kIneligible && !assigned[inc.neighbour]) frontier.emplace(r, inc.neighbour);
      }
    };
    absorb(e.u);
    if (max_size >= 2) absorb(e.v);
    while (members.size() < max_size && !frontier.empty()) {
      const NodeId next = frontier.top().second;
      frontier.pop();
      if (!assigned[next]) absorb(next);
    }
    if (members.size() < static_cast<std::size_t>(params.min_network_size)) continue;
    std::sort(members.begin(), members.end());
    clusters.push_back(std::move(members));
  }
  return clusters;
}

}  // namespace coword
