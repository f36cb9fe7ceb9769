#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "coword/periods.hpp"
#include "coword/rational.hpp"

namespace coword {

/// Equivalence index c_ij^2 / (c_i * c_j), exact.
/// Throws DomainError when an occurrence count is 0 or c_ij > min(c_i, c_j).
Rational equivalence(std::uint64_t c_i, std::uint64_t c_j, std::uint64_t c_ij);

using NodeId = std::uint32_t;

struct CoEdge {
  NodeId u = 0;  // u < v, hence keyword(u) < keyword(v)
  NodeId v = 0;
  std::uint32_t cooccurrence = 0;
  Rational equivalence;

  friend bool operator==(const CoEdge&, const CoEdge&) = default;
};

/// Keyword co-occurrence network of one period. Nodes are sorted by keyword
/// so node order is lexicographic; edges are sorted by (u, v) and only pairs
/// that co-occur at least once are stored.
struct CoWordNetwork {
  std::string period_label;
  std::vector<std::string> keywords;
  std::vector<std::uint32_t> counts;
  std::vector<CoEdge> edges;

  std::size_t node_count() const noexcept { return keywords.size(); }
  std::optional<NodeId> find(const std::string& keyword) const;
  /// Edge between two nodes, if any. O(log E).
  const CoEdge* edge(NodeId a, NodeId b) const;

  friend bool operator==(const CoWordNetwork&, const CoWordNetwork&) = default;
};

/// Adjacency view over a network: for every node, incident edge indices
/// sorted by neighbour id.
class Adjacency {
 public:
  explicit Adjacency(const CoWordNetwork& network);

  struct Incident {
    NodeId neighbour;
    std::uint32_t edge;
  };
  std::span<const Incident> of(NodeId node) const {
    return {incidents_.data() + offsets_[node], incidents_.data() + offsets_[node + 1]};
  }

 private:
  std::vector<std::size_t> offsets_;
  std::vector<Incident> incidents_;
};

/// Co-occurrence network by per-document pair enumeration, counted with
/// per-thread tables under OpenMP and merged. Keywords are counted once per
/// document. Output is independent of document order.
CoWordNetwork build_network(const CorpusSlice& slice);

/// Single-threaded reference for build_network.
CoWordNetwork build_network_serial(const CorpusSlice& slice);

}  // namespace coword
