#pragma once

#include <cstdint>
#include <vector>

#include "coword/network.hpp"

namespace coword {

struct ClusterParams {
  int min_keyword_frequency = 2;
  int min_cooccurrence = 2;
  int max_network_size = 10;
  int min_network_size = 1;

  /// Throws InvalidArgument unless 1 <= min <= max and thresholds >= 1.
  void validate() const;

  friend bool operator==(const ClusterParams&, const ClusterParams&) = default;
};

/// Node ids of one cluster, ascending.
using MemberSet = std::vector<NodeId>;

/// Simple-centers clustering.
///
/// Edges with c_ij >= min_cooccurrence between keywords with frequency >=
/// min_keyword_frequency are eligible. They are ranked by descending
/// equivalence, ties by ascending (keyword_i, keyword_j). A cluster is seeded
/// from the best-ranked edge whose endpoints are both unassigned and grown by
/// repeatedly absorbing the unassigned keyword holding the best-ranked
/// eligible edge to any member, until max_network_size is reached or no
/// candidate remains. Clusters below min_network_size are discarded (their
/// keywords stay assigned and are not reseeded). Clusters come out in
/// creation order.
std::vector<MemberSet> cluster_simple_centers(const CoWordNetwork& network,
                                              const ClusterParams& params);

}  // namespace coword
