#include "coword/network.hpp"

#include <algorithm>
#include <unordered_map>

#include <omp.h>

#include "coword/error.hpp"

namespace coword {

Rational equivalence(std::uint64_t c_i, std::uint64_t c_j, std::uint64_t c_ij) {
  if (c_i == 0 || c_j == 0) throw DomainError("equivalence: occurrence counts must be positive");
  if (c_ij > std::min(c_i, c_j)) {
    throw DomainError("equivalence: co-occurrence " + std::to_string(c_ij) +
                      " exceeds an occurrence count");
  }
  return Rational(c_ij * c_ij, c_i * c_j);
}

std::optional<NodeId> CoWordNetwork::find(const std::string& keyword) const {
  auto it = std::lower_bound(keywords.begin(), keywords.end(), keyword);
  if (it == keywords.end() || *it != keyword) return std::nullopt;
  return static_cast<NodeId>(it - keywords.begin());
}

const CoEdge* CoWordNetwork::edge(NodeId a, NodeId b) const {
  if (a > b) std::swap(a, b);
  auto it = std::lower_bound(edges.begin(), edges.end(), std::pair{a, b},
                             [](const CoEdge& e, const std::pair<NodeId, NodeId>& key) {
                               return std::pair{e.u, e.v} < key;
                             });
  if (it == edges.end() || it->u != a || it->v != b) return nullptr;
  return &*it;
}

Adjacency::Adjacency(const CoWordNetwork& network) : offsets_(network.node_count() + 1, 0) {
  for (const auto& e : network.edges) {
    ++offsets_[e.u + 1];
    ++offsets_[e.v + 1];
  }
  for (std::size_t i = 1; i < offsets_.size(); ++i) offsets_[i] += offsets_[i - 1];
  incidents_.resize(offsets_.back());
  std::vector<std::size_t> fill(offsets_.begin(), offsets_.end() - 1);
  for (std::uint32_t idx = 0; idx < network.edges.size(); ++idx) {
    const auto& e = network.edges[idx];
    incidents_[fill[e.u]++] = {e.v, idx};
    incidents_[fill[e.v]++] = {e.u, idx};
  }
  for (std::size_t n = 0; n + 1 < offsets_.size(); ++n) {
    std::sort(incidents_.begin() + static_cast<std::ptrdiff_t>(offsets_[n]),
              incidents_.begin() + static_cast<std::ptrdiff_t>(offsets_[n + 1]),
              [](const Incident& a, const Incident& b) { return a.neighbour < b.neighbour; });
  }
}

namespace {

using PairKey = std::uint64_t;

PairKey pair_key(NodeId u, NodeId v) { return (static_cast<PairKey>(u) << 32) | v; }

/// Sorted keyword list plus every document as a sorted, duplicate-free list
/// of node ids.
struct Indexed {
  std::vector<std::string> keywords;
  std::vector<std::vector<NodeId>> docs;
};

Indexed index_documents(const CorpusSlice& slice) {
  Indexed out;
  for (const auto& d : slice.documents) out.keywords.insert(out.keywords.end(), d.keywords.begin(), d.keywords.end());
  std::sort(out.keywords.begin(), out.keywords.end());
  out.keywords.erase(std::unique(out.keywords.begin(), out.keywords.end()), out.keywords.end());

  std::unordered_map<std::string_view, NodeId> ids;
  ids.reserve(out.keywords.size());
  for (NodeId i = 0; i < out.keywords.size(); ++i) ids.emplace(out.keywords[i], i);

  const auto n = static_cast<std::ptrdiff_t>(slice.documents.size());
  out.docs.resize(slice.documents.size());
#pragma omp parallel for schedule(static)
  for (std::ptrdiff_t i = 0; i < n; ++i) {
    auto& ids_of_doc = out.docs[i];
    for (const auto& k : slice.documents[i].keywords) ids_of_doc.push_back(ids.at(k));
    std::sort(ids_of_doc.begin(), ids_of_doc.end());
    ids_of_doc.erase(std::unique(ids_of_doc.begin(), ids_of_doc.end()), ids_of_doc.end());
  }
  return out;
}

CoWordNetwork assemble(const CorpusSlice& slice, Indexed&& indexed, std::vector<std::uint32_t>&& counts,
                       std::vector<std::pair<PairKey, std::uint32_t>>&& pairs) {
  std::sort(pairs.begin(), pairs.end());
  CoWordNetwork net;
  net.period_label = slice.period.label;
  net.keywords = std::move(indexed.keywords);
  net.counts = std::move(counts);
  net.edges.reserve(pairs.size());
  for (const auto& [key, c] : pairs) {
    const auto u = static_cast<NodeId>(key >> 32);
    const auto v = static_cast<NodeId>(key & 0xffffffffu);
    net.edges.push_back({u, v, c, equivalence(net.counts[u], net.counts[v], c)});
  }
  return net;
}

}  // namespace

CoWordNetwork build_network_serial(const CorpusSlice& slice) {
  Indexed indexed = index_documents(slice);
  std::vector<std::uint32_t> counts(indexed.keywords.size(), 0);
  std::unordered_map<PairKey, std::uint32_t> pair_counts;
  for (const auto& ids : indexed.docs) {
    for (std::size_t a = 0; a < ids.size(); ++a) {
      ++counts[ids[a]];
      for (std::size_t b = a + 1; b < ids.size(); ++b) ++pair_counts[pair_key(ids[a], ids[b])];
    }
  }
  std::vector<std::pair<PairKey, std::uint32_t>> pairs(pair_counts.begin(), pair_counts.end());
  return assemble(slice, std::move(indexed), std::move(counts), std::move(pairs));
}

CoWordNetwork build_network(const CorpusSlice& slice) {
  Indexed indexed = index_documents(slice);
  const std::size_t n_nodes = indexed.keywords.size();
  const auto n_docs = static_cast<std::ptrdiff_t>(indexed.docs.size());

  const int n_threads = omp_get_max_threads();
  std::vector<std::vector<std::uint32_t>> local_counts(n_threads);
  std::vector<std::unordered_map<PairKey, std::uint32_t>> local_pairs(n_threads);

#pragma omp parallel num_threads(n_threads)
  {
    const int t = omp_get_thread_num();
    auto& counts = local_counts[t];
    auto& pairs = local_pairs[t];
    counts.assign(n_nodes, 0);
#pragma omp for schedule(dynamic, 256)
    for (std::ptrdiff_t d = 0; d < n_docs; ++d) {
      const auto& ids = indexed.docs[d];
      for (std::size_t a = 0; a < ids.size(); ++a) {
        ++counts[ids[a]];
        for (std::size_t b = a + 1; b < ids.size(); ++b) ++pairs[pair_key(ids[a], ids[b])];
      }
    }
  }

  std::vector<std::uint32_t> counts(n_nodes, 0);
  for (const auto& lc : local_counts) {
    for (std::size_t i = 0; i < n_nodes && !lc.empty(); ++i) counts[i] += lc[i];
  }
  auto& merged = local_pairs.front();
  for (std::size_t t = 1; t < local_pairs.size(); ++t) {
    for (const auto& [key, c] : local_pairs[t]) merged[key] += c;
    local_pairs[t].clear();
  }
  std::vector<std::pair<PairKey, std::uint32_t>> pairs(merged.begin(), merged.end());
  return assemble(slice, std::move(indexed), std::move(counts), std::move(pairs));
}

}  // namespace coword
