#pragma once

// Test-only reference computations. Deliberately naive and independent of the
// library's counting, ordering and rational code paths.

#include <algorithm>
#include <cstdint>
#include <map>
#include <random>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "coword/periods.hpp"

namespace oracle {

__extension__ using u128 = unsigned __int128;

struct PairCounts {
  std::uint64_t c_i = 0;
  std::uint64_t c_j = 0;
  std::uint64_t c_ij = 0;
};

/// c_i, c_j and c_ij for every keyword pair with c_ij > 0, by a double loop
/// over keyword pairs and a scan over every document.
inline std::map<std::pair<std::string, std::string>, PairCounts> brute_force_pairs(
    const coword::CorpusSlice& slice) {
  std::set<std::string> vocab;
  for (const auto& d : slice.documents) vocab.insert(d.keywords.begin(), d.keywords.end());
  const std::vector<std::string> words(vocab.begin(), vocab.end());

  const auto has = [](const coword::KeywordDoc& d, const std::string& k) {
    return std::find(d.keywords.begin(), d.keywords.end(), k) != d.keywords.end();
  };
  std::map<std::pair<std::string, std::string>, PairCounts> out;
  for (std::size_t a = 0; a < words.size(); ++a) {
    for (std::size_t b = a + 1; b < words.size(); ++b) {
      PairCounts pc;
      for (const auto& d : slice.documents) {
        const bool ha = has(d, words[a]);
        const bool hb = has(d, words[b]);
        pc.c_i += ha;
        pc.c_j += hb;
        pc.c_ij += ha && hb;
      }
      if (pc.c_ij > 0) out[{words[a], words[b]}] = pc;
    }
  }
  return out;
}

inline std::map<std::string, std::uint64_t> brute_force_counts(const coword::CorpusSlice& slice) {
  std::map<std::string, std::uint64_t> out;
  for (const auto& d : slice.documents) {
    std::set<std::string> distinct(d.keywords.begin(), d.keywords.end());
    for (const auto& k : distinct) ++out[k];
  }
  return out;
}

/// a/b == c/d by cross multiplication.
inline bool same_fraction(std::uint64_t a, std::uint64_t b, std::uint64_t c, std::uint64_t d) {
  return static_cast<u128>(a) * d == static_cast<u128>(c) * b;
}

inline std::string keyword(std::size_t i) {
  char buf[24];
  std::snprintf(buf, sizeof buf, "K%02zu", i);
  return buf;
}

/// Random slice: up to `max_docs` documents over up to `max_keywords`
/// keywords. Documents may repeat a keyword to exercise per-document dedup.
inline coword::CorpusSlice random_slice(std::mt19937_64& rng, std::size_t max_docs = 50,
                                        std::size_t max_keywords = 20) {
  std::uniform_int_distribution<std::size_t> n_docs(0, max_docs);
  std::uniform_int_distribution<std::size_t> n_kw(1, max_keywords);
  const std::size_t vocab = n_kw(rng);
  std::uniform_int_distribution<std::size_t> pick(0, vocab - 1);
  std::uniform_int_distribution<std::size_t> per_doc(0, std::min<std::size_t>(vocab + 1, 7));

  coword::CorpusSlice slice{{"P", 2000, 2001}, coword::KeywordField::AuthorKeywords, {}};
  const std::size_t docs = n_docs(rng);
  for (std::size_t d = 0; d < docs; ++d) {
    coword::KeywordDoc doc{"d" + std::to_string(d), 2000, {}};
    const std::size_t k = per_doc(rng);
    for (std::size_t i = 0; i < k; ++i) doc.keywords.push_back(keyword(pick(rng)));
    slice.documents.push_back(std::move(doc));
  }
  return slice;
}

/// Evolution links by all-pairs set intersection: (from, to) -> shared.
inline std::map<std::pair<std::string, std::string>, std::set<std::string>> brute_force_links(
    const std::vector<std::pair<std::string, std::set<std::string>>>& prev,
    const std::vector<std::pair<std::string, std::set<std::string>>>& next) {
  std::map<std::pair<std::string, std::string>, std::set<std::string>> out;
  for (const auto& [lu, u] : prev) {
    for (const auto& [lv, v] : next) {
      std::set<std::string> shared;
      for (const auto& k : u) {
        if (v.count(k)) shared.insert(k);
      }
      if (!shared.empty()) out[{lu, lv}] = shared;
    }
  }
  return out;
}

}  // namespace oracle

#include "coword/network.hpp"

namespace oracle {

/// Simple-centers clustering restated literally: rank the eligible edge list
/// once, then for each step scan the whole ranked list from the top.
inline std::vector<std::set<std::string>> naive_simple_centers(const coword::CoWordNetwork& net,
                                                               int min_kw, int min_co,
                                                               int max_size, int min_size) {
  struct E {
    std::string a, b;
    std::uint64_t num, den;
  };
  std::vector<E> eligible;
  for (const auto& e : net.edges) {
    if (static_cast<int>(e.cooccurrence) >= min_co && static_cast<int>(net.counts[e.u]) >= min_kw &&
        static_cast<int>(net.counts[e.v]) >= min_kw) {
      eligible.push_back({net.keywords[e.u], net.keywords[e.v], e.equivalence.num(), e.equivalence.den()});
    }
  }
  // Insertion sort keeps this obviously correct rather than fast.
  const auto before = [](const E& x, const E& y) {
    const u128 l = static_cast<u128>(x.num) * y.den;
    const u128 r = static_cast<u128>(y.num) * x.den;
    if (l != r) return l > r;
    return std::tie(x.a, x.b) < std::tie(y.a, y.b);
  };
  for (std::size_t i = 1; i < eligible.size(); ++i) {
    for (std::size_t j = i; j > 0 && before(eligible[j], eligible[j - 1]); --j) {
      std::swap(eligible[j], eligible[j - 1]);
    }
  }

  std::set<std::string> assigned;
  std::vector<std::set<std::string>> out;
  while (true) {
    const E* seed = nullptr;
    for (const auto& e : eligible) {
      if (!assigned.count(e.a) && !assigned.count(e.b)) {
        seed = &e;
        break;
      }
    }
    if (!seed) break;
    std::set<std::string> cluster{seed->a};
    assigned.insert(seed->a);
    if (max_size >= 2) {
      cluster.insert(seed->b);
      assigned.insert(seed->b);
    }
    while (static_cast<int>(cluster.size()) < max_size) {
      std::string next;
      for (const auto& e : eligible) {
        if (cluster.count(e.a) && !assigned.count(e.b)) next = e.b;
        else if (cluster.count(e.b) && !assigned.count(e.a)) next = e.a;
        if (!next.empty()) break;
      }
      if (next.empty()) break;
      cluster.insert(next);
      assigned.insert(next);
    }
    if (static_cast<int>(cluster.size()) >= min_size) out.push_back(cluster);
  }
  return out;
}

}  // namespace oracle
