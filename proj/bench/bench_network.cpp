// Serial reference vs OpenMP co-occurrence counting on a synthetic slice.
//
//   bench_network [documents] [vocabulary] [keywords_per_doc] [repeats]

#include <omp.h>

#include <chrono>
#include <cstdlib>
#include <iostream>
#include <random>

#include "coword/network.hpp"

namespace {

coword::CorpusSlice synthetic_slice(std::size_t docs, std::size_t vocabulary, std::size_t per_doc) {
  std::mt19937_64 rng(42);
  // Zipf-like skew so a few keywords are frequent, as in real keyword data.
  std::vector<double> weights(vocabulary);
  for (std::size_t i = 0; i < vocabulary; ++i) weights[i] = 1.0 / static_cast<double>(i + 1);
  std::discrete_distribution<std::size_t> pick(weights.begin(), weights.end());
  std::uniform_int_distribution<std::size_t> count(1, per_doc * 2 - 1);

  coword::CorpusSlice slice{{"bench", 2000, 2020}, coword::KeywordField::AuthorKeywords, {}};
  for (std::size_t d = 0; d < docs; ++d) {
    coword::KeywordDoc doc{"doc-" + std::to_string(d), 2010, {}};
    const std::size_t n = count(rng);
    for (std::size_t k = 0; k < n; ++k) {
      std::string kw = "KW-" + std::to_string(pick(rng));
      if (std::find(doc.keywords.begin(), doc.keywords.end(), kw) == doc.keywords.end()) doc.keywords.push_back(kw);
    }
    slice.documents.push_back(std::move(doc));
  }
  return slice;
}

template <typename F>
double best_seconds(int repeats, F&& f) {
  double best = 1e300;
  for (int i = 0; i < repeats; ++i) {
    const auto t0 = std::chrono::steady_clock::now();
    f();
    const auto t1 = std::chrono::steady_clock::now();
    best = std::min(best, std::chrono::duration<double>(t1 - t0).count());
  }
  return best;
}

}  // namespace

int main(int argc, char** argv) {
  const std::size_t docs = argc > 1 ? std::strtoul(argv[1], nullptr, 10) : 100000;
  const std::size_t vocabulary = argc > 2 ? std::strtoul(argv[2], nullptr, 10) : 50000;
  const std::size_t per_doc = argc > 3 ? std::strtoul(argv[3], nullptr, 10) : 6;
  const int repeats = argc > 4 ? std::atoi(argv[4]) : 3;

  const auto slice = synthetic_slice(docs, vocabulary, per_doc);
  std::cout << "OpenMP threads: " << omp_get_max_threads() << "\n"
            << "documents: " << docs << ", vocabulary: " << vocabulary << ", mean keywords/doc: " << per_doc
            << "\n";

  coword::CoWordNetwork serial;
  coword::CoWordNetwork parallel;
  const double ts = best_seconds(repeats, [&] { serial = coword::build_network_serial(slice); });
  const double tp = best_seconds(repeats, [&] { parallel = coword::build_network(slice); });

  std::cout << "nodes: " << serial.node_count() << ", edges: " << serial.edges.size() << "\n"
            << "serial:   " << ts << " s\n"
            << "parallel: " << tp << " s (speedup " << ts / tp << "x)\n"
            << "identical: " << (serial == parallel ? "yes" : "NO") << "\n";
  return serial == parallel ? 0 : 1;
}
