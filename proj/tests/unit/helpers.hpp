#pragma once

#include <map>
#include <random>
#include <string>
#include <vector>

#include "outerlabel/corpus.hpp"
#include "outerlabel/graph.hpp"

namespace testing_util {

using namespace outerlabel;

inline std::string data_path(const std::string& name) { return std::string(OUTERLABEL_DATA_DIR) + "/" + name; }

inline const std::vector<CorpusEntry>& corpus(const std::string& name) {
  static std::map<std::string, std::vector<CorpusEntry>> cache;
  auto it = cache.find(name);
  if (it == cache.end()) it = cache.emplace(name, load_manifest(data_path(name))).first;
  return it->second;
}

inline const std::vector<CorpusEntry>& delta3_corpus() { return corpus("corpus_delta3.json"); }
inline const std::vector<CorpusEntry>& delta4_corpus() { return corpus("corpus_delta4.json"); }
inline const std::vector<CorpusEntry>& delta4_free_corpus() { return corpus("corpus_delta4_c1c2free.json"); }

/// Cycle 0..n-1 plus chords.
inline Graph cycle_with(int n, std::vector<Edge> chords) {
  for (int i = 0; i < n; ++i) chords.emplace_back(i, (i + 1) % n);
  return Graph(n, chords);
}

/// Uniformly random simple graph, for brute-force cross-checks.
inline Graph random_graph(int n, double p, std::mt19937_64& rng) {
  std::bernoulli_distribution coin(p);
  std::vector<Edge> es;
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b)
      if (coin(rng)) es.emplace_back(a, b);
  return Graph(n, es);
}

}  // namespace testing_util
