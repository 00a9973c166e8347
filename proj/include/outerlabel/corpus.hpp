#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "outerlabel/generators.hpp"
#include "outerlabel/graph.hpp"

namespace outerlabel {

/// One generated graph with the parameters that reproduce it.
struct CorpusEntry {
  std::string name;
  int n = 0;
  std::uint64_t seed = 0;
  RandomOuterplanarOptions options;
  Graph graph;
};

/// Manifest file: {"entries": [{"name", "n", "seed", "edge_keep_prob",
/// "outer_keep_prob", "max_degree", "min_degree", "c1c2_free", "edges"}]}.
/// The edge lists are stored so that the corpus does not depend on the
/// generator staying bit-identical.
std::vector<CorpusEntry> load_manifest(const std::string& path);
void save_manifest(const std::string& path, const std::vector<CorpusEntry>& entries);

struct CorpusSpec {
  std::string prefix = "g";
  int count = 0;
  int n_min = 4;
  int n_max = 12;
  std::uint64_t seed = 1;
  RandomOuterplanarOptions options;
};

/// Entry i uses n = n_min + i mod (n_max - n_min + 1) and seed spec.seed + i.
/// Entries whose constraints cannot be met are skipped and the seed moves on,
/// so the result has exactly `count` entries.
std::vector<CorpusEntry> generate_corpus(const CorpusSpec& spec, bool parallel = true);

/// Regenerates the entry from its seed and options.
Graph regenerate(const CorpusEntry& e);

}  // namespace outerlabel
