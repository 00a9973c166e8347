#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <vector>

#include "outerlabel/graph.hpp"

namespace outerlabel {

class GeneratorError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

Graph gen_path(int n);
Graph gen_cycle(int n);
/// Path 0..n-2 plus apex n-1 joined to every path vertex.
Graph gen_fan(int n);

enum class ChainClosure {
  kBare,         // boundary C_{2t+1}: (u1, u_{2t+1}) is an outer edge
  kSharedApex,   // one extra vertex w adjacent to u1 and u_{2t+1}
  kPathClosed,   // u1 and u_{2t+1} joined through a path of two extra vertices
};

/// Chain u1..u_{2t+1} (ids 0..2t) with chords (u_{2i-1}, u_{2i+1}). With
/// kSharedApex or kPathClosed the chord (u1, u_{2t+1}) is present and inner.
Graph gen_closed_chain(int t, ChainClosure mode = ChainClosure::kSharedApex);

/// Every triangulation of the convex polygon 0..n-1, 3 ≤ n ≤ 12.
std::vector<Graph> enumerate_triangulations(int n);

struct RandomOuterplanarOptions {
  double edge_keep_prob = 0.5;       // per chord
  double outer_keep_prob = 1.0;      // per polygon side; removals keep the graph connected
  std::optional<int> max_degree;     // exact target Δ
  std::optional<int> min_degree;     // exact target δ
  bool require_connected = true;
  bool c1c2_free = false;            // reject graphs containing C1 or C2
  int retries = 20000;
};

/// Uniform random triangulation of the n-gon, thinned and rejection-sampled
/// until the constraints hold. Deterministic per seed.
Graph gen_random_outerplanar(int n, std::uint64_t seed, const RandomOuterplanarOptions& opts = {});

/// Catalan number C_m.
std::uint64_t catalan(int m);

}  // namespace outerlabel
