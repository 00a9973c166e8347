#include "outerlabel/generators.hpp"

#include <cmath>
#include <functional>
#include <random>
#include <set>

#include "outerlabel/outerplanar.hpp"
#include "outerlabel/structure.hpp"

namespace outerlabel {

Graph gen_path(int n) {
  if (n < 1) throw GeneratorError("path needs n >= 1");
  std::vector<Edge> es;
  for (int i = 0; i + 1 < n; ++i) es.emplace_back(i, i + 1);
  return Graph(n, es);
}

Graph gen_cycle(int n) {
  if (n < 3) throw GeneratorError("cycle needs n >= 3");
  std::vector<Edge> es;
  for (int i = 0; i < n; ++i) es.emplace_back(i, (i + 1) % n);
  return Graph(n, es);
}

Graph gen_fan(int n) {
  if (n < 3) throw GeneratorError("fan needs n >= 3");
  std::vector<Edge> es;
  for (int i = 0; i + 2 < n; ++i) es.emplace_back(i, i + 1);
  for (int i = 0; i + 1 < n; ++i) es.emplace_back(i, n - 1);
  return Graph(n, es);
}

Graph gen_closed_chain(int t, ChainClosure mode) {
  if (t < 2) throw GeneratorError("chain needs t >= 2");
  const int last = 2 * t;
  std::vector<Edge> es;
  for (int i = 0; i < last; ++i) es.emplace_back(i, i + 1);
  for (int i = 0; i + 2 <= last; i += 2) es.emplace_back(i, i + 2);
  es.emplace_back(0, last);
  int n = last + 1;
  if (mode == ChainClosure::kSharedApex) {
    es.emplace_back(0, n);
    es.emplace_back(last, n);
    ++n;
  } else if (mode == ChainClosure::kPathClosed) {
    es.emplace_back(0, n);
    es.emplace_back(n, n + 1);
    es.emplace_back(n + 1, last);
    n += 2;
  }
  return Graph(n, es);
}

std::uint64_t catalan(int m) {
  if (m < 0 || m > 30) throw GeneratorError("catalan index out of range");
  std::uint64_t c = 1;
  for (int i = 0; i < m; ++i) c = c * 2 * static_cast<std::uint64_t>(2 * i + 1) / static_cast<std::uint64_t>(i + 2);
  return c;
}

namespace {

std::vector<Edge> polygon_sides(int n) {
  std::vector<Edge> es;
  for (int i = 0; i < n; ++i) es.emplace_back(i, (i + 1) % n);
  return es;
}

// Chord sets of all triangulations of the sub-polygon i..j (base edge (i,j)).
void triangulate_all(int i, int j, std::vector<std::vector<Edge>>& out) {
  if (j - i < 2) {
    out.push_back({});
    return;
  }
  for (int k = i + 1; k < j; ++k) {
    std::vector<std::vector<Edge>> left, right;
    triangulate_all(i, k, left);
    triangulate_all(k, j, right);
    for (const auto& l : left) {
      for (const auto& r : right) {
        std::vector<Edge> es = l;
        es.insert(es.end(), r.begin(), r.end());
        if (k - i >= 2) es.emplace_back(i, k);
        if (j - k >= 2) es.emplace_back(k, j);
        out.push_back(std::move(es));
      }
    }
  }
}

double unit(std::mt19937_64& rng) { return static_cast<double>(rng() >> 11) * 0x1.0p-53; }

std::vector<Edge> random_triangulation_chords(int n, std::mt19937_64& rng) {
  std::vector<long double> cat(static_cast<size_t>(n + 1), 1.0L);
  for (int m = 1; m <= n; ++m) {
    cat[static_cast<size_t>(m)] = cat[static_cast<size_t>(m - 1)] * 2.0L * (2 * m - 1) / (m + 1);
  }
  auto C = [&](int m) { return cat[static_cast<size_t>(m)]; };
  std::vector<Edge> chords;
  std::function<void(int, int)> rec = [&](int i, int j) {
    if (j - i < 2) return;
    long double total = C(j - i - 1);
    long double r = static_cast<long double>(unit(rng)) * total;
    int k = j - 1;
    for (int c = i + 1; c < j; ++c) {
      long double w = C(c - i - 1) * C(j - c - 1);
      if (r < w) {
        k = c;
        break;
      }
      r -= w;
    }
    if (k - i >= 2) chords.emplace_back(i, k);
    if (j - k >= 2) chords.emplace_back(k, j);
    rec(i, k);
    rec(k, j);
  };
  rec(0, n - 1);
  return chords;
}

bool meets(const Graph& g, const RandomOuterplanarOptions& o) {
  if (o.require_connected && !is_connected(g)) return false;
  if (o.max_degree && g.max_degree() != *o.max_degree) return false;
  if (o.min_degree && g.min_degree() != *o.min_degree) return false;
  if (o.c1c2_free) {
    auto emb = recognize_embed(g);
    if (!all_configurations(emb, ConfigKind::kC1).empty() || !all_configurations(emb, ConfigKind::kC2).empty()) {
      return false;
    }
  }
  return true;
}

}  // namespace

std::vector<Graph> enumerate_triangulations(int n) {
  if (n < 3 || n > 12) throw GeneratorError("triangulation enumeration needs 3 <= n <= 12");
  std::vector<std::vector<Edge>> chord_sets;
  triangulate_all(0, n - 1, chord_sets);
  std::vector<Graph> out;
  out.reserve(chord_sets.size());
  for (auto& cs : chord_sets) {
    std::vector<Edge> es = polygon_sides(n);
    es.insert(es.end(), cs.begin(), cs.end());
    out.emplace_back(n, es);
  }
  return out;
}

Graph gen_random_outerplanar(int n, std::uint64_t seed, const RandomOuterplanarOptions& opts) {
  if (n < 3) throw GeneratorError("random outerplanar graph needs n >= 3");
  std::mt19937_64 rng(seed);
  for (int attempt = 0; attempt < opts.retries; ++attempt) {
    std::vector<Edge> es;
    for (const Edge& c : random_triangulation_chords(n, rng)) {
      if (unit(rng) < opts.edge_keep_prob) es.push_back(c);
    }
    std::vector<Edge> sides = polygon_sides(n);
    es.insert(es.end(), sides.begin(), sides.end());
    Graph g(n, es);
    if (opts.outer_keep_prob < 1.0) {
      for (const Edge& s : sides) {
        if (unit(rng) < opts.outer_keep_prob) continue;
        Edge one[] = {s};
        Graph h = remove_edges(g, one);
        if (is_connected(h)) g = std::move(h);
      }
    }
    if (meets(g, opts)) return g;
  }
  throw GeneratorError("constraints not met within the retry budget");
}

}  // namespace outerlabel
