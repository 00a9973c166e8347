#include "outerlabel/structure.hpp"

#include <algorithm>
#include <set>

namespace outerlabel {

std::string to_string(ConfigKind k) {
  switch (k) {
    case ConfigKind::kC1: return "C1";
    case ConfigKind::kC2: return "C2";
    case ConfigKind::kC3: return "C3";
  }
  return "?";
}

namespace {

bool tie_less(const std::vector<Vertex>& a, const std::vector<Vertex>& b) {
  Vertex ma = *std::min_element(a.begin(), a.end());
  Vertex mb = *std::min_element(b.begin(), b.end());
  if (ma != mb) return ma < mb;
  return a < b;
}

std::vector<Face> triangles(const OuterplanarEmbedding& emb) {
  std::vector<Face> out;
  for (const Face& f : emb.inner_faces()) {
    if (f.size() == 3) out.push_back(f);
  }
  return out;
}

std::vector<Vertex> others(const Face& f, Vertex a) {
  std::vector<Vertex> out;
  for (Vertex v : f.vertices) {
    if (v != a) out.push_back(v);
  }
  return out;
}

}  // namespace

std::vector<Configuration> all_configurations(const OuterplanarEmbedding& emb, ConfigKind kind) {
  const Graph& g = emb.host();
  std::vector<Configuration> out;
  auto d = [&](Vertex v) { return g.degree(v); };
  switch (kind) {
    case ConfigKind::kC1:
      for (const Edge& e : g.edges()) {
        if (d(e.u) == 2 && d(e.v) == 2) out.push_back({kind, {e.u, e.v}});
      }
      break;
    case ConfigKind::kC2:
      for (const Face& f : triangles(emb)) {
        for (Vertex u1 : f.vertices) {
          if (d(u1) != 2) continue;
          for (Vertex u2 : others(f, u1)) {
            if (d(u2) != 3) continue;
            Vertex u3 = f.vertices[0] + f.vertices[1] + f.vertices[2] - u1 - u2;
            out.push_back({kind, {u1, u2, u3}});
          }
        }
      }
      break;
    case ConfigKind::kC3: {
      auto tri = triangles(emb);
      for (size_t i = 0; i < tri.size(); ++i) {
        for (size_t j = 0; j < tri.size(); ++j) {
          if (i == j) continue;
          for (Vertex u3 : tri[i].vertices) {
            if (d(u3) != 4 || !tri[j].contains(u3)) continue;
            for (Vertex u2 : others(tri[i], u3)) {
              if (d(u2) != 2) continue;
              for (Vertex u4 : others(tri[j], u3)) {
                if (d(u4) != 2 || u4 == u2) continue;
                Vertex u1 = others(tri[i], u3)[0] + others(tri[i], u3)[1] - u2;
                Vertex u5 = others(tri[j], u3)[0] + others(tri[j], u3)[1] - u4;
                out.push_back({kind, {u1, u2, u3, u4, u5}});
              }
            }
          }
        }
      }
      break;
    }
  }
  std::sort(out.begin(), out.end(),
            [](const Configuration& a, const Configuration& b) { return tie_less(a.witnesses, b.witnesses); });
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::optional<Configuration> find_configuration(const OuterplanarEmbedding& emb) {
  if (emb.host().empty() || emb.host().min_degree() != 2) {
    throw PreconditionError("find_configuration needs minimum degree 2");
  }
  for (ConfigKind k : {ConfigKind::kC1, ConfigKind::kC2, ConfigKind::kC3}) {
    auto all = all_configurations(emb, k);
    if (!all.empty()) return all.front();
  }
  return std::nullopt;
}

bool is_valid_configuration(const OuterplanarEmbedding& emb, const Configuration& c) {
  const Graph& g = emb.host();
  const auto& w = c.witnesses;
  for (Vertex v : w) {
    if (!g.has_vertex(v)) return false;
  }
  auto is_face = [&](Vertex a, Vertex b, Vertex x) {
    for (const Face& f : triangles(emb)) {
      if (f.contains(a) && f.contains(b) && f.contains(x)) return true;
    }
    return false;
  };
  switch (c.kind) {
    case ConfigKind::kC1:
      return w.size() == 2 && g.has_edge(w[0], w[1]) && g.degree(w[0]) == 2 && g.degree(w[1]) == 2;
    case ConfigKind::kC2:
      return w.size() == 3 && is_face(w[0], w[1], w[2]) && g.degree(w[0]) == 2 && g.degree(w[1]) == 3;
    case ConfigKind::kC3:
      return w.size() == 5 && is_face(w[0], w[1], w[2]) && is_face(w[2], w[3], w[4]) && g.degree(w[2]) == 4 &&
             g.degree(w[1]) == 2 && g.degree(w[3]) == 2 && w[1] != w[3];
  }
  return false;
}

namespace {

Vertex unique_outside(const Graph& g, Vertex v, const std::set<Vertex>& inside) {
  Vertex found = -1;
  for (Vertex w : g.neighbors(v)) {
    if (inside.contains(w)) continue;
    if (found >= 0) return -1;
    found = w;
  }
  return found;
}

Chain make_chain(const OuterplanarEmbedding& emb, std::vector<Vertex> spine) {
  const Graph& g = emb.host();
  Chain c;
  std::set<Vertex> inside(spine.begin(), spine.end());
  c.spine = std::move(spine);
  c.closed = emb.is_inner(Edge(c.first(), c.last()));
  c.w_first = unique_outside(g, c.first(), inside);
  c.w_last = unique_outside(g, c.last(), inside);
  return c;
}

// Runs of ears along one block: each run is the list of cycle positions i
// where [c_i c_{i+1} c_{i+2}] is a 3-face whose middle vertex has degree 2
// in the host and whose closing side is a chord.
struct Run {
  std::vector<int> ears;
  bool cyclic = false;
};

std::vector<Run> ear_runs(const OuterplanarEmbedding& emb, const Block& b) {
  std::vector<Run> runs;
  const int m = static_cast<int>(b.cycle.size());
  if (m < 4) return runs;
  std::set<Edge> chords(b.chords.begin(), b.chords.end());
  auto at = [&](int i) { return b.cycle[static_cast<size_t>(((i % m) + m) % m)]; };
  std::vector<bool> ear(static_cast<size_t>(m), false);
  for (int i = 0; i < m; ++i) {
    ear[static_cast<size_t>(i)] = emb.host().degree(at(i + 1)) == 2 && chords.contains(Edge(at(i), at(i + 2)));
  }
  auto is_ear = [&](int i) { return ear[static_cast<size_t>(((i % m) + m) % m)]; };
  for (int parity = 0; parity < 2; ++parity) {
    bool all = m % 2 == 0;
    for (int i = parity; i < m && all; i += 2) all = is_ear(i);
    if (all) {
      Run r;
      r.cyclic = true;
      for (int i = parity; i < m; i += 2) r.ears.push_back(i);
      runs.push_back(r);
    }
  }
  if (!runs.empty()) return runs;
  for (int i = 0; i < m; ++i) {
    if (!is_ear(i) || is_ear(i - 2)) continue;
    Run r;
    for (int j = i; is_ear(j); j += 2) r.ears.push_back(j);
    runs.push_back(r);
  }
  return runs;
}

std::vector<Vertex> spine_of(const Block& b, int first_ear, int t) {
  const int m = static_cast<int>(b.cycle.size());
  std::vector<Vertex> s;
  for (int k = 0; k <= 2 * t; ++k) s.push_back(b.cycle[static_cast<size_t>((first_ear + k) % m)]);
  return s;
}

void sort_chains(std::vector<Chain>& cs) {
  std::sort(cs.begin(), cs.end(), [](const Chain& a, const Chain& b) { return tie_less(a.spine, b.spine); });
}

}  // namespace

std::vector<Chain> enumerate_chains(const OuterplanarEmbedding& emb) {
  std::vector<Chain> out;
  for (const Block& b : emb.blocks()) {
    for (const Run& r : ear_runs(emb, b)) {
      int n = static_cast<int>(r.ears.size());
      if (r.cyclic) {
        // Start at the ear whose first vertex is smallest.
        int best = 0;
        for (int i = 1; i < n; ++i) {
          if (b.cycle[static_cast<size_t>(r.ears[static_cast<size_t>(i)])] <
              b.cycle[static_cast<size_t>(r.ears[static_cast<size_t>(best)])]) {
            best = i;
          }
        }
        if (n - 1 >= 2) out.push_back(make_chain(emb, spine_of(b, r.ears[static_cast<size_t>(best)], n - 1)));
      } else if (n >= 2) {
        out.push_back(make_chain(emb, spine_of(b, r.ears.front(), n)));
      }
    }
  }
  sort_chains(out);
  return out;
}

std::vector<Chain> closed_chain_candidates(const OuterplanarEmbedding& emb) {
  std::vector<Chain> out;
  for (const Block& b : emb.blocks()) {
    for (const Run& r : ear_runs(emb, b)) {
      int n = static_cast<int>(r.ears.size());
      int max_t = r.cyclic ? n - 1 : n;
      int starts = r.cyclic ? n : n - 1;
      for (int a = 0; a < starts; ++a) {
        for (int t = 2; t <= max_t && (r.cyclic || a + t <= n); ++t) {
          Chain c = make_chain(emb, spine_of(b, r.ears[static_cast<size_t>(a)], t));
          if (c.closed && c.w_first >= 0 && c.w_last >= 0) out.push_back(c);
        }
      }
    }
  }
  sort_chains(out);
  return out;
}

Chain find_closed_chain(const OuterplanarEmbedding& emb) {
  const Graph& g = emb.host();
  if (g.empty() || g.max_degree() != 4 || g.min_degree() != 2) {
    throw PreconditionError("find_closed_chain needs maximum degree 4 and minimum degree 2");
  }
  if (!all_configurations(emb, ConfigKind::kC1).empty() || !all_configurations(emb, ConfigKind::kC2).empty()) {
    throw PreconditionError("find_closed_chain needs a graph without C1 and C2");
  }
  auto cs = closed_chain_candidates(emb);
  if (cs.empty()) throw ChainNotFound("no chain of 3-faces closed by an inner edge");
  return cs.front();
}

bool is_valid_chain(const OuterplanarEmbedding& emb, const Chain& c) {
  const Graph& g = emb.host();
  if (c.spine.size() < 5 || c.spine.size() % 2 == 0) return false;
  std::set<Vertex> inside(c.spine.begin(), c.spine.end());
  if (inside.size() != c.spine.size()) return false;
  const int t = c.t();
  for (int i = 1; i <= t; ++i) {
    Vertex a = c.u(2 * i - 1), m = c.u(2 * i), z = c.u(2 * i + 1);
    if (!emb.is_outer(Edge(a, m)) || !emb.is_outer(Edge(m, z)) || !emb.is_inner(Edge(a, z))) return false;
    if (g.degree(m) != 2) return false;
    if (i < t && g.degree(z) != 4) return false;
  }
  if (c.closed) {
    if (!emb.is_inner(Edge(c.first(), c.last()))) return false;
    if (c.w_first < 0 || c.w_first != unique_outside(g, c.first(), inside)) return false;
    if (c.w_last < 0 || c.w_last != unique_outside(g, c.last(), inside)) return false;
  }
  return true;
}

}  // namespace outerlabel
