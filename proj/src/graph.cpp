#include "outerlabel/graph.hpp"

#include <algorithm>
#include <functional>
#include <set>

namespace outerlabel {

std::string to_string(const Element& x) {
  if (x.is_vertex()) return std::to_string(x.a);
  return "(" + std::to_string(x.a) + "," + std::to_string(x.b) + ")";
}

Graph::Graph(int n, std::span<const Edge> edges) {
  if (n < 0) throw GraphError("negative vertex count");
  std::vector<Vertex> vs(static_cast<size_t>(n));
  for (int i = 0; i < n; ++i) vs[static_cast<size_t>(i)] = i;
  *this = Graph(vs, edges);
}

Graph::Graph(std::span<const Vertex> vertices, std::span<const Edge> edges) {
  Vertex bound = 0;
  for (Vertex v : vertices) {
    if (v < 0) throw GraphError("negative vertex id");
    bound = std::max(bound, v + 1);
  }
  present_.assign(static_cast<size_t>(bound), false);
  adj_.assign(static_cast<size_t>(bound), {});
  for (Vertex v : vertices) {
    if (present_[static_cast<size_t>(v)]) throw GraphError("duplicate vertex " + std::to_string(v));
    present_[static_cast<size_t>(v)] = true;
  }
  vertices_.assign(vertices.begin(), vertices.end());
  std::sort(vertices_.begin(), vertices_.end());

  edges_.reserve(edges.size());
  for (const Edge& e : edges) {
    if (e.u == e.v) throw GraphError("self-loop at " + std::to_string(e.u));
    if (!has_vertex(e.u) || !has_vertex(e.v)) {
      throw GraphError("edge " + to_string(Element::of(e)) + " has an unknown endpoint");
    }
    edges_.push_back(Edge(e.u, e.v));
  }
  std::sort(edges_.begin(), edges_.end());
  if (std::adjacent_find(edges_.begin(), edges_.end()) != edges_.end()) {
    throw GraphError("parallel edges are not allowed");
  }
  for (const Edge& e : edges_) {
    adj_[static_cast<size_t>(e.u)].push_back(e.v);
    adj_[static_cast<size_t>(e.v)].push_back(e.u);
  }
  for (auto& nb : adj_) std::sort(nb.begin(), nb.end());
}

void Graph::check_vertex(Vertex v) const {
  if (!has_vertex(v)) throw GraphError("unknown vertex " + std::to_string(v));
}

bool Graph::has_edge(Vertex a, Vertex b) const {
  if (!has_vertex(a) || !has_vertex(b)) return false;
  const auto& nb = adj_[static_cast<size_t>(a)];
  return std::binary_search(nb.begin(), nb.end(), b);
}

std::span<const Vertex> Graph::neighbors(Vertex v) const {
  check_vertex(v);
  return adj_[static_cast<size_t>(v)];
}

std::vector<Edge> Graph::incident_edges(Vertex v) const {
  std::vector<Edge> out;
  for (Vertex w : neighbors(v)) out.emplace_back(v, w);
  return out;
}

int Graph::max_degree() const {
  if (empty()) throw GraphError("max_degree of an empty graph");
  int best = 0;
  for (Vertex v : vertices_) best = std::max(best, degree(v));
  return best;
}

int Graph::min_degree() const {
  if (empty()) throw GraphError("min_degree of an empty graph");
  int best = degree(vertices_.front());
  for (Vertex v : vertices_) best = std::min(best, degree(v));
  return best;
}

std::vector<Element> Graph::elements() const {
  std::vector<Element> out;
  out.reserve(vertices_.size() + edges_.size());
  for (Vertex v : vertices_) out.push_back(Element::of(v));
  for (const Edge& e : edges_) out.push_back(Element::of(e));
  return out;
}

namespace {

// Lowpoint DFS shared by the cut-vertex, bridge and block routines.
struct Lowpoint {
  const Graph& g;
  std::vector<int> disc, low;
  std::vector<bool> is_cut;
  std::vector<Edge> bridge_list;
  std::vector<std::vector<Edge>> blocks;
  std::vector<Edge> stack;
  int timer = 0;

  explicit Lowpoint(const Graph& graph)
      : g(graph),
        disc(static_cast<size_t>(graph.id_bound()), -1),
        low(static_cast<size_t>(graph.id_bound()), 0),
        is_cut(static_cast<size_t>(graph.id_bound()), false) {
    for (Vertex r : g.vertices()) {
      if (disc[static_cast<size_t>(r)] >= 0) continue;
      int children = 0;
      disc[static_cast<size_t>(r)] = low[static_cast<size_t>(r)] = timer++;
      for (Vertex w : g.neighbors(r)) {
        if (disc[static_cast<size_t>(w)] >= 0) continue;
        ++children;
        visit(w, r);
        if (low[static_cast<size_t>(w)] > disc[static_cast<size_t>(r)]) bridge_list.emplace_back(r, w);
        pop_block(Edge(r, w));
      }
      if (children > 1) is_cut[static_cast<size_t>(r)] = true;
    }
  }

  void visit(Vertex v, Vertex parent) {
    auto vi = static_cast<size_t>(v);
    disc[vi] = low[vi] = timer++;
    stack.emplace_back(parent, v);
    for (Vertex w : g.neighbors(v)) {
      auto wi = static_cast<size_t>(w);
      if (w == parent) continue;
      if (disc[wi] < 0) {
        visit(w, v);
        low[vi] = std::min(low[vi], low[wi]);
        if (low[wi] >= disc[vi]) {
          is_cut[vi] = true;  // v is never a DFS root here
          pop_block(Edge(v, w));
        }
        if (low[wi] > disc[vi]) bridge_list.emplace_back(v, w);
      } else if (disc[wi] < disc[vi]) {
        stack.emplace_back(v, w);
        low[vi] = std::min(low[vi], disc[wi]);
      }
    }
  }

  void pop_block(Edge until) {
    std::vector<Edge> block;
    while (!stack.empty()) {
      Edge e = stack.back();
      stack.pop_back();
      block.push_back(e);
      if (e == until) break;
    }
    blocks.push_back(std::move(block));
  }
};

}  // namespace

bool is_connected(const Graph& g) { return connected_components(g).size() <= 1; }

std::vector<Graph> connected_components(const Graph& g) {
  std::vector<int> comp(static_cast<size_t>(g.id_bound()), -1);
  std::vector<std::vector<Vertex>> groups;
  for (Vertex r : g.vertices()) {
    if (comp[static_cast<size_t>(r)] >= 0) continue;
    int id = static_cast<int>(groups.size());
    groups.emplace_back();
    std::vector<Vertex> todo{r};
    comp[static_cast<size_t>(r)] = id;
    while (!todo.empty()) {
      Vertex v = todo.back();
      todo.pop_back();
      groups.back().push_back(v);
      for (Vertex w : g.neighbors(v)) {
        if (comp[static_cast<size_t>(w)] < 0) {
          comp[static_cast<size_t>(w)] = id;
          todo.push_back(w);
        }
      }
    }
  }
  std::vector<Graph> out;
  out.reserve(groups.size());
  for (auto& grp : groups) out.push_back(induced_subgraph(g, grp));
  return out;
}

std::vector<Vertex> cut_vertices(const Graph& g) {
  Lowpoint lp(g);
  std::vector<Vertex> out;
  for (Vertex v : g.vertices()) {
    if (lp.is_cut[static_cast<size_t>(v)]) out.push_back(v);
  }
  return out;
}

std::vector<Edge> bridges(const Graph& g) {
  Lowpoint lp(g);
  std::sort(lp.bridge_list.begin(), lp.bridge_list.end());
  return lp.bridge_list;
}

std::vector<Graph> biconnected_components(const Graph& g) {
  Lowpoint lp(g);
  std::vector<Graph> out;
  for (const auto& block : lp.blocks) {
    std::set<Vertex> vs;
    for (const Edge& e : block) {
      vs.insert(e.u);
      vs.insert(e.v);
    }
    std::vector<Vertex> vv(vs.begin(), vs.end());
    out.emplace_back(vv, block);
  }
  for (Vertex v : g.vertices()) {
    if (g.degree(v) == 0) {
      Vertex one[] = {v};
      out.emplace_back(std::span<const Vertex>(one), std::span<const Edge>());
    }
  }
  std::sort(out.begin(), out.end(), [](const Graph& a, const Graph& b) {
    return a.vertices() < b.vertices();
  });
  return out;
}

Graph remove_vertices(const Graph& g, std::span<const Vertex> removed) {
  std::vector<bool> drop(static_cast<size_t>(g.id_bound()), false);
  for (Vertex v : removed) {
    if (!g.has_vertex(v)) throw GraphError("cannot remove unknown vertex " + std::to_string(v));
    drop[static_cast<size_t>(v)] = true;
  }
  std::vector<Vertex> keep;
  for (Vertex v : g.vertices()) {
    if (!drop[static_cast<size_t>(v)]) keep.push_back(v);
  }
  return induced_subgraph(g, keep);
}

Graph remove_edges(const Graph& g, std::span<const Edge> removed) {
  std::set<Edge> drop;
  for (const Edge& e : removed) {
    Edge n(e.u, e.v);
    if (!g.has_edge(n)) throw GraphError("cannot remove missing edge " + to_string(Element::of(n)));
    drop.insert(n);
  }
  std::vector<Edge> keep;
  for (const Edge& e : g.edges()) {
    if (!drop.contains(e)) keep.push_back(e);
  }
  return Graph(g.vertices(), keep);
}

Graph add_edges(const Graph& g, std::span<const Edge> added) {
  std::set<Vertex> vs(g.vertices().begin(), g.vertices().end());
  std::vector<Edge> es = g.edges();
  for (const Edge& e : added) {
    if (e.u == e.v || e.u < 0) throw GraphError("malformed edge " + to_string(Element::of(e)));
    vs.insert(e.u);
    vs.insert(e.v);
    es.emplace_back(e.u, e.v);
  }
  std::vector<Vertex> vv(vs.begin(), vs.end());
  return Graph(vv, es);
}

Graph induced_subgraph(const Graph& g, std::span<const Vertex> keep) {
  std::vector<bool> in(static_cast<size_t>(g.id_bound()), false);
  std::vector<Vertex> vs;
  for (Vertex v : keep) {
    if (!g.has_vertex(v)) throw GraphError("unknown vertex " + std::to_string(v));
    if (!in[static_cast<size_t>(v)]) vs.push_back(v);
    in[static_cast<size_t>(v)] = true;
  }
  std::vector<Edge> es;
  for (const Edge& e : g.edges()) {
    if (in[static_cast<size_t>(e.u)] && in[static_cast<size_t>(e.v)]) es.push_back(e);
  }
  return Graph(vs, es);
}

}  // namespace outerlabel
