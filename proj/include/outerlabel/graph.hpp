#pragma once

#include <compare>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace outerlabel {

using Vertex = int;

class GraphError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Undirected edge, always stored with u < v.
struct Edge {
  Vertex u = 0;
  Vertex v = 0;

  Edge() = default;
  Edge(Vertex a, Vertex b) : u(a < b ? a : b), v(a < b ? b : a) {}

  bool has(Vertex x) const { return u == x || v == x; }
  Vertex other(Vertex x) const { return x == u ? v : u; }

  friend auto operator<=>(const Edge&, const Edge&) = default;
};

// An element of V(G) ∪ E(G).
struct Element {
  enum class Kind : std::uint8_t { kVertex, kEdge };

  Kind kind = Kind::kVertex;
  Vertex a = 0;
  Vertex b = -1;

  static Element of(Vertex v) { return {Kind::kVertex, v, -1}; }
  static Element of(Edge e) { return {Kind::kEdge, e.u, e.v}; }

  bool is_vertex() const { return kind == Kind::kVertex; }
  bool is_edge() const { return kind == Kind::kEdge; }
  Vertex vertex() const { return a; }
  Edge edge() const { return {a, b}; }

  friend auto operator<=>(const Element&, const Element&) = default;
};

std::string to_string(const Element& x);

/// Simple undirected graph over a sparse set of integer vertex ids.
///
/// Subgraphs produced by the removal operations keep the ids of the host, so
/// labelings of a subgraph can be read back against the original graph
/// without any renaming. `id_bound()` is one past the largest id that may
/// appear.
class Graph {
 public:
  Graph() = default;
  /// Vertices 0..n-1 and the given edges.
  Graph(int n, std::span<const Edge> edges);
  Graph(int n, std::initializer_list<Edge> edges)
      : Graph(n, std::span<const Edge>(edges.begin(), edges.size())) {}
  /// Explicit vertex set; every edge endpoint must be listed.
  Graph(std::span<const Vertex> vertices, std::span<const Edge> edges);

  int id_bound() const { return static_cast<int>(present_.size()); }
  int num_vertices() const { return static_cast<int>(vertices_.size()); }
  int num_edges() const { return static_cast<int>(edges_.size()); }
  int num_elements() const { return num_vertices() + num_edges(); }
  bool empty() const { return vertices_.empty(); }

  const std::vector<Vertex>& vertices() const { return vertices_; }
  const std::vector<Edge>& edges() const { return edges_; }

  bool has_vertex(Vertex v) const {
    return v >= 0 && v < id_bound() && present_[static_cast<size_t>(v)];
  }
  bool has_edge(Vertex a, Vertex b) const;
  bool has_edge(Edge e) const { return has_edge(e.u, e.v); }
  bool has_element(const Element& x) const {
    return x.is_vertex() ? has_vertex(x.a) : has_edge(x.edge());
  }

  /// Sorted neighbor list. Throws GraphError for an unknown vertex.
  std::span<const Vertex> neighbors(Vertex v) const;
  std::vector<Edge> incident_edges(Vertex v) const;
  int degree(Vertex v) const { return static_cast<int>(neighbors(v).size()); }
  int max_degree() const;
  int min_degree() const;

  /// All elements: vertices in id order, then edges in (u, v) order.
  std::vector<Element> elements() const;

  friend bool operator==(const Graph& a, const Graph& b) {
    return a.vertices_ == b.vertices_ && a.edges_ == b.edges_;
  }

 private:
  void check_vertex(Vertex v) const;

  std::vector<Vertex> vertices_;
  std::vector<Edge> edges_;
  std::vector<bool> present_;
  std::vector<std::vector<Vertex>> adj_;
};

// Connectivity primitives. All of them accept disconnected graphs.
bool is_connected(const Graph& g);
std::vector<Graph> connected_components(const Graph& g);
std::vector<Vertex> cut_vertices(const Graph& g);
std::vector<Edge> bridges(const Graph& g);
/// Maximal 2-connected pieces (bridges appear as single-edge pieces,
/// isolated vertices as single-vertex pieces). Ordered by smallest vertex.
std::vector<Graph> biconnected_components(const Graph& g);

// Derived graphs. Ids are preserved.
Graph remove_vertices(const Graph& g, std::span<const Vertex> removed);
Graph remove_edges(const Graph& g, std::span<const Edge> removed);
Graph add_edges(const Graph& g, std::span<const Edge> added);
Graph induced_subgraph(const Graph& g, std::span<const Vertex> keep);

}  // namespace outerlabel
