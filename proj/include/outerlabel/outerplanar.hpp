#pragma once

#include <stdexcept>
#include <vector>

#include "outerlabel/graph.hpp"

namespace outerlabel {

class NotOuterplanar : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class PreconditionError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// Inner face as a cyclic vertex sequence, in boundary orientation.
struct Face {
  std::vector<Vertex> vertices;
  int inner_edge_count = 0;

  int size() const { return static_cast<int>(vertices.size()); }
  bool contains(Vertex v) const;
  std::vector<Edge> edges() const;
};

/// One biconnected piece. `cycle` is the boundary cycle (size ≥ 3), or the
/// two endpoints of a bridge, or a lone vertex.
struct Block {
  std::vector<Vertex> cycle;
  std::vector<Edge> chords;
  std::vector<Face> faces;

  bool is_cycle_block() const { return cycle.size() >= 3; }
  /// Index of v along `cycle`, or -1.
  int position(Vertex v) const;
};

enum class Orientation { kForward, kReversed };

/// Outerplane embedding of a (possibly disconnected) outerplanar graph.
///
/// Each block's cycle starts at its smallest vertex. With kForward the
/// second vertex is the smaller of its two cycle neighbors; kReversed walks
/// the other way. "Clockwise" always means the stored order.
class OuterplanarEmbedding {
 public:
  OuterplanarEmbedding() = default;
  OuterplanarEmbedding(Graph host, std::vector<Block> blocks);

  const Graph& host() const { return host_; }
  const std::vector<Block>& blocks() const { return blocks_; }

  /// Boundary cycle of a 2-connected host; empty otherwise.
  const std::vector<Vertex>& boundary() const;
  bool biconnected() const;

  const std::vector<Edge>& outer_edges() const { return outer_; }
  const std::vector<Edge>& inner_edges() const { return inner_; }
  bool is_inner(Edge e) const;
  bool is_outer(Edge e) const { return host_.has_edge(e) && !is_inner(e); }

  /// Inner faces of every block.
  std::vector<Face> inner_faces() const;
  const std::vector<Vertex>& cut_vertices() const { return cuts_; }

 private:
  Graph host_;
  std::vector<Block> blocks_;
  std::vector<Edge> outer_;
  std::vector<Edge> inner_;
  std::vector<Vertex> cuts_;
};

/// Throws NotOuterplanar when some block has no boundary Hamiltonian cycle
/// with pairwise non-crossing chords.
OuterplanarEmbedding recognize_embed(const Graph& g, Orientation o = Orientation::kForward);
bool is_outerplanar(const Graph& g);

/// Inner faces carrying exactly one inner edge.
std::vector<Face> endfaces(const OuterplanarEmbedding& emb);

/// (x_i, y^i, q_i) reading of the boundary of a 2-connected host with Δ=3.
struct BoundaryDecomposition {
  std::vector<Vertex> x;               // 3-vertices in boundary order
  std::vector<std::vector<Vertex>> y;  // y[i]: 2-vertices strictly between x[i] and x[i+1]
  std::vector<int> q;
};

/// `start` must be a 3-vertex; -1 picks the first 3-vertex on the boundary.
BoundaryDecomposition boundary_decompose(const OuterplanarEmbedding& emb, Vertex start = -1);

}  // namespace outerlabel
