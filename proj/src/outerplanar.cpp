#include "outerlabel/outerplanar.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace outerlabel {

bool Face::contains(Vertex v) const { return std::find(vertices.begin(), vertices.end(), v) != vertices.end(); }

std::vector<Edge> Face::edges() const {
  std::vector<Edge> out;
  for (size_t i = 0; i < vertices.size(); ++i) out.emplace_back(vertices[i], vertices[(i + 1) % vertices.size()]);
  return out;
}

int Block::position(Vertex v) const {
  auto it = std::find(cycle.begin(), cycle.end(), v);
  return it == cycle.end() ? -1 : static_cast<int>(it - cycle.begin());
}

OuterplanarEmbedding::OuterplanarEmbedding(Graph host, std::vector<Block> blocks)
    : host_(std::move(host)), blocks_(std::move(blocks)) {
  std::set<Edge> inner;
  for (const Block& b : blocks_) inner.insert(b.chords.begin(), b.chords.end());
  for (const Edge& e : host_.edges()) (inner.contains(e) ? inner_ : outer_).push_back(e);
  cuts_ = outerlabel::cut_vertices(host_);
}

bool OuterplanarEmbedding::biconnected() const {
  return blocks_.size() == 1 && blocks_.front().is_cycle_block();
}

const std::vector<Vertex>& OuterplanarEmbedding::boundary() const {
  static const std::vector<Vertex> kNone;
  return biconnected() ? blocks_.front().cycle : kNone;
}

bool OuterplanarEmbedding::is_inner(Edge e) const { return std::binary_search(inner_.begin(), inner_.end(), e); }

std::vector<Face> OuterplanarEmbedding::inner_faces() const {
  std::vector<Face> out;
  for (const Block& b : blocks_) out.insert(out.end(), b.faces.begin(), b.faces.end());
  return out;
}

namespace {

// Backtracking search for a Hamiltonian cycle through `b`, starting at its
// smallest vertex. Returns an empty vector when none exists.
class HamiltonSearch {
 public:
  explicit HamiltonSearch(const Graph& b) : g_(b), used_(static_cast<size_t>(b.id_bound()), false) {}

  std::vector<Vertex> run() {
    Vertex s = g_.vertices().front();
    path_ = {s};
    used_[static_cast<size_t>(s)] = true;
    if (extend()) return path_;
    return {};
  }

 private:
  bool extend() {
    const Vertex s = path_.front();
    const Vertex cur = path_.back();
    if (static_cast<int>(path_.size()) == g_.num_vertices()) return g_.has_edge(cur, s);
    for (Vertex w : g_.neighbors(cur)) {
      if (used_[static_cast<size_t>(w)]) continue;
      used_[static_cast<size_t>(w)] = true;
      path_.push_back(w);
      if (feasible() && extend()) return true;
      path_.pop_back();
      used_[static_cast<size_t>(w)] = false;
    }
    return false;
  }

  // Every unvisited vertex still needs two usable neighbors.
  bool feasible() const {
    const Vertex s = path_.front();
    const Vertex cur = path_.back();
    for (Vertex v : g_.vertices()) {
      if (used_[static_cast<size_t>(v)]) continue;
      int free = 0;
      for (Vertex w : g_.neighbors(v)) {
        if (!used_[static_cast<size_t>(w)] || w == s || w == cur) ++free;
      }
      if (free < 2) return false;
    }
    return true;
  }

  const Graph& g_;
  std::vector<bool> used_;
  std::vector<Vertex> path_;
};

bool crosses(const std::vector<int>& pos, Edge a, Edge b) {
  int a1 = std::min(pos[static_cast<size_t>(a.u)], pos[static_cast<size_t>(a.v)]);
  int a2 = std::max(pos[static_cast<size_t>(a.u)], pos[static_cast<size_t>(a.v)]);
  int b1 = std::min(pos[static_cast<size_t>(b.u)], pos[static_cast<size_t>(b.v)]);
  int b2 = std::max(pos[static_cast<size_t>(b.u)], pos[static_cast<size_t>(b.v)]);
  auto inside = [&](int x) { return a1 < x && x < a2; };
  if (a1 == b1 || a1 == b2 || a2 == b1 || a2 == b2) return false;
  return inside(b1) != inside(b2);
}

// Faces of a cycle block: walk each half-edge, turning to the neighbor whose
// offset along the cycle is the largest one below the incoming vertex.
std::vector<Face> trace_faces(const Graph& b, const std::vector<Vertex>& cycle, const std::vector<Edge>& chords) {
  const int m = static_cast<int>(cycle.size());
  std::vector<int> pos(static_cast<size_t>(b.id_bound()), -1);
  for (int i = 0; i < m; ++i) pos[static_cast<size_t>(cycle[static_cast<size_t>(i)])] = i;
  auto offset = [&](Vertex from, Vertex to) {
    return ((pos[static_cast<size_t>(to)] - pos[static_cast<size_t>(from)]) % m + m) % m;
  };
  std::set<std::pair<Vertex, Vertex>> pending;
  for (int i = 0; i < m; ++i) pending.emplace(cycle[static_cast<size_t>(i)], cycle[static_cast<size_t>((i + 1) % m)]);
  for (const Edge& c : chords) {
    pending.emplace(c.u, c.v);
    pending.emplace(c.v, c.u);
  }
  std::set<Edge> chord_set(chords.begin(), chords.end());
  std::vector<Face> faces;
  while (!pending.empty()) {
    auto [u0, v0] = *pending.begin();
    Face f;
    Vertex u = u0;
    Vertex v = v0;
    do {
      pending.erase({u, v});
      f.vertices.push_back(u);
      int limit = offset(v, u);
      Vertex best = -1;
      int best_off = -1;
      for (Vertex w : b.neighbors(v)) {
        int o = offset(v, w);
        if (o < limit && o > best_off) {
          best_off = o;
          best = w;
        }
      }
      u = v;
      v = best;
    } while (!(u == u0 && v == v0));
    auto mn = std::min_element(f.vertices.begin(), f.vertices.end());
    std::rotate(f.vertices.begin(), mn, f.vertices.end());
    for (const Edge& e : f.edges()) f.inner_edge_count += chord_set.contains(e) ? 1 : 0;
    faces.push_back(std::move(f));
  }
  std::sort(faces.begin(), faces.end(), [](const Face& a, const Face& c) { return a.vertices < c.vertices; });
  return faces;
}

Block embed_block(const Graph& b, Orientation o) {
  Block out;
  if (b.num_vertices() <= 2) {
    out.cycle = b.vertices();
    return out;
  }
  if (b.num_edges() > 2 * b.num_vertices() - 3) throw NotOuterplanar("block has too many edges to be outerplanar");
  std::vector<Vertex> cyc = HamiltonSearch(b).run();
  if (cyc.empty()) throw NotOuterplanar("block has no Hamiltonian boundary cycle");
  if (cyc[1] > cyc.back()) std::reverse(cyc.begin() + 1, cyc.end());
  if (o == Orientation::kReversed) std::reverse(cyc.begin() + 1, cyc.end());

  const int m = static_cast<int>(cyc.size());
  std::vector<int> pos(static_cast<size_t>(b.id_bound()), -1);
  for (int i = 0; i < m; ++i) pos[static_cast<size_t>(cyc[static_cast<size_t>(i)])] = i;
  std::set<Edge> ring;
  for (int i = 0; i < m; ++i) ring.emplace(cyc[static_cast<size_t>(i)], cyc[static_cast<size_t>((i + 1) % m)]);
  for (const Edge& e : b.edges()) {
    if (!ring.contains(e)) out.chords.push_back(e);
  }
  for (size_t i = 0; i < out.chords.size(); ++i) {
    for (size_t j = i + 1; j < out.chords.size(); ++j) {
      if (crosses(pos, out.chords[i], out.chords[j])) throw NotOuterplanar("boundary chords cross");
    }
  }
  out.cycle = cyc;
  out.faces = trace_faces(b, cyc, out.chords);
  return out;
}

}  // namespace

OuterplanarEmbedding recognize_embed(const Graph& g, Orientation o) {
  std::vector<Block> blocks;
  for (const Graph& b : biconnected_components(g)) blocks.push_back(embed_block(b, o));
  return OuterplanarEmbedding(g, std::move(blocks));
}

bool is_outerplanar(const Graph& g) {
  try {
    recognize_embed(g);
    return true;
  } catch (const NotOuterplanar&) {
    return false;
  }
}

std::vector<Face> endfaces(const OuterplanarEmbedding& emb) {
  std::vector<Face> out;
  for (const Face& f : emb.inner_faces()) {
    if (f.inner_edge_count == 1) out.push_back(f);
  }
  return out;
}

BoundaryDecomposition boundary_decompose(const OuterplanarEmbedding& emb, Vertex start) {
  const Graph& g = emb.host();
  if (!emb.biconnected()) throw PreconditionError("boundary_decompose needs a 2-connected host");
  if (g.max_degree() != 3) throw PreconditionError("boundary_decompose needs maximum degree 3");
  if (emb.inner_edges().empty()) throw PreconditionError("boundary_decompose needs an inner edge");
  std::vector<Vertex> cyc = emb.boundary();
  if (start < 0) {
    start = *std::find_if(cyc.begin(), cyc.end(), [&](Vertex v) { return g.degree(v) == 3; });
  }
  if (!g.has_vertex(start) || g.degree(start) != 3) throw PreconditionError("start must be a 3-vertex");
  std::rotate(cyc.begin(), std::find(cyc.begin(), cyc.end(), start), cyc.end());
  BoundaryDecomposition d;
  for (Vertex v : cyc) {
    if (g.degree(v) == 3) {
      d.x.push_back(v);
      d.y.emplace_back();
    } else {
      d.y.back().push_back(v);
    }
  }
  for (const auto& gap : d.y) d.q.push_back(static_cast<int>(gap.size()));
  return d;
}

}  // namespace outerlabel
