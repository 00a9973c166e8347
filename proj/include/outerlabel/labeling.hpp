#pragma once

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "outerlabel/graph.hpp"

namespace outerlabel {

using Label = int;

/// Largest label the value type stores.
inline constexpr Label kMaxStoredLabel = 255;

class LabelingError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Partial or total map V(G) ∪ E(G) → {0..255}, tagged with a declared span
/// bound k. Labels above k can be stored (they come from parsed input) and
/// are reported by `verify`.
class TotalLabeling {
 public:
  TotalLabeling() = default;
  TotalLabeling(Graph host, int k);

  const Graph& host() const { return host_; }
  int k() const { return k_; }
  void set_k(int k);

  void set(const Element& x, Label l);
  void set(Vertex v, Label l) { set(Element::of(v), l); }
  void set(Edge e, Label l) { set(Element::of(e), l); }
  void set(Vertex a, Vertex b, Label l) { set(Element::of(Edge(a, b)), l); }
  void clear(const Element& x);

  std::optional<Label> get(const Element& x) const;
  std::optional<Label> get(Vertex v) const { return get(Element::of(v)); }
  std::optional<Label> get(Edge e) const { return get(Element::of(e)); }
  /// Throws LabelingError when x is unassigned.
  Label at(const Element& x) const;
  Label at(Vertex v) const { return at(Element::of(v)); }
  Label at(Vertex a, Vertex b) const { return at(Element::of(Edge(a, b))); }
  Label at(Edge e) const { return at(Element::of(e)); }

  bool assigned(const Element& x) const { return get(x).has_value(); }
  int num_assigned() const;
  bool is_total() const { return num_assigned() == host_.num_elements(); }

  /// Assigned (element, label) pairs, vertices first, in element order.
  std::vector<std::pair<Element, Label>> assignments() const;

  /// Copies every assignment of `other` whose element exists in this host.
  void merge_from(const TotalLabeling& other);
  /// Same labels, restricted to (or re-hosted on) `host`.
  TotalLabeling rehost(const Graph& host) const;

  friend bool operator==(const TotalLabeling& a, const TotalLabeling& b) {
    return a.k_ == b.k_ && a.host_ == b.host_ && a.vertex_labels_ == b.vertex_labels_ &&
           a.edge_labels_ == b.edge_labels_;
  }

 private:
  void check_element(const Element& x) const;

  Graph host_;
  int k_ = 0;
  std::vector<int> vertex_labels_;  // -1 when unassigned, indexed by vertex id
  std::map<Edge, int> edge_labels_;
};

struct Violation {
  enum class Kind {
    kVertexEdgeTooClose,
    kAdjacentVerticesEqual,
    kAdjacentEdgesEqual,
    kUnlabeledElement,
    kLabelOutOfRange,
  };
  Kind kind;
  std::vector<Element> witnesses;

  friend bool operator==(const Violation&, const Violation&) = default;
};

std::string to_string(Violation::Kind kind);
std::string to_string(const Violation& v);

/// Checks the (p,1)-total labeling conditions. Returns every violation, in a
/// deterministic order; an empty list means the labeling is valid.
std::vector<Violation> verify(const TotalLabeling& f, int p = 2);
bool is_valid(const TotalLabeling& f, int p = 2);
/// Like `verify`, but unlabeled elements are skipped instead of reported.
/// Used for partial labelings that are about to be extended.
bool is_consistent(const TotalLabeling& f, int p = 2);

/// Largest assigned label. Throws LabelingError for an empty assignment.
Label span(const TotalLabeling& f);

/// z ↦ k − f(z). Throws LabelingError if some label exceeds k.
TotalLabeling complement(const TotalLabeling& f, int k);
inline TotalLabeling complement(const TotalLabeling& f) { return complement(f, f.k()); }

/// Graph with every edge subdivided once. Original vertices keep their ids;
/// the subdivision vertex of the i-th edge (in host edge order) gets id
/// `g.id_bound() + i`.
struct IncidenceGraph {
  Graph graph;
  std::vector<Element> source;  // indexed by incidence-graph vertex id
};
IncidenceGraph incidence_graph(const Graph& g);

/// Reads a vertex labeling of the incidence graph as a total labeling of g.
TotalLabeling pullback(const IncidenceGraph& inc, const Graph& g, const std::vector<Label>& labels,
                       int k);

/// True when `labels` (indexed by vertex id) is an L(p,1)-labeling of g.
bool is_lp1_labeling(const Graph& g, const std::vector<Label>& labels, int p);

}  // namespace outerlabel
