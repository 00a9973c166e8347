#include "outerlabel/labeling.hpp"

#include <algorithm>
#include <cstdlib>

namespace outerlabel {

TotalLabeling::TotalLabeling(Graph host, int k) : host_(std::move(host)) {
  set_k(k);
  vertex_labels_.assign(static_cast<size_t>(host_.id_bound()), -1);
}

void TotalLabeling::set_k(int k) {
  if (k < 0 || k > kMaxStoredLabel) throw LabelingError("span bound out of range: " + std::to_string(k));
  k_ = k;
}

void TotalLabeling::check_element(const Element& x) const {
  if (!host_.has_element(x)) throw LabelingError("element " + to_string(x) + " is not in the host graph");
}

void TotalLabeling::set(const Element& x, Label l) {
  check_element(x);
  if (l < 0 || l > kMaxStoredLabel) throw LabelingError("label out of range: " + std::to_string(l));
  if (x.is_vertex()) {
    vertex_labels_[static_cast<size_t>(x.a)] = l;
  } else {
    edge_labels_[x.edge()] = l;
  }
}

void TotalLabeling::clear(const Element& x) {
  check_element(x);
  if (x.is_vertex()) {
    vertex_labels_[static_cast<size_t>(x.a)] = -1;
  } else {
    edge_labels_.erase(x.edge());
  }
}

std::optional<Label> TotalLabeling::get(const Element& x) const {
  if (!host_.has_element(x)) return std::nullopt;
  if (x.is_vertex()) {
    int l = vertex_labels_[static_cast<size_t>(x.a)];
    if (l < 0) return std::nullopt;
    return l;
  }
  auto it = edge_labels_.find(x.edge());
  if (it == edge_labels_.end()) return std::nullopt;
  return it->second;
}

Label TotalLabeling::at(const Element& x) const {
  auto l = get(x);
  if (!l) throw LabelingError("element " + to_string(x) + " is unlabeled");
  return *l;
}

int TotalLabeling::num_assigned() const {
  int n = static_cast<int>(edge_labels_.size());
  for (Vertex v : host_.vertices()) {
    if (vertex_labels_[static_cast<size_t>(v)] >= 0) ++n;
  }
  return n;
}

std::vector<std::pair<Element, Label>> TotalLabeling::assignments() const {
  std::vector<std::pair<Element, Label>> out;
  for (Vertex v : host_.vertices()) {
    int l = vertex_labels_[static_cast<size_t>(v)];
    if (l >= 0) out.emplace_back(Element::of(v), l);
  }
  for (const auto& [e, l] : edge_labels_) out.emplace_back(Element::of(e), l);
  return out;
}

void TotalLabeling::merge_from(const TotalLabeling& other) {
  for (const auto& [x, l] : other.assignments()) {
    if (host_.has_element(x)) set(x, l);
  }
}

TotalLabeling TotalLabeling::rehost(const Graph& host) const {
  TotalLabeling out(host, k_);
  out.merge_from(*this);
  return out;
}

std::string to_string(Violation::Kind kind) {
  switch (kind) {
    case Violation::Kind::kVertexEdgeTooClose: return "vertex-edge-too-close";
    case Violation::Kind::kAdjacentVerticesEqual: return "adjacent-vertices-equal";
    case Violation::Kind::kAdjacentEdgesEqual: return "adjacent-edges-equal";
    case Violation::Kind::kUnlabeledElement: return "unlabeled-element";
    case Violation::Kind::kLabelOutOfRange: return "label-out-of-range";
  }
  return "unknown";
}

std::string to_string(const Violation& v) {
  std::string s = to_string(v.kind);
  for (const auto& w : v.witnesses) s += " " + to_string(w);
  return s;
}

namespace {

std::vector<Violation> check(const TotalLabeling& f, int p, bool report_unlabeled) {
  const Graph& g = f.host();
  std::vector<Violation> out;
  using K = Violation::Kind;

  for (const Element& x : g.elements()) {
    auto l = f.get(x);
    if (!l) {
      if (report_unlabeled) out.push_back({K::kUnlabeledElement, {x}});
    } else if (*l > f.k()) {
      out.push_back({K::kLabelOutOfRange, {x}});
    }
  }
  for (const Edge& e : g.edges()) {
    auto le = f.get(e);
    auto lu = f.get(e.u);
    auto lv = f.get(e.v);
    if (lu && lv && *lu == *lv) {
      out.push_back({K::kAdjacentVerticesEqual, {Element::of(e.u), Element::of(e.v)}});
    }
    if (le) {
      for (Vertex x : {e.u, e.v}) {
        auto lx = f.get(x);
        if (lx && std::abs(*lx - *le) < p) out.push_back({K::kVertexEdgeTooClose, {Element::of(x), Element::of(e)}});
      }
    }
  }
  for (Vertex v : g.vertices()) {
    auto nb = g.neighbors(v);
    for (size_t i = 0; i < nb.size(); ++i) {
      for (size_t j = i + 1; j < nb.size(); ++j) {
        Edge a(v, nb[i]);
        Edge b(v, nb[j]);
        auto la = f.get(a);
        auto lb = f.get(b);
        if (la && lb && *la == *lb) out.push_back({K::kAdjacentEdgesEqual, {Element::of(a), Element::of(b)}});
      }
    }
  }
  return out;
}

}  // namespace

std::vector<Violation> verify(const TotalLabeling& f, int p) { return check(f, p, true); }

bool is_valid(const TotalLabeling& f, int p) { return verify(f, p).empty(); }

bool is_consistent(const TotalLabeling& f, int p) { return check(f, p, false).empty(); }

Label span(const TotalLabeling& f) {
  Label best = -1;
  for (const auto& [x, l] : f.assignments()) best = std::max(best, l);
  if (best < 0) throw LabelingError("span of an empty labeling");
  return best;
}

TotalLabeling complement(const TotalLabeling& f, int k) {
  TotalLabeling out(f.host(), k);
  for (const auto& [x, l] : f.assignments()) {
    if (l > k) throw LabelingError("label " + std::to_string(l) + " exceeds complement bound " + std::to_string(k));
    out.set(x, k - l);
  }
  return out;
}

IncidenceGraph incidence_graph(const Graph& g) {
  IncidenceGraph inc;
  std::vector<Vertex> vs = g.vertices();
  std::vector<Edge> es;
  const int base = g.id_bound();
  inc.source.assign(static_cast<size_t>(base + g.num_edges()), Element::of(-1));
  for (Vertex v : g.vertices()) inc.source[static_cast<size_t>(v)] = Element::of(v);
  int i = 0;
  for (const Edge& e : g.edges()) {
    Vertex mid = base + i++;
    vs.push_back(mid);
    es.emplace_back(e.u, mid);
    es.emplace_back(mid, e.v);
    inc.source[static_cast<size_t>(mid)] = Element::of(e);
  }
  inc.graph = Graph(vs, es);
  return inc;
}

TotalLabeling pullback(const IncidenceGraph& inc, const Graph& g, const std::vector<Label>& labels, int k) {
  TotalLabeling f(g, k);
  for (Vertex v : inc.graph.vertices()) {
    Label l = labels.at(static_cast<size_t>(v));
    if (l >= 0) f.set(inc.source[static_cast<size_t>(v)], l);
  }
  return f;
}

bool is_lp1_labeling(const Graph& g, const std::vector<Label>& labels, int p) {
  auto lab = [&](Vertex v) { return labels.at(static_cast<size_t>(v)); };
  for (Vertex v : g.vertices()) {
    if (lab(v) < 0) return false;
    auto nb = g.neighbors(v);
    for (size_t i = 0; i < nb.size(); ++i) {
      if (std::abs(lab(v) - lab(nb[i])) < p) return false;
      for (size_t j = i + 1; j < nb.size(); ++j) {
        if (lab(nb[i]) == lab(nb[j])) return false;
      }
    }
  }
  return true;
}

}  // namespace outerlabel
