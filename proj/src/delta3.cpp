#include "outerlabel/delta3.hpp"

#include <algorithm>
#include <cstdlib>
#include <functional>
#include <set>

#include "outerlabel/exact.hpp"

namespace outerlabel {

namespace {

bool contains(const std::vector<Vertex>& vs, Vertex v) { return std::find(vs.begin(), vs.end(), v) != vs.end(); }

void note(std::vector<std::string>* trace, const std::string& s) {
  if (trace) trace->push_back(s);
}

// Index (0-based) of the label-2 vertex in an odd gap.
size_t choose_special(const std::vector<Vertex>& gap, const LabelK2Options& opts) {
  for (size_t j = 0; j < gap.size(); ++j) {
    if (contains(opts.prefer_special, gap[j])) return j;
  }
  const size_t mid = (gap.size() - 1) / 2;
  std::vector<size_t> order(gap.size());
  for (size_t j = 0; j < gap.size(); ++j) order[j] = j;
  std::stable_sort(order.begin(), order.end(), [&](size_t a, size_t b) {
    auto da = a > mid ? a - mid : mid - a;
    auto db = b > mid ? b - mid : mid - b;
    return da < db;
  });
  for (size_t j : order) {
    if (!contains(opts.avoid_special, gap[j])) return j;
  }
  return mid;
}

// Step 2 of LABEL-K2 for one gap whose ends carry labels a and b.
void label_gap(TotalLabeling& f, const std::vector<Vertex>& gap, int a, int b, const LabelK2Options& opts,
               const std::function<int(int)>& tr = [](int l) { return l; }) {
  if (gap.size() % 2 == 0) {
    for (size_t j = 0; j < gap.size(); ++j) f.set(gap[j], tr(j % 2 == 0 ? b : a));
    return;
  }
  size_t s = choose_special(gap, opts);
  int k = 0;
  for (size_t j = 0; j < gap.size(); ++j) {
    if (j == s) {
      f.set(gap[j], tr(2));
    } else {
      f.set(gap[j], tr(k++ % 2 == 0 ? b : a));
    }
  }
}

}  // namespace

TotalLabeling label_k2(const OuterplanarEmbedding& emb, const LabelK2Options& opts, std::vector<std::string>* trace) {
  const Graph& g = emb.host();
  if (!emb.biconnected()) throw PreconditionError("label_k2 needs a 2-connected host");
  if (g.max_degree() > 3) throw PreconditionError("label_k2 needs maximum degree 3");
  if (emb.inner_edges().empty()) throw PreconditionError("label_k2 needs an inner edge");
  if (opts.start_parity != 0 && opts.start_parity != 1) throw PreconditionError("start parity must be 0 or 1");
  if (opts.outer_edge_seed && opts.outer_edge_seed->second != 4 && opts.outer_edge_seed->second != 5) {
    throw PreconditionError("outer edge seed label must be 4 or 5");
  }

  BoundaryDecomposition d = boundary_decompose(emb, opts.start_vertex);
  const size_t p = d.x.size();
  if (p % 2 != 0) throw InfeasibleTrace("odd number of 3-vertices on the boundary");
  TotalLabeling f(g, 5);

  for (size_t i = 0; i < p; ++i) f.set(d.x[i], static_cast<int>((static_cast<size_t>(opts.start_parity) + i) % 2));
  note(trace, "step1: x1=" + std::to_string(d.x[0]) + " label " + std::to_string(opts.start_parity) + ", p=" +
                  std::to_string(p));

  for (size_t i = 0; i < p; ++i) {
    label_gap(f, d.y[i], f.at(d.x[i]), f.at(d.x[(i + 1) % p]), opts);
  }
  for (const Edge& e : emb.inner_edges()) f.set(e, 3);

  std::vector<Vertex> cyc = emb.boundary();
  std::rotate(cyc.begin(), std::find(cyc.begin(), cyc.end(), d.x[0]), cyc.end());
  const size_t n = cyc.size();
  auto ring = [&](size_t k) { return Edge(cyc[k % n], cyc[(k + 1) % n]); };

  // Labels 4/5 alternate along `path`; the seed (or path[0] = 4) fixes the phase.
  auto alternate = [&](const std::vector<Edge>& path) {
    size_t anchor = 0;
    int label = 4;
    if (opts.outer_edge_seed) {
      auto it = std::find(path.begin(), path.end(), opts.outer_edge_seed->first);
      if (it == path.end()) throw PreconditionError("seed edge is not on the alternating part of the boundary");
      anchor = static_cast<size_t>(it - path.begin());
      label = opts.outer_edge_seed->second;
    }
    for (size_t k = 0; k < path.size(); ++k) {
      size_t dist = k > anchor ? k - anchor : anchor - k;
      f.set(path[k], dist % 2 == 0 ? label : 9 - label);
    }
  };

  if (n % 2 == 0) {
    std::vector<Edge> path;
    for (size_t k = 0; k < n; ++k) path.push_back(ring(k));
    alternate(path);
    note(trace, "step4.1: even order, outer edges alternate 4/5");
    return f;
  }

  // Odd order: pick an endface gap.
  std::vector<size_t> start_pos(p, 0);
  for (size_t i = 1; i < p; ++i) start_pos[i] = start_pos[i - 1] + d.y[i - 1].size() + 1;
  std::optional<size_t> best;
  bool best_clean = false;
  Vertex best_low = 0;
  for (size_t i = 0; i < p; ++i) {
    Vertex a = d.x[i], b = d.x[(i + 1) % p];
    if (d.y[i].empty() || !emb.is_inner(Edge(a, b))) continue;
    std::vector<Vertex> face = d.y[i];
    face.push_back(a);
    face.push_back(b);
    bool clean = std::none_of(face.begin(), face.end(), [&](Vertex v) { return contains(opts.endface_avoid, v); });
    Vertex low = *std::min_element(face.begin(), face.end());
    if (!best || (clean && !best_clean) || (clean == best_clean && low < best_low)) {
      best = i;
      best_clean = clean;
      best_low = low;
    }
  }
  if (!best) throw InfeasibleTrace("odd order but no endface");
  if (!best_clean) note(trace, "step4.2: every endface meets an avoided vertex; using the default one");
  const size_t i = *best;
  const size_t pos = start_pos[i];
  const std::vector<Vertex>& y = d.y[i];
  const Vertex xi = d.x[i], xj = d.x[(i + 1) % p];

  if (y.size() >= 2) {
    f.set(Edge(y[0], y[1]), 3);
    std::vector<Edge> path;
    for (size_t k = 2; k <= n; ++k) path.push_back(ring(pos + k));
    alternate(path);
    if (f.at(y[0]) == 2 || f.at(y[1]) == 2) {
      f.set(y[0], f.at(xj));
      f.set(y[1], f.at(xi));
      f.set(y[2], 2);
      note(trace, "step4.2.1: reassigned y1,y2,y3");
    }
    note(trace, "step4.2.1: endface at x=" + std::to_string(xi) + ", q=" + std::to_string(y.size()));
  } else {
    const Vertex zero = f.at(xi) == 0 ? xi : xj;
    const Vertex one = zero == xi ? xj : xi;
    f.set(y[0], 5);
    f.set(Edge(zero, y[0]), 2);
    f.set(Edge(y[0], one), 3);
    std::vector<Edge> path;
    for (size_t k = 2; k < n; ++k) path.push_back(ring(pos + k));
    alternate(path);
    int l = f.at(path.front());
    f.set(Edge(xi, xj), 9 - l);
    note(trace, "step4.2.2: endface at x=" + std::to_string(xi) + ", q=1, chord gets " + std::to_string(9 - l));
  }
  return f;
}

TotalLabeling label_cycle_or_path(const Graph& g) {
  if (!g.empty() && g.max_degree() > 2) throw PreconditionError("label_cycle_or_path needs maximum degree 2");
  TotalLabeling f(g, 4);
  for (const Graph& c : connected_components(g)) {
    // Walk the component, interleaving vertices and edges.
    std::vector<Element> seq;
    const bool cycle = c.num_edges() == c.num_vertices() && c.num_vertices() >= 3;
    Vertex start = c.vertices().front();
    if (!cycle) {
      for (Vertex v : c.vertices()) {
        if (c.degree(v) <= 1) {
          start = v;
          break;
        }
      }
    }
    Vertex prev = -1, cur = start;
    for (int step = 0; step < c.num_vertices(); ++step) {
      seq.push_back(Element::of(cur));
      Vertex next = -1;
      for (Vertex w : c.neighbors(cur)) {
        if (w != prev && !(step > 0 && w == start)) {
          next = w;
          break;
        }
      }
      if (next < 0) {
        if (cycle) seq.push_back(Element::of(Edge(cur, start)));
        break;
      }
      seq.push_back(Element::of(Edge(cur, next)));
      prev = cur;
      cur = next;
    }
    if (cycle && seq.back().is_vertex()) seq.push_back(Element::of(Edge(cur, start)));

    const size_t m = seq.size();
    std::vector<int> labels;
    if (cycle) {
      // m = 3a + 4b with blocks (0,2,4) and (0,3,1,4).
      size_t b = 0;
      while ((m - 4 * b) % 3 != 0) ++b;
      size_t a = (m - 4 * b) / 3;
      for (size_t k = 0; k < a; ++k) labels.insert(labels.end(), {0, 2, 4});
      for (size_t k = 0; k < b; ++k) labels.insert(labels.end(), {0, 3, 1, 4});
    } else if (m == 1) {
      labels = {0};
    } else if (m == 3) {
      labels = {0, 3, 1};
    } else {
      for (size_t k = 0; k < m; ++k) labels.push_back(static_cast<int>(2 * (k % 3)));
    }
    for (size_t k = 0; k < m; ++k) f.set(seq[k], labels[k]);
  }
  return f;
}

namespace {

SearchOptions fallback_search() {
  SearchOptions o;
  o.element_cap = 96;
  o.symmetry_pruning = false;
  o.time_budget_s = 30.0;
  return o;
}

std::optional<TotalLabeling> complete_over(TotalLabeling f, const std::vector<Element>& free, int k) {
  for (const Element& x : free) {
    if (f.assigned(x)) f.clear(x);
  }
  if (!is_consistent(f)) return std::nullopt;
  return extend_bounded(f, free, k, 2, fallback_search());
}

std::vector<Element> elements_of(const Graph& g) { return g.elements(); }

}  // namespace

TotalLabeling extend_lemma1(const Graph& g, const TotalLabeling& f_in, const Lemma1Cut& cut_in, LabelReport* report,
                            Orientation o) {
  Lemma1Cut c = cut_in;
  for (Vertex v : {c.u, c.v, c.u_prime, c.v_prime}) {
    if (!g.has_vertex(v)) throw PreconditionError("lemma cut names an unknown vertex");
  }
  if (!g.has_edge(c.u, c.u_prime) || !g.has_edge(c.v, c.v_prime)) throw PreconditionError("lemma cut edges missing");
  if (c.u_prime == c.v_prime) throw PreconditionError("lemma needs u' != v'");

  Vertex removed[] = {c.u, c.v};
  Graph rest = remove_vertices(g, removed);
  std::vector<Vertex> g2v;
  for (const Graph& comp : connected_components(rest)) {
    if (comp.has_vertex(c.u_prime)) g2v = comp.vertices();
  }
  if (!contains(g2v, c.v_prime) || g2v.size() < 2) throw PreconditionError("u' and v' must share a component");
  const Graph g2 = induced_subgraph(g, g2v);

  auto get = [&](const TotalLabeling& f, Element x) {
    auto l = f.get(x);
    if (!l) throw PreconditionError("lemma input leaves " + to_string(x) + " unlabeled");
    return *l;
  };
  const int fu = get(f_in, Element::of(c.u_prime)), fv = get(f_in, Element::of(c.v_prime));
  const int fuu = get(f_in, Element::of(Edge(c.u, c.u_prime))), fvv = get(f_in, Element::of(Edge(c.v, c.v_prime)));
  auto in = [](int l, int a, int b) { return l == a || l == b; };
  const bool cond_i = in(fu, 0, 1) && in(fv, 0, 1) && in(fuu, 4, 5) && in(fvv, 4, 5);
  const bool cond_ii = in(fu, 4, 5) && in(fv, 4, 5) && in(fuu, 0, 1) && in(fvv, 0, 1);
  if (fu == fv || !(cond_i || cond_ii)) throw PreconditionError("lemma label conditions do not hold");

  // Condition (ii) is condition (i) for the complement.
  TotalLabeling F(g, 5);
  F.merge_from(f_in);
  for (Vertex v : g2v) {
    if (v != c.u_prime && v != c.v_prime && F.assigned(Element::of(v))) F.clear(Element::of(v));
  }
  for (const Edge& e : g2.edges()) {
    if (F.assigned(Element::of(e))) F.clear(Element::of(e));
  }
  const bool flipped = cond_ii;
  if (flipped) F = complement(F, 5);
  if (F.at(c.u_prime) == 1) {
    std::swap(c.u, c.v);
    std::swap(c.u_prime, c.v_prime);
  }
  const bool case1 = F.at(Edge(c.u, c.u_prime)) == F.at(Edge(c.v, c.v_prime));
  const int du = g.degree(c.u_prime), dv = g.degree(c.v_prime);
  const bool mixed = du != dv;
  std::vector<std::string>* tr = report ? &report->trace : nullptr;
  note(tr, std::string("lemma1: case ") + (case1 ? "1" : "2") + (mixed ? ".2" : ".1") +
               (flipped ? " (complemented)" : ""));

  std::vector<Element> g2_elems;
  for (Vertex v : g2v) g2_elems.push_back(Element::of(v));
  for (const Edge& e : g2.edges()) g2_elems.push_back(Element::of(e));

  auto fallback = [&](const std::string& why) -> TotalLabeling {
    if (report) {
      report->discrepancies.push_back("lemma1: " + why);
      ++report->fallbacks;
    }
    TotalLabeling base(g, 5);
    base.merge_from(f_in);
    auto done = complete_over(base, g2_elems, 5);
    if (!done) throw InfeasibleTrace("lemma1 completion failed: " + why);
    return *done;
  };

  if (du == 2 && dv == 2 && g2.has_edge(c.u_prime, c.v_prime)) {
    if (g2.num_vertices() != 2) return fallback("u' and v' already adjacent");
    // G2 is the single edge u'v' between labels 0 and 1; 3 clears both ends.
    TotalLabeling R = F;
    R.set(c.u_prime, 0);
    R.set(c.v_prime, 1);
    R.set(Edge(c.u_prime, c.v_prime), 3);
    if (flipped) R = complement(R, 5);
    if (!is_valid(R)) return fallback("single-edge G2 failed verification");
    note(tr, "lemma1: G2 is a single edge");
    return R;
  }

  const Vertex x = g.id_bound();
  const Vertex y = x + 1;
  std::vector<Vertex> vs = g2v;
  std::vector<Edge> es = g2.edges();
  vs.push_back(x);
  es.emplace_back(c.u_prime, x);
  if (case1) {
    vs.push_back(y);
    es.emplace_back(x, y);
    es.emplace_back(y, c.v_prime);
  } else {
    es.emplace_back(x, c.v_prime);
  }
  if (du == 2 && dv == 2) es.emplace_back(c.u_prime, c.v_prime);
  const Graph g3(vs, es);

  LabelK2Options opt;
  Vertex s = c.u_prime, t = c.v_prime;
  if (mixed && du == 2) std::swap(s, t);
  opt.start_vertex = s;
  opt.start_parity = F.at(s);
  opt.endface_avoid = case1 ? std::vector<Vertex>{x, y} : std::vector<Vertex>{x};
  opt.outer_edge_seed = std::make_pair(Edge(c.u_prime, x), F.at(Edge(c.u, c.u_prime)));
  if (mixed && case1) opt.avoid_special = {x, y, t};
  if (mixed && !case1) opt.prefer_special = {x};

  TotalLabeling R = F;
  try {
    TotalLabeling f1 = label_k2(recognize_embed(g3, o), opt, tr);
    for (Vertex v : g2v) R.set(v, f1.at(v));
    for (const Edge& e : g2.edges()) R.set(e, f1.at(e));
    if (mixed && R.at(t) != F.at(t)) {
      // Prefer {0,2} minus the outer neighbor's label; any label that fits
      // the closed neighborhood of t is accepted after that.
      const Vertex outer = t == c.u_prime ? c.u : c.v;
      std::vector<int> order = {F.at(outer) != 2 ? 2 : 0};
      for (int l = 0; l <= 5; ++l) order.push_back(l);
      auto fits = [&](int l) {
        for (Vertex z : g.neighbors(t)) {
          if (R.get(z) == l) return false;
          auto le = R.get(Edge(t, z));
          if (le && std::abs(*le - l) < 2) return false;
        }
        return true;
      };
      auto pick = std::find_if(order.begin(), order.end(), fits);
      if (pick == order.end()) return fallback("no label fits the patched vertex");
      if (pick != order.begin()) note(tr, "lemma1: default patch label clashes inside G2");
      R.set(t, *pick);
      note(tr, "lemma1: patched v' to " + std::to_string(R.at(t)));
    }
  } catch (const std::exception& e) {
    return fallback(std::string("label_k2 on the auxiliary graph failed: ") + e.what());
  }
  if (flipped) R = complement(R, 5);
  if (auto bad = verify(R); !bad.empty()) {
    return fallback("spliced labeling failed verification (" + to_string(bad.front()) + ")");
  }
  return R;
}

namespace {

class Delta3 {
 public:
  Delta3(LabelReport* report, Orientation o) : report_(report), o_(o) {}

  TotalLabeling run(const Graph& g, int depth);

 private:
  void step(int depth, const std::string& s) {
    if (report_) report_->trace.push_back(std::string(static_cast<size_t>(2 * depth), ' ') + s);
  }
  std::vector<std::string>* trace() { return report_ ? &report_->trace : nullptr; }

  TotalLabeling pendant(const Graph& g, int depth);
  TotalLabeling leaf_block(const Graph& g, int depth);
  bool cycle_leaf(TotalLabeling& R, const Graph& g1, Vertex vc, Vertex w, int L);
  bool two_vertex_leaf(TotalLabeling& R, const OuterplanarEmbedding& emb1, const Graph& g, Vertex vc, Vertex w,
                       Vertex x1, int L, int depth);
  bool q1_leaf(TotalLabeling& R, const OuterplanarEmbedding& emb1, const Graph& g, Vertex vc, Vertex w, int L,
               int depth);

  TotalLabeling fallback(const Graph& g, const TotalLabeling& host_part, const std::vector<Element>& free,
                         const std::string& why);

  LabelReport* report_;
  Orientation o_;
};

TotalLabeling Delta3::fallback(const Graph& g, const TotalLabeling& host_part, const std::vector<Element>& free,
                               const std::string& why) {
  if (report_) {
    report_->discrepancies.push_back(why);
    ++report_->fallbacks;
  }
  TotalLabeling base(g, 5);
  base.merge_from(host_part);
  if (auto r = complete_over(base, free, 5)) return *r;
  base = complement(base, 5);
  if (auto r = complete_over(base, free, 5)) return *r;
  SearchOptions so = fallback_search();
  auto full = find_labeling_bounded(g, 2, 5, so);
  if (full.labeling) return *full.labeling;
  throw InfeasibleTrace("no completion found after: " + why);
}

TotalLabeling Delta3::run(const Graph& g, int depth) {
  if (g.empty()) return TotalLabeling(g, 5);
  auto comps = connected_components(g);
  if (comps.size() > 1) {
    step(depth, "disconnected: " + std::to_string(comps.size()) + " components");
    TotalLabeling f(g, 5);
    for (const Graph& c : comps) f.merge_from(run(c, depth + 1));
    return f;
  }
  if (g.num_elements() <= 7) {
    step(depth, "base: oracle on " + std::to_string(g.num_elements()) + " elements");
    auto r = find_labeling_bounded(g, 2, 5);
    if (!r.labeling) throw InfeasibleTrace("oracle found no base labeling");
    return *r.labeling;
  }
  if (g.max_degree() <= 2) {
    step(depth, "max degree <= 2: incidence path/cycle pattern");
    TotalLabeling f = label_cycle_or_path(g);
    f.set_k(5);
    return f;
  }
  if (g.min_degree() == 1) return pendant(g, depth);
  OuterplanarEmbedding emb = recognize_embed(g, o_);
  if (emb.biconnected()) {
    step(depth, "2-connected: LABEL-K2");
    try {
      TotalLabeling f = label_k2(emb, {}, trace());
      if (is_valid(f)) return f;
    } catch (const InfeasibleTrace&) {
    }
    return fallback(g, TotalLabeling(g, 5), elements_of(g), "label_k2 output failed verification");
  }
  return leaf_block(g, depth);
}

TotalLabeling Delta3::pendant(const Graph& g, int depth) {
  Vertex u1 = -1;
  for (Vertex v : g.vertices()) {
    if (g.degree(v) == 1) {
      u1 = v;
      break;
    }
  }
  const Vertex u2 = g.neighbors(u1)[0];
  step(depth, "pendant vertex " + std::to_string(u1));
  Vertex rm[] = {u1};
  const Graph h = remove_vertices(g, rm);
  TotalLabeling f(g, 5);
  f.merge_from(run(h, depth + 1));
  const int fu2 = f.at(u2);
  std::set<int> bad = {fu2 - 1, fu2, fu2 + 1};
  for (Vertex z : h.neighbors(u2)) bad.insert(f.at(Edge(u2, z)));
  int a = -1;
  for (int l = 0; l <= 5 && a < 0; ++l) {
    if (!bad.contains(l)) a = l;
  }
  int b = -1;
  for (int l = 0; l <= 5 && a >= 0 && b < 0; ++l) {
    if (l != fu2 && std::abs(l - a) > 1) b = l;
  }
  if (a >= 0 && b >= 0) {
    f.set(Edge(u1, u2), a);
    f.set(u1, b);
    if (is_valid(f)) return f;
  }
  return fallback(g, f, {Element::of(u1), Element::of(Edge(u1, u2))}, "pendant extension failed");
}

TotalLabeling Delta3::leaf_block(const Graph& g, int depth) {
  auto cuts = cut_vertices(g);
  Graph g1;
  Vertex vc = -1;
  for (const Graph& b : biconnected_components(g)) {
    if (b.num_vertices() < 3) continue;
    int k = 0;
    Vertex c = -1;
    for (Vertex v : b.vertices()) {
      if (contains(cuts, v)) {
        ++k;
        c = v;
      }
    }
    if (k == 1) {
      g1 = b;
      vc = c;
      break;
    }
  }
  if (vc < 0) throw InfeasibleTrace("no leaf block with a single cut vertex");
  Vertex w = -1;
  for (Vertex z : g.neighbors(vc)) {
    if (!g1.has_vertex(z)) w = z;
  }
  std::vector<Vertex> drop;
  for (Vertex v : g1.vertices()) {
    if (v != vc) drop.push_back(v);
  }
  const Graph h = remove_vertices(g, drop);
  step(depth, "leaf block at cut vertex " + std::to_string(vc) + " (" + std::to_string(g1.num_vertices()) +
                  " vertices), bridge to " + std::to_string(w));
  TotalLabeling fh = run(h, depth + 1);
  if (fh.at(Edge(vc, w)) <= 2) {
    fh = complement(fh, 5);
    step(depth, "complemented H so that f(vc w) >= 3");
  }
  const int L = fh.at(Edge(vc, w));
  TotalLabeling R(g, 5);
  R.merge_from(fh);
  const OuterplanarEmbedding emb1 = recognize_embed(g1, o_);
  bool ok = false;
  std::string branch;
  try {
    if (emb1.inner_edges().empty()) {
      branch = "leaf cycle, f(vc w)=" + std::to_string(L);
      step(depth, branch);
      ok = cycle_leaf(R, g1, vc, w, L);
    } else {
      // x1 is the 3-vertex preceding vc on the boundary of G1.
      std::vector<Vertex> cyc = emb1.boundary();
      auto it = std::find(cyc.begin(), cyc.end(), vc);
      size_t k = static_cast<size_t>(it - cyc.begin());
      Vertex x1 = -1;
      for (size_t s = 1; s < cyc.size() && x1 < 0; ++s) {
        Vertex c = cyc[(k + cyc.size() - s) % cyc.size()];
        if (g1.degree(c) == 3) x1 = c;
      }
      auto d = boundary_decompose(emb1, x1);
      if (d.q[0] > 1) {
        branch = "leaf block, vc next to a 2-vertex (q1=" + std::to_string(d.q[0]) + "), f(vc w)=" + std::to_string(L);
        step(depth, branch);
        ok = two_vertex_leaf(R, emb1, g, vc, w, x1, L, depth);
      } else {
        branch = "leaf block, q1=1, f(vc w)=" + std::to_string(L);
        step(depth, branch);
        ok = q1_leaf(R, emb1, g, vc, w, L, depth);
      }
    }
  } catch (const InfeasibleTrace& e) {
    branch += std::string(" [") + e.what() + "]";
    ok = false;
  } catch (const PreconditionError& e) {
    branch += std::string(" [") + e.what() + "]";
    ok = false;
  }
  if (ok && is_valid(R)) return R;
  return fallback(g, fh, elements_of(g1), branch + ": literal assignment failed verification");
}

bool Delta3::cycle_leaf(TotalLabeling& R, const Graph& g1, Vertex vc, Vertex w, int L) {
  const OuterplanarEmbedding emb1 = recognize_embed(g1, o_);
  std::vector<Vertex> u = emb1.boundary();
  std::rotate(u.begin(), std::find(u.begin(), u.end(), vc), u.end());
  const size_t r = u.size();
  auto U = [&](size_t i) { return u[i - 1]; };  // 1-based, U(1) = vc
  const int fw = R.at(w);
  if (L == 3 && r == 3) {
    if (fw != 0) {
      R.set(vc, 0), R.set(U(2), 1), R.set(U(3), 5);
      R.set(Edge(vc, U(2)), 5), R.set(Edge(U(2), U(3)), 3), R.set(Edge(U(3), vc), 2);
    } else {
      R.set(vc, 5), R.set(U(2), 2), R.set(U(3), 0);
      R.set(Edge(vc, U(2)), 0), R.set(Edge(U(2), U(3)), 5), R.set(Edge(U(3), vc), 2);
    }
    return true;
  }
  const int a = fw != 0 ? 0 : 1;
  const int b = 1 - a;
  R.set(vc, a);
  for (size_t i = 2; i <= r; ++i) R.set(U(i), i % 2 == 0 ? b : a);
  if (r % 2 == 1) R.set(U(r), 2);
  const int first = L == 5 ? 4 : 5;
  R.set(Edge(U(r), vc), first);
  int cur = 9 - first;
  for (size_t i = r; i >= 2; --i) {
    Vertex next = i == 2 ? vc : U(i - 1);
    R.set(Edge(U(i), next), cur);
    cur = 9 - cur;
  }
  if (L == 4 || L == 5) R.set(Edge(U(2), vc), 3);
  if (L == 3 && r % 2 == 1) {
    R.set(Edge(U(3), U(2)), 3);
    R.set(Edge(U(2), vc), 4);
  }
  return true;
}

bool Delta3::two_vertex_leaf(TotalLabeling& R, const OuterplanarEmbedding& emb1, const Graph& g, Vertex vc, Vertex w,
                             Vertex x1, int L, int depth) {
  const Graph& g1 = emb1.host();
  auto d = boundary_decompose(emb1, x1);
  const auto& gap = d.y[0];
  const size_t q1 = gap.size();
  const size_t ell = static_cast<size_t>(std::find(gap.begin(), gap.end(), vc) - gap.begin());
  LabelK2Options opt;
  opt.start_vertex = x1;
  opt.endface_avoid = {vc};
  if (q1 >= 3) opt.avoid_special.push_back(vc);
  if (q1 >= 5 || (q1 == 3 && ell != 1)) {
    for (Vertex z : g.neighbors(vc)) opt.avoid_special.push_back(z);
  }
  TotalLabeling f1 = label_k2(emb1, opt, trace());
  if (f1.at(vc) == R.at(w) || f1.at(vc) == 2) {
    opt.start_parity = 1;
    f1 = label_k2(emb1, opt, trace());
    step(depth, "flipped start parity so that f(vc) != f(w)");
  }
  if (L == 4 || L == 5) {
    // A 2-vertex neighbor of vc inside G1 whose label is not 2, predecessor first.
    Vertex pick = -1;
    std::vector<Vertex> cand;
    if (ell > 0) cand.push_back(gap[ell - 1]);
    if (ell + 1 < q1) cand.push_back(gap[ell + 1]);
    for (Vertex z : cand) {
      if (pick < 0 && g1.degree(z) == 2 && f1.at(z) != 2) pick = z;
    }
    if (pick < 0) throw InfeasibleTrace("no 2-vertex neighbor of vc without label 2");
    opt.outer_edge_seed = std::make_pair(Edge(pick, vc), L);
    f1 = label_k2(emb1, opt, trace());
    f1.set(Edge(pick, vc), 3);
    step(depth, "seeded (" + std::to_string(pick) + "," + std::to_string(vc) + ") then relabeled it 3");
  }
  R.merge_from(f1);
  return true;
}

bool Delta3::q1_leaf(TotalLabeling& R, const OuterplanarEmbedding& emb1, const Graph& g, Vertex vc, Vertex w, int L,
                     int depth) {
  const Graph& g1 = emb1.host();
  std::vector<Vertex> cyc = emb1.boundary();
  auto d0 = boundary_decompose(emb1);
  // Rotate so that x1 (the 3-vertex before vc) sits at position 0.
  {
    auto it = std::find(cyc.begin(), cyc.end(), vc);
    std::rotate(cyc.begin(), it, cyc.end());
    std::rotate(cyc.begin(), cyc.end() - 1, cyc.end());
  }
  const Vertex x1v = cyc[0];
  auto d = boundary_decompose(emb1, x1v);
  const size_t n1 = cyc.size();
  auto X = [&](size_t i) { return d.x[i - 1]; };
  auto Y = [&](size_t i) -> const std::vector<Vertex>& { return d.y[i - 1]; };
  auto pos = [&](Vertex v) { return static_cast<size_t>(std::find(cyc.begin(), cyc.end(), v) - cyc.begin()); };

  Vertex partner = -1;
  for (Vertex z : g1.neighbors(x1v)) {
    if (emb1.is_inner(Edge(x1v, z))) partner = z;
  }
  const size_t pp = static_cast<size_t>(std::find(d.x.begin(), d.x.end(), partner) - d.x.begin()) + 1;  // p'
  const size_t P = pos(partner);
  const Vertex up = cyc[n1 - 1];
  const Vertex vp = cyc[P + 1];
  const bool same = up == vp;
  const int fw = R.at(w);
  const Vertex xp = X(pp);
  step(depth, "p'=" + std::to_string(pp) + (same ? ", u'=v'" : ", u'!=v'") + ", f(w)=" + std::to_string(fw));

  auto V = [&](Vertex v, int l) { R.set(v, l); };
  auto E = [&](Vertex a, Vertex b, int l) { R.set(Edge(a, b), l); };
  bool need_lemma = false;

  // Shared pieces of the p' != 2 procedures.
  auto g2_chords = [&](int l) {
    for (const Edge& e : emb1.inner_edges()) {
      if (pos(e.u) <= P && pos(e.v) <= P) E(e.u, e.v, l);
    }
  };
  LabelK2Options dflt;
  auto inner_x = [&](int first, const std::function<int(int)>& tr) {
    for (size_t i = 2; i + 1 <= pp; ++i) V(X(i), tr((i % 2 == 0) ? first : 1 - first));
    for (size_t i = 2; i + 2 <= pp; ++i) {
      int a = tr(R.at(X(i))), b = tr(R.at(X(i + 1)));
      label_gap(R, Y(i), a, b, dflt, tr);
    }
  };
  auto last_gap = [&](int first, int second) {
    const auto& gy = Y(pp - 1);
    for (size_t j = 0; j < gy.size(); ++j) V(gy[j], j % 2 == 0 ? first : second);
  };
  // Outer edges from (vc, x2) clockwise up to the vertex at position `end`.
  auto trace_edges = [&](size_t end, int first) {
    int l = first;
    int last = first;
    for (size_t k = 1; k < end; ++k) {
      E(cyc[k], cyc[k + 1], l);
      last = l;
      l = 9 - l;
    }
    return last;
  };
  auto trace_edges_low = [&](size_t end, int first) {
    int l = first;
    int last = first;
    for (size_t k = 1; k < end; ++k) {
      E(cyc[k], cyc[k + 1], l);
      last = l;
      l = 1 - l;
    }
    return last;
  };
  auto id = [](int l) { return l; };

  // Case-1.2 procedure; Case-2.1 reuses it with the alternation starting at 5.
  auto proc12 = [&](int first) {
    g2_chords(3);
    V(vc, 0);
    inner_x(1, id);
    const int last = trace_edges(pos(X(pp - 1)), first);
    const auto& gy = Y(pp - 1);
    if (!gy.empty()) {
      step(depth, "step 3.1");
      V(X(1), 5), V(xp, 4);
      E(X(1), vc, 3), E(X(1), xp, 2), E(X(pp - 1), gy[0], 2);
      int l = 0;
      for (size_t j = 0; j + 1 < gy.size(); ++j, l = 1 - l) E(gy[j], gy[j + 1], l);
      E(gy.back(), xp, l);
      l = 1 - l;
      E(xp, vp, l);
      for (size_t j = 0; j < gy.size(); ++j) {
        bool even = gy.size() % 2 == 0;
        V(gy[j], (j % 2 == 0) == even ? 4 : 5);
      }
      if (same) {
        V(up, 3);
        E(up, X(1), R.at(Edge(xp, up)) == 0 ? 1 : 0);
      } else {
        V(up, 4), V(vp, 5), E(up, X(1), 1);
        need_lemma = true;
      }
    } else if (!same) {
      step(depth, "step 3.2");
      V(X(1), 4), V(vp, 4), V(xp, 5), V(up, 5);
      E(X(1), xp, 0), E(X(pp - 1), xp, 2), E(X(1), vc, 2), E(X(1), up, 1), E(xp, vp, 1);
      need_lemma = true;
    } else if (last == 4) {
      step(depth, "step 3.3");
      V(X(1), 5), V(xp, 3), V(up, 4);
      E(X(1), xp, 1), E(X(pp - 1), xp, 5), E(X(1), vc, 3), E(X(1), up, 2), E(xp, up, 0);
    } else {
      step(depth, "step 3.4");
      V(X(1), 5), V(xp, 2), V(up, 0);
      E(X(1), xp, 0), E(X(pp - 1), xp, 4), E(X(1), vc, 3), E(X(1), up, 2), E(xp, up, 5);
    }
  };

  if (L == 5 && fw != 3) {
    step(depth, "case 1.1: complement of LABEL-K2");
    LabelK2Options opt;
    opt.start_vertex = x1v;
    opt.endface_avoid = {vc};
    R.merge_from(complement(label_k2(emb1, opt, trace()), 5));
    return true;
  }
  if (pp == 2) {
    const Vertex x2 = X(2);
    if (L == 5) {
      step(depth, "case 1.2, p'=2");
      if (same) {
        V(x1v, 5), V(vc, 0), V(x2, 2), V(up, 0);
        E(x1v, vc, 3), E(vc, x2, 4), E(x1v, x2, 0), E(x2, up, 5), E(up, x1v, 2);
      } else {
        V(x1v, 5), V(vc, 0), V(x2, 4), V(up, 4), V(vp, 5);
        E(x1v, vc, 3), E(vc, x2, 2), E(x1v, x2, 0), E(x2, vp, 1), E(up, x1v, 1);
      }
    } else if (L == 4 && fw != 0) {
      step(depth, "case 2.1, p'=2");
      if (same) {
        V(x1v, 5), V(vc, 0), V(x2, 2), V(up, 0);
        E(x1v, vc, 3), E(vc, x2, 5), E(x1v, x2, 0), E(x2, up, 4), E(up, x1v, 2);
      } else {
        V(x1v, 5), V(vp, 5), V(vc, 0), V(x2, 4), V(up, 4);
        E(x1v, vc, 3), E(vc, x2, 2), E(x1v, x2, 0), E(x2, vp, 1), E(up, x1v, 1);
      }
    } else if (L == 4) {
      step(depth, "case 2.2, p'=2");
      V(vc, 1), V(x1v, 5), V(x2, 3), V(up, 4);
      E(x1v, vc, 3), E(vc, x2, 5), E(x1v, x2, 0);
      if (same) {
        E(x1v, up, 2), E(x2, up, 1);
      } else {
        V(vp, 5);
        E(x1v, up, 1), E(x2, vp, 1);
      }
    } else if (fw != 5) {
      step(depth, "case 3, p'=2, f(w)!=5");
      V(x1v, 0), V(vc, 5), V(x2, 2), V(up, 1);
      E(x1v, vc, 2), E(vc, x2, 0), E(x1v, x2, 5);
      if (same) {
        E(x2, up, 4), E(up, x1v, 3);
      } else {
        V(vp, 0);
        E(x2, vp, 4), E(up, x1v, 4);
      }
    } else {
      step(depth, "case 3, p'=2, f(w)=5");
      if (same) {
        V(x1v, 4), V(vc, 0), V(x2, 2), V(up, 3);
        E(x1v, vc, 2), E(vc, x2, 4), E(x1v, x2, 0), E(x2, up, 5), E(up, x1v, 1);
      } else {
        V(x1v, 3), V(vc, 0), V(x2, 5), V(up, 5), V(vp, 4);
        E(x1v, vc, 5), E(vc, x2, 2), E(x1v, x2, 0), E(x2, vp, 1), E(up, x1v, 1);
      }
    }
    need_lemma = !same;
  } else if (L == 5) {
    step(depth, "case 1.2, p'!=2");
    proc12(4);
  } else if (L == 4 && fw != 0) {
    step(depth, "case 2.1, p'!=2 (case 1.2 procedure starting at 5)");
    proc12(5);
  } else if (L == 4) {
    step(depth, "case 2.2, p'!=2");
    g2_chords(3);
    const int last = trace_edges(P, 5);
    if (last == 4) {
      V(vc, 2);
      inner_x(1, id);
      V(X(1), 3), V(xp, 2);
      E(X(1), vc, 0), E(X(1), xp, 5);
      last_gap(1, 0);
      if (!same) {
        step(depth, "step 2.1");
        V(up, 4), V(vp, 5), E(X(1), up, 1), E(xp, vp, 0);
        need_lemma = true;
      } else {
        step(depth, "step 2.3");
        V(up, 5), E(X(1), up, 1), E(xp, up, 0);
      }
    } else {
      V(vc, 1);
      inner_x(0, id);
      V(X(1), 5), V(xp, 3);
      E(X(1), vc, 3), E(X(1), xp, 0);
      last_gap(0, 1);
      if (!same) {
        step(depth, "step 2.2");
        V(up, 4), V(vp, 5), E(X(1), up, 1), E(xp, vp, 1);
        need_lemma = true;
      } else {
        step(depth, "step 2.4");
        V(up, 4), E(X(1), up, 2), E(xp, up, 1);
      }
    }
  } else if (fw != 0) {
    step(depth, "case 3.1, p'!=2");
    g2_chords(3);
    V(vc, 0);
    inner_x(1, id);
    last_gap(1, 0);
    // The traced run ends on label 5.
    const size_t count = P - 1;
    trace_edges(P, count % 2 == 1 ? 5 : 4);
    V(X(1), 5);
    E(X(1), vc, 2), E(X(1), xp, 0);
    if (!same) {
      V(xp, 3), V(up, 4), V(vp, 5), E(X(1), up, 1), E(xp, vp, 1);
      need_lemma = true;
    } else {
      V(xp, 2), V(up, 0), E(X(1), up, 3), E(xp, up, 4);
    }
  } else {
    step(depth, "case 3.2, p'!=2 (labels mirrored)");
    auto mirror = [](int l) { return 5 - l; };
    g2_chords(2);
    V(vc, 5);
    inner_x(1, mirror);
    last_gap(4, 5);
    const size_t count = P - 1;
    trace_edges_low(P, count % 2 == 1 ? 0 : 1);
    V(X(1), 0), V(xp, 2), V(up, 1);
    E(X(1), vc, 2), E(X(1), xp, 4);
    if (!same) {
      V(vp, 0), E(X(1), up, 5), E(xp, vp, 5);
      need_lemma = true;
    } else {
      E(X(1), up, 3), E(xp, up, 5);
    }
  }
  (void)d0;

  if (need_lemma) {
    if (!is_consistent(R)) throw InfeasibleTrace("labeling handed to the lemma is infeasible");
    R = extend_lemma1(g, R, {x1v, xp, up, vp}, report_, o_);
  }
  return true;
}

}  // namespace

TotalLabeling label_upto_delta3(const Graph& g, LabelReport* report, Orientation o) {
  if (!g.empty() && g.max_degree() > 3) throw NotDelta3("maximum degree exceeds 3");
  recognize_embed(g, o);
  Delta3 d(report, o);
  TotalLabeling f = d.run(g, 0);
  f.set_k(5);
  return f;
}

TotalLabeling label_delta3(const Graph& g, LabelReport* report, Orientation o) {
  if (g.empty() || g.max_degree() != 3) throw NotDelta3("label_delta3 needs maximum degree 3");
  return label_upto_delta3(g, report, o);
}

}  // namespace outerlabel
