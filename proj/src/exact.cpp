#include "outerlabel/exact.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <climits>
#include <map>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace outerlabel {

namespace {

using Clock = std::chrono::steady_clock;

// Variables with pairwise minimum-separation constraints; the total labeling
// and the L(p,1) problems both reduce to this.
struct Csp {
  std::vector<std::vector<std::pair<int, int>>> adj;  // (other variable, separation)
  std::vector<int> fixed;                             // label, or -1 when free

  int size() const { return static_cast<int>(adj.size()); }
  void add(int a, int b, int sep) {
    adj[static_cast<size_t>(a)].emplace_back(b, sep);
    adj[static_cast<size_t>(b)].emplace_back(a, sep);
  }
};

struct TotalCsp {
  Csp csp;
  std::vector<Element> elements;
  std::map<Element, int> index;
};

TotalCsp build_total_csp(const Graph& g, int p) {
  TotalCsp t;
  t.elements = g.elements();
  for (size_t i = 0; i < t.elements.size(); ++i) t.index[t.elements[i]] = static_cast<int>(i);
  t.csp.adj.resize(t.elements.size());
  t.csp.fixed.assign(t.elements.size(), -1);
  auto id = [&](const Element& x) { return t.index.at(x); };
  for (const Edge& e : g.edges()) {
    t.csp.add(id(Element::of(e.u)), id(Element::of(e.v)), 1);
    t.csp.add(id(Element::of(e.u)), id(Element::of(e)), p);
    t.csp.add(id(Element::of(e.v)), id(Element::of(e)), p);
  }
  for (Vertex v : g.vertices()) {
    auto nb = g.neighbors(v);
    for (size_t i = 0; i < nb.size(); ++i) {
      for (size_t j = i + 1; j < nb.size(); ++j) {
        t.csp.add(id(Element::of(Edge(v, nb[i]))), id(Element::of(Edge(v, nb[j]))), 1);
      }
    }
  }
  return t;
}

struct Outcome {
  SearchStatus status = SearchStatus::kInfeasible;
  std::vector<int> labels;
  SearchStats stats;
};

class Solver {
 public:
  Solver(const Csp& csp, int k, const SearchOptions& opts)
      : csp_(csp), k_(k), opts_(opts), start_(Clock::now()) {
    full_ = (k == 63) ? ~std::uint64_t{0} : ((std::uint64_t{1} << (k + 1)) - 1);
    int max_sep = 1;
    for (const auto& row : csp.adj) {
      for (auto [o, s] : row) max_sep = std::max(max_sep, s);
    }
    forbid_.assign(static_cast<size_t>(max_sep + 1), std::vector<std::uint64_t>(static_cast<size_t>(k + 1), 0));
    for (int s = 1; s <= max_sep; ++s) {
      for (int l = 0; l <= k; ++l) {
        std::uint64_t m = 0;
        for (int x = std::max(0, l - s + 1); x <= std::min(k, l + s - 1); ++x) m |= std::uint64_t{1} << x;
        forbid_[static_cast<size_t>(s)][static_cast<size_t>(l)] = m;
      }
    }
    for (int i = 0; i < csp.size(); ++i) {
      if (csp.fixed[static_cast<size_t>(i)] < 0) order_.push_back(i);
    }
    std::stable_sort(order_.begin(), order_.end(), [&](int a, int b) {
      return csp.adj[static_cast<size_t>(a)].size() > csp.adj[static_cast<size_t>(b)].size();
    });
  }

  Outcome run() {
    Outcome out;
    std::vector<std::uint64_t> dom(static_cast<size_t>(csp_.size()), full_);
    std::vector<int> labels(csp_.fixed);
    // Fixed elements prune their free neighbors up front.
    for (int i = 0; i < csp_.size(); ++i) {
      int l = csp_.fixed[static_cast<size_t>(i)];
      if (l < 0) continue;
      if (l > k_) return finish(out, SearchStatus::kInfeasible);
      for (auto [o, s] : csp_.adj[static_cast<size_t>(i)]) {
        int lo = csp_.fixed[static_cast<size_t>(o)];
        if (lo >= 0) {
          if (std::abs(lo - l) < s) return finish(out, SearchStatus::kInfeasible);
        } else {
          dom[static_cast<size_t>(o)] &= ~forbid_[static_cast<size_t>(s)][static_cast<size_t>(l)];
        }
      }
    }
    for (int v : order_) {
      if (dom[static_cast<size_t>(v)] == 0) return finish(out, SearchStatus::kInfeasible);
    }
    if (order_.empty()) {
      out.labels = labels;
      return finish(out, SearchStatus::kFound);
    }

    const int first = order_.front();
    std::uint64_t first_dom = dom[static_cast<size_t>(first)];
    const bool all_free = std::all_of(csp_.fixed.begin(), csp_.fixed.end(), [](int l) { return l < 0; });
    if (opts_.symmetry_pruning && all_free) {
      int cap = (k_ + 1) / 2;
      first_dom &= (cap >= 63) ? ~std::uint64_t{0} : ((std::uint64_t{1} << (cap + 1)) - 1);
    }
    std::vector<int> firsts;
    for (int l = 0; l <= k_; ++l) {
      if (first_dom >> l & 1) firsts.push_back(l);
    }

    const int nf = static_cast<int>(firsts.size());
    std::vector<std::vector<int>> found(static_cast<size_t>(nf));
    std::vector<std::uint64_t> nodes(static_cast<size_t>(nf), 0);
    std::atomic<int> best{INT_MAX};

    auto branch = [&](int idx) {
      if (idx > best.load()) return;
      Worker w(*this, idx, best);
      std::vector<int> lab = labels;
      std::vector<std::uint64_t> d = dom;
      if (w.assign(first, firsts[static_cast<size_t>(idx)], d, lab) && w.dfs(1, d, lab)) {
        found[static_cast<size_t>(idx)] = lab;
        int cur = best.load();
        while (idx < cur && !best.compare_exchange_weak(cur, idx)) {
        }
      }
      nodes[static_cast<size_t>(idx)] = w.nodes;
    };

    if (opts_.parallel) {
#pragma omp parallel for schedule(dynamic, 1)
      for (int i = 0; i < nf; ++i) branch(i);
    } else {
      for (int i = 0; i < nf; ++i) {
        branch(i);
        if (best.load() != INT_MAX) break;
      }
    }

    for (auto n : nodes) out.stats.nodes += n;
    int b = best.load();
    if (b != INT_MAX) {
      out.labels = found[static_cast<size_t>(b)];
      return finish(out, SearchStatus::kFound);
    }
    return finish(out, timed_out_.load() ? SearchStatus::kUnknown : SearchStatus::kInfeasible);
  }

 private:
  struct Worker {
    Solver& s;
    int idx;
    std::atomic<int>& best;
    std::uint64_t nodes = 0;

    Worker(Solver& solver, int i, std::atomic<int>& b) : s(solver), idx(i), best(b) {}

    bool assign(int var, int l, std::vector<std::uint64_t>& dom, std::vector<int>& lab) {
      lab[static_cast<size_t>(var)] = l;
      for (auto [o, sep] : s.csp_.adj[static_cast<size_t>(var)]) {
        if (lab[static_cast<size_t>(o)] >= 0) continue;
        auto& d = dom[static_cast<size_t>(o)];
        d &= ~s.forbid_[static_cast<size_t>(sep)][static_cast<size_t>(l)];
        if (d == 0) return false;
      }
      return true;
    }

    bool stopped() {
      if ((++nodes & 1023) == 0 && s.opts_.time_budget_s > 0) {
        double el = std::chrono::duration<double>(Clock::now() - s.start_).count();
        if (el > s.opts_.time_budget_s) s.timed_out_.store(true);
      }
      return s.timed_out_.load(std::memory_order_relaxed) || best.load(std::memory_order_relaxed) < idx;
    }

    bool dfs(size_t depth, std::vector<std::uint64_t>& dom, std::vector<int>& lab) {
      if (depth == s.order_.size()) return true;
      if (stopped()) return false;
      const int var = s.order_[depth];
      std::uint64_t cand = dom[static_cast<size_t>(var)];
      while (cand) {
        int l = __builtin_ctzll(cand);
        cand &= cand - 1;
        std::vector<std::uint64_t> next = dom;
        if (assign(var, l, next, lab) && dfs(depth + 1, next, lab)) return true;
        lab[static_cast<size_t>(var)] = -1;
        if (stopped()) return false;
      }
      return false;
    }
  };

  Outcome& finish(Outcome& out, SearchStatus st) {
    out.status = st;
    out.stats.seconds = std::chrono::duration<double>(Clock::now() - start_).count();
    return out;
  }

  const Csp& csp_;
  int k_;
  SearchOptions opts_;
  Clock::time_point start_;
  std::uint64_t full_ = 0;
  std::vector<std::vector<std::uint64_t>> forbid_;
  std::vector<int> order_;
  std::atomic<bool> timed_out_{false};
};

void check_bounds(int k, int p) {
  if (k < 0 || k > kMaxSearchLabel) throw ExactError("span bound outside 0.." + std::to_string(kMaxSearchLabel));
  if (p < 1) throw ExactError("separation p must be at least 1");
}

}  // namespace

SearchResult find_labeling_bounded(const Graph& g, int p, int k, const SearchOptions& opts) {
  check_bounds(k, p);
  if (g.num_elements() > opts.element_cap) {
    throw ExactError("instance has " + std::to_string(g.num_elements()) + " elements, cap is " +
                     std::to_string(opts.element_cap));
  }
  TotalCsp t = build_total_csp(g, p);
  Solver solver(t.csp, k, opts);
  Outcome o = solver.run();
  SearchResult r;
  r.status = o.status;
  r.stats = o.stats;
  if (o.status == SearchStatus::kFound) {
    TotalLabeling f(g, k);
    for (size_t i = 0; i < t.elements.size(); ++i) f.set(t.elements[i], o.labels[i]);
    r.labeling = std::move(f);
  }
  return r;
}

LambdaResult lambda_exact(const Graph& g, int p, int kmax, const SearchOptions& opts) {
  LambdaResult res;
  auto start = Clock::now();
  for (int k = 0; k <= kmax; ++k) {
    SearchOptions o = opts;
    if (opts.time_budget_s > 0) {
      double left = opts.time_budget_s - std::chrono::duration<double>(Clock::now() - start).count();
      if (left <= 0) {
        res.timed_out = true;
        break;
      }
      o.time_budget_s = left;
    }
    SearchResult r = find_labeling_bounded(g, p, k, o);
    res.stats.nodes += r.stats.nodes;
    if (r.status == SearchStatus::kFound) {
      res.lambda = k;
      res.witness = std::move(r.labeling);
      break;
    }
    if (r.status == SearchStatus::kUnknown) {
      res.timed_out = true;
      break;
    }
  }
  res.stats.seconds = std::chrono::duration<double>(Clock::now() - start).count();
  return res;
}

std::optional<TotalLabeling> extend_bounded(const TotalLabeling& partial, const std::vector<Element>& free,
                                            int k, int p, const SearchOptions& opts) {
  check_bounds(k, p);
  if (static_cast<int>(free.size()) > opts.element_cap) {
    throw ExactError("extension over " + std::to_string(free.size()) + " elements exceeds cap " +
                     std::to_string(opts.element_cap));
  }
  const Graph& g = partial.host();
  TotalCsp t = build_total_csp(g, p);
  std::vector<bool> is_free(t.elements.size(), false);
  for (const Element& x : free) {
    auto it = t.index.find(x);
    if (it == t.index.end()) throw ExactError("free element " + to_string(x) + " is not in the host");
    is_free[static_cast<size_t>(it->second)] = true;
  }
  // Elements that are neither free nor labeled are dropped from the problem.
  std::vector<int> remap(t.elements.size(), -1);
  Csp csp;
  std::vector<size_t> back;
  for (size_t i = 0; i < t.elements.size(); ++i) {
    auto l = partial.get(t.elements[i]);
    if (is_free[i] || l) {
      remap[i] = static_cast<int>(back.size());
      back.push_back(i);
      csp.fixed.push_back(is_free[i] ? -1 : *l);
    }
  }
  csp.adj.resize(back.size());
  for (size_t i = 0; i < t.elements.size(); ++i) {
    if (remap[i] < 0) continue;
    for (auto [o, s] : t.csp.adj[i]) {
      if (remap[static_cast<size_t>(o)] >= 0 && static_cast<size_t>(o) > i) csp.add(remap[i], remap[static_cast<size_t>(o)], s);
    }
  }
  SearchOptions o = opts;
  o.symmetry_pruning = false;
  Solver solver(csp, std::max(k, 0), o);
  Outcome out = solver.run();
  if (out.status != SearchStatus::kFound) return std::nullopt;
  TotalLabeling f = partial;
  if (f.k() < k) f.set_k(k);
  for (size_t j = 0; j < back.size(); ++j) {
    if (is_free[back[j]]) f.set(t.elements[back[j]], out.labels[j]);
  }
  return f;
}

std::optional<std::vector<Label>> find_lp1_labeling(const Graph& g, int p, int k, const SearchOptions& opts) {
  check_bounds(k, p);
  if (g.num_vertices() > opts.element_cap) throw ExactError("instance exceeds element cap");
  std::vector<int> idx(static_cast<size_t>(g.id_bound()), -1);
  for (int i = 0; i < g.num_vertices(); ++i) idx[static_cast<size_t>(g.vertices()[static_cast<size_t>(i)])] = i;
  Csp csp;
  csp.adj.resize(static_cast<size_t>(g.num_vertices()));
  csp.fixed.assign(static_cast<size_t>(g.num_vertices()), -1);
  std::map<std::pair<int, int>, int> sep;
  auto need = [&](int a, int b, int s) {
    if (a > b) std::swap(a, b);
    auto& cur = sep[{a, b}];
    cur = std::max(cur, s);
  };
  for (const Edge& e : g.edges()) need(idx[static_cast<size_t>(e.u)], idx[static_cast<size_t>(e.v)], p);
  for (Vertex v : g.vertices()) {
    auto nb = g.neighbors(v);
    for (size_t i = 0; i < nb.size(); ++i) {
      for (size_t j = i + 1; j < nb.size(); ++j) need(idx[static_cast<size_t>(nb[i])], idx[static_cast<size_t>(nb[j])], 1);
    }
  }
  for (auto [ab, s] : sep) csp.add(ab.first, ab.second, s);
  Solver solver(csp, k, opts);
  Outcome out = solver.run();
  if (out.status != SearchStatus::kFound) return std::nullopt;
  std::vector<Label> labels(static_cast<size_t>(g.id_bound()), -1);
  for (Vertex v : g.vertices()) labels[static_cast<size_t>(v)] = out.labels[static_cast<size_t>(idx[static_cast<size_t>(v)])];
  return labels;
}

}  // namespace outerlabel
