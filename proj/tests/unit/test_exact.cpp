#include <gtest/gtest.h>

#include <functional>
#include <random>

#include "helpers.hpp"
#include "outerlabel/exact.hpp"
#include "outerlabel/generators.hpp"

using namespace outerlabel;
using namespace testing_util;

namespace {

// Plain enumeration of all (k+1)^elements assignments; no pruning at all.
bool naive_feasible(const Graph& g, int p, int k) {
  const auto els = g.elements();
  TotalLabeling f(g, k);
  std::function<bool(size_t)> rec = [&](size_t i) -> bool {
    if (i == els.size()) return is_valid(f, p);
    for (int l = 0; l <= k; ++l) {
      f.set(els[i], l);
      if (rec(i + 1)) return true;
    }
    return false;
  };
  return rec(0);
}

int naive_lambda(const Graph& g, int p) {
  for (int k = 0;; ++k)
    if (naive_feasible(g, p, k)) return k;
}

}  // namespace

TEST(Exact, BoundedExamples) {
  EXPECT_EQ(find_labeling_bounded(gen_path(2), 2, 2).status, SearchStatus::kInfeasible);
  auto r = find_labeling_bounded(gen_path(2), 2, 3);
  ASSERT_EQ(r.status, SearchStatus::kFound);
  EXPECT_TRUE(is_valid(*r.labeling));
  auto one = find_labeling_bounded(Graph(1, std::span<const Edge>{}), 2, 0);
  ASSERT_EQ(one.status, SearchStatus::kFound);
  EXPECT_EQ(one.labeling->at(0), 0);
}

TEST(Exact, LambdaExamples) {
  EXPECT_EQ(lambda_exact(gen_path(2), 2, 10).lambda, 3);
  EXPECT_EQ(lambda_exact(gen_path(3), 2, 10).lambda, 4);
  EXPECT_EQ(lambda_exact(gen_cycle(3), 2, 10).lambda, 4);
  EXPECT_FALSE(lambda_exact(gen_cycle(3), 2, 3).lambda.has_value());
}

TEST(Exact, CapIsEnforced) {
  SearchOptions so;
  so.element_cap = 5;
  EXPECT_THROW(find_labeling_bounded(gen_cycle(3), 2, 4, so), ExactError);
}

TEST(Exact, TimeBudgetGivesUnknown) {
  SearchOptions so;
  so.element_cap = 200;
  so.time_budget_s = 1e-9;
  // K_{1,12}: proving k = 12 infeasible takes many nodes.
  std::vector<Edge> star;
  for (int i = 1; i <= 12; ++i) star.emplace_back(0, i);
  auto r = lambda_exact(Graph(13, star), 2, 14, so);
  EXPECT_TRUE(r.timed_out);
  EXPECT_FALSE(r.lambda.has_value());
}

TEST(ExactProperty, AgreesWithNaiveEnumeration) {
  std::mt19937_64 rng(31);
  int checked = 0;
  for (int trial = 0; trial < 400 && checked < 60; ++trial) {
    Graph g = random_graph(2 + static_cast<int>(rng() % 4), 0.5, rng);
    if (g.num_elements() > 8) continue;
    ++checked;
    EXPECT_EQ(lambda_exact(g, 2, 12).lambda, naive_lambda(g, 2));
    EXPECT_EQ(lambda_exact(g, 1, 12).lambda, naive_lambda(g, 1));
  }
  EXPECT_GE(checked, 40);
}

TEST(ExactProperty, SymmetryPruningIsSound) {
  std::mt19937_64 rng(37);
  SearchOptions on, off;
  off.symmetry_pruning = false;
  for (int trial = 0; trial < 80; ++trial) {
    Graph g = gen_random_outerplanar(3 + static_cast<int>(rng() % 5), rng(), {.edge_keep_prob = 0.6});
    EXPECT_EQ(lambda_exact(g, 2, 10, on).lambda, lambda_exact(g, 2, 10, off).lambda);
  }
}

TEST(ExactProperty, ParallelGivesSameValue) {
  std::mt19937_64 rng(41);
  SearchOptions par;
  par.parallel = true;
  for (int trial = 0; trial < 60; ++trial) {
    Graph g = gen_random_outerplanar(4 + static_cast<int>(rng() % 5), rng(), {.edge_keep_prob = 0.6});
    auto a = lambda_exact(g, 2, 10);
    auto b = lambda_exact(g, 2, 10, par);
    EXPECT_EQ(a.lambda, b.lambda);
    ASSERT_TRUE(b.witness);
    EXPECT_TRUE(is_valid(*b.witness));
  }
}

TEST(ExactProperty, SearchIsDeterministic) {
  Graph g = cycle_with(6, {{0, 3}});
  auto a = find_labeling_bounded(g, 2, 5);
  auto b = find_labeling_bounded(g, 2, 5);
  ASSERT_TRUE(a.labeling && b.labeling);
  EXPECT_EQ(*a.labeling, *b.labeling);
}

TEST(ExtendBounded, EmptyFreeSetReturnsInput) {
  auto r = find_labeling_bounded(gen_cycle(5), 2, 4);
  ASSERT_TRUE(r.labeling);
  auto e = extend_bounded(*r.labeling, {}, 4);
  ASSERT_TRUE(e);
  EXPECT_EQ(*e, *r.labeling);
}

// Pendant vertex of a Δ=3 graph: H = G - u1 labeled within 5, then u1 and
// (u1,u2) completed.
TEST(ExtendBounded, PendantCompletionAtFive) {
  int tried = 0;
  for (const CorpusEntry& e : delta3_corpus()) {
    const Graph& g = e.graph;
    if (g.min_degree() != 1 || g.num_elements() > 24) continue;
    Vertex u1 = -1;
    for (Vertex v : g.vertices())
      if (g.degree(v) == 1) u1 = v;
    const Vertex u2 = g.neighbors(u1)[0];
    Vertex drop[] = {u1};
    auto h = find_labeling_bounded(remove_vertices(g, drop), 2, 5, {.element_cap = 40});
    ASSERT_TRUE(h.labeling) << e.name;
    TotalLabeling partial(g, 5);
    partial.merge_from(*h.labeling);
    auto full = extend_bounded(partial, {Element::of(u1), Element::of(Edge(u1, u2))}, 5);
    ASSERT_TRUE(full) << e.name;
    EXPECT_TRUE(is_valid(*full));
    if (++tried == 40) break;
  }
  EXPECT_GT(tried, 10);
}

// Two adjacent 2-vertices freed from a Δ=4 host labeled within 6.
TEST(ExtendBounded, C1CompletionAtSix) {
  int tried = 0;
  for (const CorpusEntry& e : delta4_corpus()) {
    const Graph& g = e.graph;
    if (g.num_elements() > 24) continue;
    for (const Edge& uv : g.edges()) {
      if (g.degree(uv.u) != 2 || g.degree(uv.v) != 2) continue;
      Vertex drop[] = {uv.u, uv.v};
      auto h = find_labeling_bounded(remove_vertices(g, drop), 2, 6, {.element_cap = 40});
      ASSERT_TRUE(h.labeling) << e.name;
      TotalLabeling partial(g, 6);
      partial.merge_from(*h.labeling);
      std::vector<Element> free = {Element::of(uv.u), Element::of(uv.v)};
      for (Vertex x : {uv.u, uv.v})
        for (const Edge& f : g.incident_edges(x))
          if (std::find(free.begin(), free.end(), Element::of(f)) == free.end()) free.push_back(Element::of(f));
      auto full = extend_bounded(partial, free, 6);
      ASSERT_TRUE(full) << e.name;
      EXPECT_TRUE(is_valid(*full));
      ++tried;
      break;
    }
    if (tried == 30) break;
  }
  EXPECT_GT(tried, 5);
}

TEST(LP1, SmallPaths) {
  // λ_{2,1}(P_3) = 3, λ_{2,1}(C_n) = 4.
  EXPECT_FALSE(find_lp1_labeling(gen_path(3), 2, 2));
  EXPECT_TRUE(find_lp1_labeling(gen_path(3), 2, 3));
  EXPECT_FALSE(find_lp1_labeling(gen_cycle(5), 2, 3));
  EXPECT_TRUE(find_lp1_labeling(gen_cycle(5), 2, 4));
}
