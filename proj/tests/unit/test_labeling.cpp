#include <gtest/gtest.h>

#include <random>

#include "helpers.hpp"
#include "outerlabel/delta3.hpp"
#include "outerlabel/exact.hpp"
#include "outerlabel/generators.hpp"
#include "outerlabel/labeling.hpp"

using namespace outerlabel;
using namespace testing_util;

namespace {

TotalLabeling k2_labeling(Label fu, Label fv, Label fe, int k) {
  TotalLabeling f(gen_path(2), k);
  f.set(0, fu);
  f.set(1, fv);
  f.set(0, 1, fe);
  return f;
}

bool has_kind(const std::vector<Violation>& vs, Violation::Kind k) {
  for (const auto& v : vs)
    if (v.kind == k) return true;
  return false;
}

}  // namespace

TEST(Verify, K2Examples) {
  EXPECT_TRUE(is_valid(k2_labeling(0, 1, 3, 3)));
  auto vs = verify(k2_labeling(0, 1, 2, 3));
  ASSERT_EQ(vs.size(), 1u);
  EXPECT_EQ(vs[0].kind, Violation::Kind::kVertexEdgeTooClose);
  EXPECT_EQ(vs[0].witnesses, (std::vector<Element>{Element::of(1), Element::of(Edge(0, 1))}));
}

TEST(Verify, AdjacencyRules) {
  EXPECT_TRUE(has_kind(verify(k2_labeling(0, 0, 3, 3)), Violation::Kind::kAdjacentVerticesEqual));
  TotalLabeling f(gen_path(3), 6);
  f.set(0, 0);
  f.set(1, 6);
  f.set(2, 0);
  f.set(0, 1, 3);
  f.set(1, 2, 3);
  auto vs = verify(f);
  ASSERT_EQ(vs.size(), 1u);
  EXPECT_EQ(vs[0].kind, Violation::Kind::kAdjacentEdgesEqual);
  EXPECT_EQ(vs[0].witnesses.size(), 2u);
}

TEST(Verify, PartialAndOutOfRange) {
  TotalLabeling f(gen_path(2), 3);
  f.set(0, 0);
  auto vs = verify(f);
  EXPECT_EQ(vs.size(), 2u);
  for (const auto& v : vs) EXPECT_EQ(v.kind, Violation::Kind::kUnlabeledElement);
  EXPECT_TRUE(is_consistent(f));

  TotalLabeling g = k2_labeling(0, 1, 9, 3);
  EXPECT_TRUE(has_kind(verify(g), Violation::Kind::kLabelOutOfRange));
}

TEST(Verify, HigherSeparation) {
  EXPECT_TRUE(is_valid(k2_labeling(0, 1, 3, 3), 2));
  EXPECT_FALSE(is_valid(k2_labeling(0, 1, 3, 3), 3));
  EXPECT_TRUE(is_valid(k2_labeling(0, 1, 4, 4), 3));
}

TEST(Verify, C6ChordTraceIsValid) {
  Graph g = cycle_with(6, {{0, 3}});
  TotalLabeling f = label_k2(recognize_embed(g));
  EXPECT_TRUE(is_valid(f));
  EXPECT_EQ(f.k(), 5);
}

TEST(Span, Examples) {
  TotalLabeling f(Graph(1, std::span<const Edge>{}), 0);
  f.set(0, 0);
  EXPECT_EQ(span(f), 0);
  EXPECT_EQ(span(k2_labeling(0, 1, 3, 3)), 3);
  EXPECT_THROW(span(TotalLabeling(gen_path(2), 3)), LabelingError);
}

TEST(Complement, Examples) {
  TotalLabeling f = k2_labeling(0, 1, 3, 3);
  TotalLabeling c = complement(f, 3);
  EXPECT_EQ(c.at(0), 3);
  EXPECT_EQ(c.at(1), 2);
  EXPECT_EQ(c.at(0, 1), 0);
  EXPECT_TRUE(is_valid(c));
  EXPECT_EQ(complement(c, 3), f);
  EXPECT_THROW(complement(k2_labeling(0, 1, 5, 5), 3), LabelingError);
}

TEST(Complement, AtSixSwapsPairs) {
  TotalLabeling f(gen_cycle(7), 6);
  for (int i = 0; i < 7; ++i) f.set(i, i);
  TotalLabeling c = complement(f, 6);
  for (int i = 0; i < 7; ++i) EXPECT_EQ(c.at(i), 6 - i);
}

TEST(ComplementProperty, ValidityIsPreserved) {
  std::mt19937_64 rng(5);
  int valid = 0;
  for (int trial = 0; trial < 300; ++trial) {
    Graph g = gen_random_outerplanar(4 + static_cast<int>(rng() % 5), rng(), {.edge_keep_prob = 0.4});
    const int k = g.max_degree() + 2;
    auto r = find_labeling_bounded(g, 2, k);
    if (r.status != SearchStatus::kFound) continue;
    ++valid;
    EXPECT_TRUE(is_valid(complement(*r.labeling, k)));
    // Perturbing one label must be reported, and consistently after complementing.
    TotalLabeling bad = *r.labeling;
    bad.set(g.vertices().front(), (bad.at(g.vertices().front()) + 1) % (k + 1));
    EXPECT_EQ(is_valid(bad), is_valid(complement(bad, k)));
  }
  EXPECT_GT(valid, 250);
}

TEST(Incidence, PathAndCycle) {
  auto p = incidence_graph(gen_path(2));
  EXPECT_EQ(p.graph.num_vertices(), 3);
  EXPECT_EQ(p.graph.num_edges(), 2);
  EXPECT_EQ(p.graph.max_degree(), 2);
  EXPECT_TRUE(is_connected(p.graph));

  for (int n = 3; n <= 8; ++n) {
    auto c = incidence_graph(gen_cycle(n));
    EXPECT_EQ(c.graph.num_vertices(), 2 * n);
    EXPECT_EQ(c.graph.num_edges(), 2 * n);
    EXPECT_EQ(c.graph.max_degree(), 2);
    EXPECT_EQ(c.graph.min_degree(), 2);
    EXPECT_TRUE(is_connected(c.graph));
  }
}

TEST(Incidence, K3MatchesDefinition) {
  Graph k3 = gen_cycle(3);
  auto inc = incidence_graph(k3);
  ASSERT_EQ(inc.graph.num_vertices(), 6);
  // Expected edge set built straight from the definition: x ~ s(e) iff x ∈ e.
  std::vector<Edge> expected;
  for (Vertex s = 0; s < inc.graph.id_bound(); ++s) {
    const Element& src = inc.source[static_cast<size_t>(s)];
    if (!src.is_edge()) continue;
    expected.emplace_back(src.a, s);
    expected.emplace_back(src.b, s);
  }
  std::sort(expected.begin(), expected.end());
  EXPECT_EQ(inc.graph.edges(), expected);
  for (Vertex a = 0; a < 3; ++a)
    for (Vertex b = a + 1; b < 3; ++b) EXPECT_FALSE(inc.graph.has_edge(a, b));
}

TEST(IncidenceProperty, PullbackMatchesTotalSearch) {
  std::mt19937_64 rng(17);
  for (int trial = 0; trial < 60; ++trial) {
    Graph g = gen_random_outerplanar(3 + static_cast<int>(rng() % 4), rng(), {.edge_keep_prob = 0.5});
    auto inc = incidence_graph(g);
    int lp1_min = -1;
    for (int k = 0; k <= 8 && lp1_min < 0; ++k) {
      if (auto labels = find_lp1_labeling(inc.graph, 2, k)) {
        lp1_min = k;
        EXPECT_TRUE(is_lp1_labeling(inc.graph, *labels, 2));
        TotalLabeling f = pullback(inc, g, *labels, k);
        EXPECT_TRUE(is_valid(f));
        EXPECT_EQ(span(f), k);
      }
    }
    auto lam = lambda_exact(g, 2, 8);
    ASSERT_TRUE(lam.lambda);
    EXPECT_EQ(lp1_min, *lam.lambda);
  }
}

TEST(LabelingProperty, DegreeLowerBound) {
  std::mt19937_64 rng(23);
  for (int trial = 0; trial < 200; ++trial) {
    Graph g = gen_random_outerplanar(3 + static_cast<int>(rng() % 6), rng(), {.edge_keep_prob = 0.5});
    auto r = find_labeling_bounded(g, 2, g.max_degree());
    EXPECT_EQ(r.status, SearchStatus::kInfeasible);
  }
}

TEST(TotalLabeling, RehostAndMerge) {
  TotalLabeling f = k2_labeling(0, 1, 3, 3);
  Vertex drop[] = {1};
  Graph h = remove_vertices(gen_path(2), drop);
  TotalLabeling r = f.rehost(h);
  EXPECT_EQ(r.num_assigned(), 1);
  TotalLabeling back(gen_path(2), 3);
  back.merge_from(r);
  EXPECT_EQ(back.at(0), 0);
  EXPECT_FALSE(back.assigned(Element::of(1)));
}
