#include <gtest/gtest.h>

#include <algorithm>
#include <set>

#include "helpers.hpp"
#include "outerlabel/delta4.hpp"
#include "outerlabel/exact.hpp"
#include "outerlabel/generators.hpp"

using namespace outerlabel;
using namespace testing_util;

namespace {

bool trace_has(const std::vector<std::string>& trace, const std::string& needle) {
  return std::any_of(trace.begin(), trace.end(), [&](const std::string& s) { return s.find(needle) != std::string::npos; });
}

// The end-label list, copied independently of the library table.
const std::vector<LabelPair> kList = {{0, 6}, {0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 5}, {5, 6},
                                      {6, 0}, {6, 5}, {5, 4}, {4, 3}, {3, 2}, {2, 1}, {1, 0}};

std::set<Label> set_of(const std::vector<Label>& v) { return {v.begin(), v.end()}; }

// Reverses the chain (spine j -> 2t - j, stubs swapped) and/or complements at 6.
TotalLabeling transform_stub(const TotalLabeling& f, int t, bool reverse, bool comp) {
  const int last = 2 * t;
  auto map = [&](Vertex v) -> Vertex {
    if (!reverse) return v;
    if (v <= last) return last - v;
    return v == last + 1 ? last + 2 : last + 1;
  };
  TotalLabeling out(f.host(), 6);
  for (const auto& [x, l] : f.assignments()) {
    const Label m = comp ? 6 - l : l;
    if (x.is_vertex())
      out.set(map(x.vertex()), m);
    else
      out.set(map(x.a), map(x.b), m);
  }
  return out;
}

}  // namespace

TEST(Availability, Examples) {
  EXPECT_EQ(availability_labels(0, 6), (std::vector<Label>{1, 2, 3, 4}));
  EXPECT_EQ(availability_labels(3, 0), (std::vector<Label>{2, 4, 5, 6}));
  for (Label w = 0; w <= 6; ++w) {
    for (Label e = 0; e <= 6; ++e) {
      auto s = availability_labels(w, e);
      EXPECT_GE(s.size(), 3u);
      for (Label l = 0; l <= 6; ++l) {
        const bool expected = l != w && std::abs(l - e) >= 2;
        EXPECT_EQ(set_of(s).count(l) == 1, expected);
      }
    }
  }
}

TEST(Availability, FromLabeling) {
  TotalLabeling f(gen_path(3), 6);
  f.set(1, 3);
  f.set(0, 1, 0);
  AvailabilitySet a = availability(f, 0, 1);
  EXPECT_EQ(a.vertex, 0);
  EXPECT_EQ(a.labels, (std::vector<Label>{2, 4, 5, 6}));
  EXPECT_TRUE(a.contains(5));
  EXPECT_FALSE(a.contains(3));
  EXPECT_THROW(availability(f, 2, 1), std::exception);
}

TEST(Claim, ListAndExamples) {
  ASSERT_EQ(claim_pairs().size(), kList.size());
  for (size_t i = 0; i < kList.size(); ++i) EXPECT_EQ(claim_pairs()[i], kList[i]);
  const std::vector<Label> all = {0, 1, 2, 3, 4, 5, 6};
  EXPECT_EQ(claim_pair(all, all), LabelPair(0, 6));
  EXPECT_EQ(claim_pair({0, 2, 3}, {3, 4, 5}), LabelPair(2, 3));
  EXPECT_THROW(claim_pair({3}, {3}), NoPair);
}

TEST(Claim, ExhaustiveOverAvailabilitySets) {
  long pairs = 0, failures = 0;
  for (Label w1 = 0; w1 <= 6; ++w1)
    for (Label e1 = 0; e1 <= 6; ++e1)
      for (Label w2 = 0; w2 <= 6; ++w2)
        for (Label e2 = 0; e2 <= 6; ++e2) {
          auto l1 = availability_labels(w1, e1), l2 = availability_labels(w2, e2);
          ++pairs;
          try {
            LabelPair p = claim_pair(l1, l2);
            EXPECT_TRUE(set_of(l1).count(p.first));
            EXPECT_TRUE(set_of(l2).count(p.second));
            // First list entry that fits.
            auto it = std::find_if(kList.begin(), kList.end(), [&](const LabelPair& q) {
              return set_of(l1).count(q.first) && set_of(l2).count(q.second);
            });
            ASSERT_NE(it, kList.end());
            EXPECT_EQ(p, *it);
          } catch (const NoPair&) {
            ++failures;
          }
        }
  EXPECT_EQ(pairs, 49 * 49);
  EXPECT_EQ(failures, 0);
}

TEST(Canonicalize, Examples) {
  ChainCase a = canonicalize({0, 6});
  EXPECT_EQ(a.case_id, 1);
  EXPECT_FALSE(a.reverse);
  EXPECT_FALSE(a.complement);
  ChainCase b = canonicalize({6, 0});
  EXPECT_EQ(b.case_id, 1);
  EXPECT_TRUE(b.reverse || b.complement);
  ChainCase c = canonicalize({4, 3});
  EXPECT_EQ(c.case_id, 4);
  EXPECT_TRUE(c.complement);
  EXPECT_FALSE(c.reverse);
  EXPECT_EQ(c.pair, LabelPair(2, 3));
  EXPECT_THROW(canonicalize({0, 3}), std::invalid_argument);
}

TEST(Canonicalize, EveryListedPair) {
  const std::vector<LabelPair> canon = {{0, 6}, {0, 1}, {1, 2}, {2, 3}};
  for (const LabelPair& p : kList) {
    ChainCase c = canonicalize(p);
    ASSERT_GE(c.case_id, 1);
    ASSERT_LE(c.case_id, 4);
    EXPECT_EQ(c.pair, canon[static_cast<size_t>(c.case_id - 1)]);
    EXPECT_EQ(apply_transform(c, p), c.pair);
    // Independent recomputation of the transform.
    LabelPair q = c.reverse ? LabelPair(p.second, p.first) : p;
    if (c.complement) q = {6 - q.first, 6 - q.second};
    EXPECT_EQ(q, c.pair);
  }
}

TEST(Canonicalize, TransformRoundTripOnLabelings) {
  for (int t = 2; t <= 5; ++t) {
    TotalLabeling f = chain_template(1, t, {3, 5, 2, 4});
    ASSERT_TRUE(is_valid(f));
    for (bool rev : {false, true}) {
      for (bool comp : {false, true}) {
        TotalLabeling g = transform_stub(f, t, rev, comp);
        EXPECT_TRUE(is_valid(g));
        EXPECT_EQ(transform_stub(g, t, rev, comp), f);
      }
    }
  }
}

TEST(ChainTemplate, StubGraph) {
  Graph g = chain_stub_graph(2);
  EXPECT_EQ(g.num_vertices(), 7);
  EXPECT_TRUE(g.has_edge(0, 4));
  EXPECT_TRUE(g.has_edge(0, 5));
  EXPECT_TRUE(g.has_edge(4, 6));
  EXPECT_EQ(g.degree(2), 4);
}

// Case (1.1.1), t = 2: base f1 with (u1,u5), (u1,u2), (u4,u5) from {2,3,4}.
TEST(ChainTemplate, F1BaseT2) {
  TemplateInfo info;
  TotalLabeling f = chain_template(1, 2, {4, 2, 2, 4}, &info);
  EXPECT_EQ(info.subcase, "1.1.1");
  const std::vector<Label> u = {0, 6, 3, 0, 6};
  for (int i = 0; i < 5; ++i) EXPECT_EQ(f.at(i), u[static_cast<size_t>(i)]) << "u" << i + 1;
  EXPECT_EQ(f.at(1, 2), 1);
  EXPECT_EQ(f.at(0, 2), 6);
  EXPECT_EQ(f.at(2, 3), 5);
  EXPECT_EQ(f.at(2, 4), 0);
  EXPECT_EQ(f.at(0, 4), 3);
  EXPECT_EQ(f.at(0, 1), 4);
  EXPECT_EQ(f.at(3, 4), 2);
  EXPECT_TRUE(is_valid(f));
  EXPECT_EQ(span(f), 6);
}

// f1 loop block for i = 2 at t = 4.
TEST(ChainTemplate, F1LoopBlock) {
  TotalLabeling f = chain_template(1, 4, {4, 2, 2, 4});
  // u_{4i-2}..u_{4i+1} = u6..u9 -> ids 5..8.
  EXPECT_EQ(f.at(5), 1);
  EXPECT_EQ(f.at(6), 3);
  EXPECT_EQ(f.at(7), 0);
  EXPECT_EQ(f.at(8), 6);
  EXPECT_EQ(f.at(4, 5), 3);
  EXPECT_EQ(f.at(5, 6), 6);
  EXPECT_EQ(f.at(4, 6), 1);
  EXPECT_EQ(f.at(6, 7), 5);
  EXPECT_EQ(f.at(6, 8), 0);
  EXPECT_TRUE(is_valid(f));
}

// Case (1.1.4), t = 2 has its own table.
TEST(ChainTemplate, Case114SmallTable) {
  TemplateInfo info;
  TotalLabeling f = chain_template(1, 2, {2, 6, 3, 0}, &info);
  EXPECT_EQ(info.subcase, "1.1.4");
  EXPECT_EQ(f.at(1), 3);
  EXPECT_EQ(f.at(2), 1);
  EXPECT_EQ(f.at(3), 3);
  EXPECT_EQ(f.at(0, 1), 5);
  EXPECT_EQ(f.at(1, 2), 6);
  EXPECT_EQ(f.at(0, 2), 4);
  EXPECT_EQ(f.at(2, 3), 5);
  EXPECT_EQ(f.at(3, 4), 1);
  EXPECT_EQ(f.at(2, 4), 3);
  EXPECT_EQ(f.at(0, 4), 2);
  EXPECT_TRUE(is_valid(f));
}

// Case (4.2.1), t = 3: base f8.
TEST(ChainTemplate, F8BaseT3) {
  TemplateInfo info;
  TotalLabeling f = chain_template(4, 3, {5, 0, 0, 6}, &info);
  EXPECT_EQ(info.subcase, "4.2.1");
  const std::vector<Label> u = {2, 1, 0, 1, 6, 2, 3};
  for (int i = 0; i < 7; ++i) EXPECT_EQ(f.at(i), u[static_cast<size_t>(i)]) << "u" << i + 1;
  EXPECT_EQ(f.at(1, 2), 3);
  EXPECT_EQ(f.at(0, 2), 4);
  EXPECT_EQ(f.at(2, 3), 5);
  EXPECT_EQ(f.at(3, 4), 3);
  EXPECT_EQ(f.at(2, 4), 2);
  EXPECT_EQ(f.at(4, 5), 4);
  EXPECT_EQ(f.at(4, 6), 1);
  EXPECT_EQ(f.at(0, 6), 5);
  EXPECT_EQ(f.at(0, 1), 6);
  EXPECT_EQ(f.at(5, 6), 0);
  EXPECT_TRUE(is_valid(f));
}

TEST(ChainTemplate, Preconditions) {
  EXPECT_THROW(chain_template(5, 2, {4, 2, 2, 4}), std::invalid_argument);
  EXPECT_THROW(chain_template(1, 2, {0, 3, 2, 4}), PreconditionError);  // f(w1) = f(u1)
  EXPECT_THROW(chain_template(1, 2, {4, 2, 2, 9}), PreconditionError);
}

TEST(ChainTemplate, SubcaseNames) {
  EXPECT_EQ(chain_subcase(1, 2, 2, 4), "1.1.1");
  EXPECT_EQ(chain_subcase(1, 2, 6, 4), "1.1.2");
  EXPECT_EQ(chain_subcase(1, 2, 2, 0), "1.1.3");
  EXPECT_EQ(chain_subcase(1, 3, 2, 4), "1.2.1");
  EXPECT_EQ(chain_subcase(4, 3, 4, 1), "4.2.4");
}

TEST(TemplateSweep, NoFaultsUpToNine) {
  TemplateSweepResult r = template_sweep(2, 9, true);
  EXPECT_GT(r.runs, 5000);
  EXPECT_EQ(r.faults, 0);
  for (const auto& s : r.fault_samples) ADD_FAILURE() << s;
  std::set<std::string> seen;
  for (const auto& [name, n] : r.per_subcase) {
    EXPECT_GT(n, 0);
    seen.insert(name.substr(0, name.find(' ')));
  }
  // Four host-edge conditions per case and parity, six for case 2 with even t.
  EXPECT_EQ(seen.size(), 34u);
}

TEST(TemplateSweep, SerialMatchesParallel) {
  TemplateSweepResult a = template_sweep(2, 4, false);
  TemplateSweepResult b = template_sweep(2, 4, true);
  EXPECT_EQ(a.runs, b.runs);
  EXPECT_EQ(a.faults, b.faults);
  EXPECT_EQ(a.backtracked, b.backtracked);
  EXPECT_EQ(a.per_subcase, b.per_subcase);
}

TEST(ReduceC1C2, Examples) {
  auto c5 = find_configuration(recognize_embed(gen_cycle(5)));
  ASSERT_TRUE(c5);
  auto [h, freed] = reduce_c1c2(gen_cycle(5), *c5);
  EXPECT_EQ(h.num_vertices(), 4);
  EXPECT_EQ(h.num_edges(), 3);
  EXPECT_EQ(h.max_degree(), 2);
  EXPECT_EQ(freed.size(), 3u);

  Graph c4 = cycle_with(4, {{0, 2}});
  auto c2 = find_configuration(recognize_embed(c4));
  ASSERT_TRUE(c2);
  auto [tri, freed2] = reduce_c1c2(c4, *c2);
  EXPECT_EQ(tri, remove_vertices(c4, std::vector<Vertex>{1}));
  EXPECT_EQ(tri.num_edges(), 3);
  EXPECT_EQ(freed2, (std::vector<Element>{Element::of(1), Element::of(Edge(0, 1)), Element::of(Edge(1, 2))}));

  EXPECT_THROW(reduce_c1c2(c4, Configuration{ConfigKind::kC3, {0, 1, 2, 3, 4}}), PreconditionError);
}

TEST(ReduceC1C2, ResultStaysInScope) {
  int reductions = 0;
  for (const CorpusEntry& e : delta4_corpus()) {
    if (e.graph.min_degree() != 2) continue;
    auto conf = find_configuration(recognize_embed(e.graph));
    ASSERT_TRUE(conf);
    if (conf->kind == ConfigKind::kC3) continue;
    auto [h, freed] = reduce_c1c2(e.graph, *conf);
    EXPECT_TRUE(is_outerplanar(h));
    EXPECT_LE(h.max_degree(), 4);
    EXPECT_EQ(h.num_elements() + static_cast<int>(freed.size()), e.graph.num_elements());
    TotalLabeling fh = label_upto_delta4(h);
    EXPECT_TRUE(is_valid(fh));
    ++reductions;
  }
  EXPECT_GT(reductions, 100);
}

TEST(LabelDelta4, Examples) {
  // Closed chain with a shared apex and a tail on the apex.
  Graph chain = gen_closed_chain(2);
  std::vector<Edge> es = chain.edges();
  es.emplace_back(5, 6);
  es.emplace_back(6, 7);
  Graph tailed(8, es);
  ASSERT_EQ(tailed.max_degree(), 4);
  LabelReport rep;
  TotalLabeling f = label_delta4(gen_closed_chain(3), &rep);
  EXPECT_TRUE(is_valid(f));
  EXPECT_LE(span(f), 6);
  EXPECT_TRUE(trace_has(rep.trace, "closed chain t=3"));
  EXPECT_TRUE(is_valid(label_delta4(tailed)));

  LabelReport rep2;
  Graph c1host = gen_closed_chain(2, ChainClosure::kPathClosed);
  TotalLabeling g = label_delta4(c1host, &rep2);
  EXPECT_TRUE(is_valid(g));
  EXPECT_LE(span(g), 6);
  EXPECT_TRUE(trace_has(rep2.trace, "C1 reduction"));

  EXPECT_THROW(label_delta4(gen_cycle(5)), NotDelta4);
  std::vector<Edge> star;
  for (int i = 1; i <= 5; ++i) star.emplace_back(0, i);
  EXPECT_THROW(label_delta4(Graph(6, star)), NotDelta4);
}

TEST(LabelDelta4Property, CorpusBothOrientations) {
  for (const auto* c : {&delta4_corpus(), &delta4_free_corpus()}) {
    for (const CorpusEntry& e : *c) {
      for (Orientation o : {Orientation::kForward, Orientation::kReversed}) {
        TotalLabeling f = label_delta4(e.graph, nullptr, o);
        EXPECT_TRUE(is_valid(f)) << e.name;
        EXPECT_LE(span(f), 6) << e.name;
      }
    }
  }
}

TEST(LabelDelta4Property, ChainBranchOnC1C2FreeCorpus) {
  std::set<std::string> subcases;
  for (const CorpusEntry& e : delta4_free_corpus()) {
    LabelReport rep;
    TotalLabeling f = label_delta4(e.graph, &rep);
    ASSERT_TRUE(is_valid(f)) << e.name;
    EXPECT_TRUE(trace_has(rep.trace, "closed chain")) << e.name;
    for (const auto& line : rep.trace) {
      auto at = line.find("subcase ");
      if (at != std::string::npos) subcases.insert(line.substr(at + 8, 5));
    }
  }
  EXPECT_GE(subcases.size(), 10u);
}

TEST(LabelDelta4Property, TriangulationsWithDeltaFour) {
  int runs = 0;
  for (int n = 5; n <= 10; ++n) {
    for (const Graph& g : enumerate_triangulations(n)) {
      if (g.max_degree() != 4) continue;
      TotalLabeling f = label_delta4(g);
      EXPECT_TRUE(is_valid(f));
      EXPECT_LE(span(f), 6);
      ++runs;
    }
  }
  EXPECT_GT(runs, 40);
}

TEST(LabelDelta4Property, OracleBelowSpan) {
  int checked = 0;
  for (const CorpusEntry& e : delta4_corpus()) {
    if (e.graph.num_elements() > 20) continue;
    TotalLabeling f = label_delta4(e.graph);
    auto lam = lambda_exact(e.graph, 2, span(f));
    ASSERT_TRUE(lam.lambda) << e.name;
    EXPECT_GE(*lam.lambda, 5);
    EXPECT_LE(*lam.lambda, span(f));
    ++checked;
  }
  EXPECT_GT(checked, 100);
}
