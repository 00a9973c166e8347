// Serial reference kernels against their OpenMP counterparts.
#include <benchmark/benchmark.h>

#include "outerlabel/corpus.hpp"
#include "outerlabel/delta3.hpp"
#include "outerlabel/delta4.hpp"
#include "outerlabel/exact.hpp"
#include "outerlabel/generators.hpp"

using namespace outerlabel;

namespace {

const std::vector<CorpusEntry>& corpus() {
  static const auto c = [] {
    auto a = load_manifest(std::string(OUTERLABEL_DATA_DIR) + "/corpus_delta3.json");
    auto b = load_manifest(std::string(OUTERLABEL_DATA_DIR) + "/corpus_delta4.json");
    a.insert(a.end(), b.begin(), b.end());
    return a;
  }();
  return c;
}

// Largest corpus instance whose optimum is Δ+2, so the search has to
// refute k = Δ+1 exhaustively.
const Graph& hard_instance() {
  static const Graph g = [] {
    Graph best;
    SearchOptions so;
    so.element_cap = 40;
    for (const CorpusEntry& e : corpus()) {
      if (e.graph.num_elements() <= best.num_elements() || e.graph.num_elements() > 32) continue;
      if (find_labeling_bounded(e.graph, 2, e.graph.max_degree() + 1, so).status == SearchStatus::kInfeasible)
        best = e.graph;
    }
    return best;
  }();
  return g;
}

void BM_ExactLambda(benchmark::State& st) {
  const Graph& g = hard_instance();
  SearchOptions so;
  so.element_cap = 40;
  so.parallel = st.range(0) != 0;
  for (auto _ : st) benchmark::DoNotOptimize(lambda_exact(g, 2, g.max_degree() + 2, so).lambda);
  st.SetLabel(std::string(so.parallel ? "parallel" : "serial") + ", |V|+|E|=" + std::to_string(g.num_elements()));
}
BENCHMARK(BM_ExactLambda)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

void BM_TemplateSweep(benchmark::State& st) {
  const bool par = st.range(0) != 0;
  for (auto _ : st) benchmark::DoNotOptimize(template_sweep(2, 9, par).faults);
  st.SetLabel(par ? "parallel" : "serial");
}
BENCHMARK(BM_TemplateSweep)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

void BM_CorpusSweep(benchmark::State& st) {
  const bool par = st.range(0) != 0;
  const auto& c = corpus();
  const long n = static_cast<long>(c.size());
  for (auto _ : st) {
    long ok = 0;
#pragma omp parallel for schedule(dynamic) reduction(+ : ok) if (par)
    for (long i = 0; i < n; ++i) {
      const Graph& g = c[static_cast<size_t>(i)].graph;
      TotalLabeling f = g.max_degree() == 3 ? label_delta3(g) : label_delta4(g);
      ok += is_valid(f);
    }
    benchmark::DoNotOptimize(ok);
  }
  st.SetItemsProcessed(st.iterations() * n);
  st.SetLabel(par ? "parallel" : "serial");
}
BENCHMARK(BM_CorpusSweep)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

void BM_CorpusGenerate(benchmark::State& st) {
  const bool par = st.range(0) != 0;
  CorpusSpec spec;
  spec.count = 200;
  spec.options.max_degree = 4;
  spec.n_min = 6;
  for (auto _ : st) benchmark::DoNotOptimize(generate_corpus(spec, par).size());
  st.SetLabel(par ? "parallel" : "serial");
}
BENCHMARK(BM_CorpusGenerate)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
