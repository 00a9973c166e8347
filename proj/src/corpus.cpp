#include "outerlabel/corpus.hpp"

#include <fstream>
#include <optional>

#include "json.hpp"
#include "outerlabel/io.hpp"

namespace outerlabel {

using nlohmann::json;

namespace {

json entry_to_json(const CorpusEntry& e) {
  json j = {{"name", e.name},
            {"n", e.n},
            {"seed", e.seed},
            {"edge_keep_prob", e.options.edge_keep_prob},
            {"outer_keep_prob", e.options.outer_keep_prob},
            {"c1c2_free", e.options.c1c2_free},
            {"edges", graph_to_json(e.graph)["edges"]}};
  j["max_degree"] = e.options.max_degree ? json(*e.options.max_degree) : json(nullptr);
  j["min_degree"] = e.options.min_degree ? json(*e.options.min_degree) : json(nullptr);
  return j;
}

CorpusEntry entry_from_json(const json& j) {
  CorpusEntry e;
  e.name = j.at("name").get<std::string>();
  e.n = j.at("n").get<int>();
  e.seed = j.at("seed").get<std::uint64_t>();
  e.options.edge_keep_prob = j.value("edge_keep_prob", 0.5);
  e.options.outer_keep_prob = j.value("outer_keep_prob", 1.0);
  e.options.c1c2_free = j.value("c1c2_free", false);
  if (j.contains("max_degree") && !j["max_degree"].is_null()) e.options.max_degree = j["max_degree"].get<int>();
  if (j.contains("min_degree") && !j["min_degree"].is_null()) e.options.min_degree = j["min_degree"].get<int>();
  e.graph = graph_from_json({{"n", e.n}, {"edges", j.at("edges")}});
  return e;
}

}  // namespace

std::vector<CorpusEntry> load_manifest(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open " + path);
  json j;
  try {
    in >> j;
    std::vector<CorpusEntry> out;
    for (const auto& e : j.at("entries")) out.push_back(entry_from_json(e));
    return out;
  } catch (const json::exception& e) {
    throw ParseError(path + ": " + e.what());
  }
}

void save_manifest(const std::string& path, const std::vector<CorpusEntry>& entries) {
  json arr = json::array();
  for (const auto& e : entries) arr.push_back(entry_to_json(e));
  std::ofstream out(path);
  if (!out) throw ParseError("cannot write " + path);
  out << json{{"entries", arr}}.dump(1) << "\n";
}

Graph regenerate(const CorpusEntry& e) { return gen_random_outerplanar(e.n, e.seed, e.options); }

std::vector<CorpusEntry> generate_corpus(const CorpusSpec& spec, bool parallel) {
  std::vector<CorpusEntry> out;
  if (spec.count <= 0) return out;
  const int span = spec.n_max - spec.n_min + 1;
  if (span <= 0 || spec.n_min < 3) throw GeneratorError("bad n range");
  const int batch = 64;
  std::int64_t next = 0;
  int misses = 0;
  while (static_cast<int>(out.size()) < spec.count) {
    std::vector<std::optional<CorpusEntry>> slots(batch);
#pragma omp parallel for schedule(dynamic) if (parallel)
    for (int b = 0; b < batch; ++b) {
      const std::int64_t i = next + b;
      CorpusEntry e;
      e.n = spec.n_min + static_cast<int>(i % span);
      e.seed = spec.seed + static_cast<std::uint64_t>(i);
      e.options = spec.options;
      try {
        e.graph = gen_random_outerplanar(e.n, e.seed, e.options);
        slots[static_cast<size_t>(b)] = std::move(e);
      } catch (const GeneratorError&) {
      }
    }
    next += batch;
    bool any = false;
    for (auto& s : slots) {
      if (!s || static_cast<int>(out.size()) >= spec.count) continue;
      any = true;
      s->name = spec.prefix + "_" + std::to_string(out.size());
      out.push_back(std::move(*s));
    }
    misses = any ? 0 : misses + 1;
    if (misses >= 4) throw GeneratorError("corpus constraints are not satisfiable in the n range");
  }
  return out;
}

}  // namespace outerlabel
