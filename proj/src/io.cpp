#include "outerlabel/io.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

namespace outerlabel {

using nlohmann::json;

Graph read_edge_list(std::istream& in) {
  std::vector<Edge> edges;
  int max_id = -1;
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    std::istringstream ls(line);
    long long a = 0, b = 0;
    if (!(ls >> a)) {
      if (line.find_first_not_of(" \t\r") != std::string::npos)
        throw ParseError("line " + std::to_string(lineno) + ": expected \"u v\"");
      continue;
    }
    std::string rest;
    if (!(ls >> b) || (ls >> rest))
      throw ParseError("line " + std::to_string(lineno) + ": expected \"u v\"");
    if (a < 0 || b < 0 || a > 1'000'000 || b > 1'000'000)
      throw ParseError("line " + std::to_string(lineno) + ": vertex id out of range");
    if (a == b) throw ParseError("line " + std::to_string(lineno) + ": self-loop");
    edges.emplace_back(static_cast<Vertex>(a), static_cast<Vertex>(b));
    max_id = std::max<int>(max_id, static_cast<int>(std::max(a, b)));
  }
  std::sort(edges.begin(), edges.end());
  edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
  return Graph(max_id + 1, edges);
}

std::string write_edge_list(const Graph& g) {
  std::string out;
  for (const Edge& e : g.edges()) out += std::to_string(e.u) + " " + std::to_string(e.v) + "\n";
  return out;
}

Graph graph_from_json(const json& j) {
  try {
    const int n = j.at("n").get<int>();
    if (n < 0) throw ParseError("negative n");
    std::vector<Edge> edges;
    for (const auto& pair : j.at("edges")) {
      if (!pair.is_array() || pair.size() != 2) throw ParseError("edge must be [u, v]");
      const int a = pair[0].get<int>(), b = pair[1].get<int>();
      if (a < 0 || b < 0 || a >= n || b >= n) throw ParseError("edge endpoint outside 0..n-1");
      if (a == b) throw ParseError("self-loop");
      edges.emplace_back(a, b);
    }
    std::sort(edges.begin(), edges.end());
    edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
    return Graph(n, edges);
  } catch (const json::exception& e) {
    throw ParseError(std::string("graph JSON: ") + e.what());
  }
}

json graph_to_json(const Graph& g) {
  json edges = json::array();
  for (const Edge& e : g.edges()) edges.push_back({e.u, e.v});
  return {{"n", g.id_bound()}, {"edges", edges}};
}

Graph read_graph(std::istream& in, GraphFormat fmt) {
  if (fmt == GraphFormat::kEdgeList) return read_edge_list(in);
  json j;
  try {
    in >> j;
  } catch (const json::exception& e) {
    throw ParseError(std::string("graph JSON: ") + e.what());
  }
  return graph_from_json(j);
}

Graph read_graph_file(const std::string& path, GraphFormat fmt) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open " + path);
  return read_graph(in, fmt);
}

json labeling_to_json(const TotalLabeling& f) {
  json vertices = json::object();
  json edges = json::array();
  for (const auto& [x, l] : f.assignments()) {
    if (x.is_vertex())
      vertices[std::to_string(x.vertex())] = l;
    else
      edges.push_back({x.a, x.b, l});
  }
  return {{"k", f.k()}, {"vertices", vertices}, {"edges", edges}};
}

TotalLabeling labeling_from_json(const Graph& g, const json& j) {
  try {
    const int k = j.at("k").get<int>();
    if (k < 0 || k > kMaxStoredLabel) throw ParseError("k out of range");
    TotalLabeling f(g, k);
    auto check_label = [](int l) {
      if (l < 0 || l > kMaxStoredLabel) throw ParseError("label out of range: " + std::to_string(l));
      return l;
    };
    for (const auto& [key, value] : j.at("vertices").items()) {
      std::size_t used = 0;
      int v = 0;
      try {
        v = std::stoi(key, &used);
      } catch (const std::exception&) {
        used = 0;
      }
      if (used != key.size()) throw ParseError("bad vertex key \"" + key + "\"");
      if (!g.has_vertex(v)) throw ParseError("vertex " + key + " not in graph");
      f.set(v, check_label(value.get<int>()));
    }
    for (const auto& triple : j.at("edges")) {
      if (!triple.is_array() || triple.size() != 3) throw ParseError("edge label must be [u, v, l]");
      const int a = triple[0].get<int>(), b = triple[1].get<int>();
      if (a == b || !g.has_edge(a, b))
        throw ParseError("edge (" + std::to_string(a) + "," + std::to_string(b) + ") not in graph");
      f.set(a, b, check_label(triple[2].get<int>()));
    }
    return f;
  } catch (const json::exception& e) {
    throw ParseError(std::string("labeling JSON: ") + e.what());
  }
}

namespace {

json edge_json(const Edge& e) { return json::array({e.u, e.v}); }

}  // namespace

json embedding_to_json(const OuterplanarEmbedding& emb) {
  json blocks = json::array();
  for (const Block& b : emb.blocks()) {
    json chords = json::array();
    for (const Edge& e : b.chords) chords.push_back(edge_json(e));
    json faces = json::array();
    for (const Face& f : b.faces) faces.push_back(f.vertices);
    blocks.push_back({{"boundary", b.cycle}, {"chords", chords}, {"faces", faces}});
  }
  json inner = json::array();
  for (const Edge& e : emb.inner_edges()) inner.push_back(edge_json(e));
  json out = {{"blocks", blocks}, {"inner_edges", inner}, {"cut_vertices", emb.cut_vertices()}};
  if (emb.biconnected()) out["boundary"] = emb.boundary();
  return out;
}

json configuration_to_json(const Configuration& c) {
  return {{"kind", to_string(c.kind)}, {"witnesses", c.witnesses}};
}

json chain_to_json(const Chain& c) {
  json out = {{"t", c.t()}, {"spine", c.spine}, {"closed", c.closed}};
  out["w_first"] = c.w_first >= 0 ? json(c.w_first) : json(nullptr);
  out["w_last"] = c.w_last >= 0 ? json(c.w_last) : json(nullptr);
  return out;
}

json violation_to_json(const Violation& v) {
  json witnesses = json::array();
  for (const Element& x : v.witnesses) witnesses.push_back(to_string(x));
  return {{"kind", to_string(v.kind)}, {"witnesses", witnesses}};
}

std::string to_dot(const TotalLabeling& f, const OuterplanarEmbedding* emb) {
  std::ostringstream out;
  out << "graph G {\n";
  for (Vertex v : f.host().vertices()) {
    out << "  " << v << " [label=\"" << v;
    if (auto l = f.get(v)) out << ":" << *l;
    out << "\"];\n";
  }
  for (const Edge& e : f.host().edges()) {
    out << "  " << e.u << " -- " << e.v << " [";
    if (auto l = f.get(e)) out << "label=\"" << *l << "\"";
    if (emb && emb->is_inner(e)) out << (f.get(e) ? ", " : "") << "style=dashed";
    out << "];\n";
  }
  out << "}\n";
  return out.str();
}

}  // namespace outerlabel
