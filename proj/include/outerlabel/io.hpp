#pragma once

#include <iosfwd>
#include <stdexcept>
#include <string>

#include "json.hpp"

#include "outerlabel/graph.hpp"
#include "outerlabel/labeling.hpp"
#include "outerlabel/outerplanar.hpp"
#include "outerlabel/structure.hpp"

namespace outerlabel {

class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

enum class GraphFormat { kEdgeList, kJson };

/// One "u v" pair per line; '#' starts a comment. Vertices are 0..max id.
Graph read_edge_list(std::istream& in);
std::string write_edge_list(const Graph& g);

/// {"n": int, "edges": [[u, v], ...]}
Graph graph_from_json(const nlohmann::json& j);
nlohmann::json graph_to_json(const Graph& g);

Graph read_graph(std::istream& in, GraphFormat fmt);
Graph read_graph_file(const std::string& path, GraphFormat fmt);

/// {"k": int, "vertices": {"v": l}, "edges": [[u, v, l], ...]}
nlohmann::json labeling_to_json(const TotalLabeling& f);
/// Throws ParseError for malformed input or elements missing from g.
TotalLabeling labeling_from_json(const Graph& g, const nlohmann::json& j);

/// Boundary, chords and faces for each block.
nlohmann::json embedding_to_json(const OuterplanarEmbedding& emb);
nlohmann::json configuration_to_json(const Configuration& c);
nlohmann::json chain_to_json(const Chain& c);
nlohmann::json violation_to_json(const Violation& v);

/// Vertex labels as node labels, edge labels as edge attributes. Inner edges
/// are dashed when an embedding is given.
std::string to_dot(const TotalLabeling& f, const OuterplanarEmbedding* emb = nullptr);

}  // namespace outerlabel
