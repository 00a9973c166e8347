#pragma once

#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

#include "outerlabel/labeling.hpp"
#include "outerlabel/outerplanar.hpp"
#include "outerlabel/report.hpp"

namespace outerlabel {

class InfeasibleTrace : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class NotDelta3 : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

struct LabelK2Options {
  /// 3-vertex numbered x1; -1 takes the first 3-vertex of the boundary.
  Vertex start_vertex = -1;
  /// Label of x1, 0 or 1.
  int start_parity = 0;
  /// Pins the 4/5 alternation: this outer edge gets this label.
  std::optional<std::pair<Edge, int>> outer_edge_seed;
  /// Never picked as the label-2 vertex of an odd gap when another choice exists.
  std::vector<Vertex> avoid_special;
  /// Picked as the label-2 vertex whenever it lies in an odd gap.
  std::vector<Vertex> prefer_special;
  /// The endface of the odd-order step avoids these vertices when possible.
  std::vector<Vertex> endface_avoid;
};

/// LABEL-K2 on a 2-connected outerplane host with an inner edge and Δ = 3.
/// The result spans at most 5. Throws InfeasibleTrace when a step has no
/// valid choice.
TotalLabeling label_k2(const OuterplanarEmbedding& emb, const LabelK2Options& opts = {},
                       std::vector<std::string>* trace = nullptr);

/// Span ≤ 4 labeling of a graph with Δ ≤ 2, read off an L(2,1) labeling of
/// its incidence paths and cycles. Components are handled separately.
TotalLabeling label_cycle_or_path(const Graph& g);

/// u, v: ends of an inner edge; u', v': their neighbors in the component G2
/// of G - {u, v} that is being filled in.
struct Lemma1Cut {
  Vertex u = -1;
  Vertex v = -1;
  Vertex u_prime = -1;
  Vertex v_prime = -1;
};

/// Completes `f`, which labels every element of G outside G2 together with
/// u', v', (u,u') and (v,v'), to all of G with span ≤ 5. Throws
/// PreconditionError when the label conditions on u', v' do not hold.
TotalLabeling extend_lemma1(const Graph& g, const TotalLabeling& f, const Lemma1Cut& cut,
                            LabelReport* report = nullptr, Orientation o = Orientation::kForward);

/// Span ≤ 5 labeling of an outerplanar graph with Δ = 3.
TotalLabeling label_delta3(const Graph& g, LabelReport* report = nullptr, Orientation o = Orientation::kForward);

/// Same dispatch for any outerplanar graph with Δ ≤ 3 (labels within 0..5).
TotalLabeling label_upto_delta3(const Graph& g, LabelReport* report = nullptr,
                                Orientation o = Orientation::kForward);

}  // namespace outerlabel
