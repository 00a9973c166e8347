#pragma once

#include <array>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "outerlabel/labeling.hpp"
#include "outerlabel/outerplanar.hpp"
#include "outerlabel/report.hpp"
#include "outerlabel/structure.hpp"

namespace outerlabel {

class NotDelta4 : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class NoPair : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A chain template plus its patches did not verify.
class CaseFault : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

using LabelPair = std::pair<Label, Label>;

/// Labels still free for a chain end u whose only host neighbor is w.
struct AvailabilitySet {
  Vertex vertex = -1;
  std::vector<Label> labels;

  bool contains(Label l) const;
};

/// L6 minus {f(w), f(uw)-1, f(uw), f(uw)+1}.
std::vector<Label> availability_labels(Label f_w, Label f_uw, int k = 6);
AvailabilitySet availability(const TotalLabeling& f, Vertex endpoint, Vertex w, int k = 6);

/// The fourteen end-label pairs, in the order they are tried.
const std::array<LabelPair, 14>& claim_pairs();
/// First pair (a, b) of claim_pairs() with a ∈ l1 and b ∈ l2. Throws NoPair.
LabelPair claim_pair(const std::vector<Label>& l1, const std::vector<Label>& l2);

struct ChainCase {
  int case_id = 0;     // 1:(0,6) 2:(0,1) 3:(1,2) 4:(2,3)
  LabelPair pair;      // canonical end labels
  bool reverse = false;
  bool complement = false;  // at k = 6; applied after reversing
};

/// Maps a claim pair onto one of the four canonical cases. Throws
/// std::invalid_argument for pairs outside the list.
ChainCase canonicalize(LabelPair p);
/// Applies the transform of `c` to a pair, i.e. canonical pair from found pair.
LabelPair apply_transform(const ChainCase& c, LabelPair p);

/// Host labels next to the chain ends, in the canonical frame.
struct HostContext {
  Label w_first = 0;
  Label edge_first = 0;  // f(u1 w1)
  Label w_last = 0;
  Label edge_last = 0;   // f(u_{2t+1} w_{2t+1})
};

/// Chain u1..u_{2t+1} on ids 0..2t plus stubs w1 = 2t+1 (on u1) and
/// w_{2t+1} = 2t+2 (on u_{2t+1}).
Graph chain_stub_graph(int t);

/// Subcase name such as "2.1.3" for the given case, t and host edges.
std::string chain_subcase(int case_id, int t, Label edge_first, Label edge_last);

struct TemplateInfo {
  std::string subcase;
  int backtracks = 0;  // rejected candidates across all "a label in S" choices
};

/// Labels the stub graph: base template for the case and parity of t, then
/// the subcase patches. Choices of the form "a label in S" are searched in
/// increasing order. Throws CaseFault when no choice verifies.
TotalLabeling chain_template(int case_id, int t, const HostContext& ctx, TemplateInfo* info = nullptr);

struct TemplateSweepResult {
  long runs = 0;
  long faults = 0;
  long backtracked = 0;  // runs where the smallest candidate of some choice failed
  std::vector<std::string> fault_samples;  // at most 20
  std::vector<std::pair<std::string, long>> per_subcase;  // sorted by name
};

/// Every case, every t in [t_min, t_max] and every host context consistent
/// with the case's end labels.
TemplateSweepResult template_sweep(int t_min, int t_max, bool parallel);

/// C1 and C2 reduction: the 2-vertex u1 of the configuration with its
/// edges. Returns H and the freed elements.
std::pair<Graph, std::vector<Element>> reduce_c1c2(const Graph& g, const Configuration& c);

/// Span ≤ 6 labeling of an outerplanar graph with Δ = 4.
TotalLabeling label_delta4(const Graph& g, LabelReport* report = nullptr, Orientation o = Orientation::kForward);

/// Same dispatch for Δ ≤ 4; lower degrees are handed to the Δ ≤ 3 labeler.
TotalLabeling label_upto_delta4(const Graph& g, LabelReport* report = nullptr,
                                Orientation o = Orientation::kForward);

}  // namespace outerlabel
