#pragma once

#include <stdexcept>
#include <string>

#include "outerlabel/labeling.hpp"
#include "outerlabel/outerplanar.hpp"
#include "outerlabel/report.hpp"

namespace outerlabel {

class UnsupportedDegree : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

struct DispatchOptions {
  Orientation orientation = Orientation::kForward;
  /// Δ ≥ 5: bounded search from k = Δ+2 upwards instead of throwing.
  bool fallback_search = false;
  /// Largest k tried by the fallback search.
  int kmax = 12;
  double time_budget_s = 60.0;
};

struct DispatchResult {
  TotalLabeling labeling;
  std::string algorithm;  // "cycle-path", "delta3", "delta4", "search (experimental)"
  int bound = 0;          // span the algorithm guarantees
  LabelReport report;
};

/// Picks the labeler by maximum degree. Throws NotOuterplanar, or
/// UnsupportedDegree for Δ ≥ 5 without fallback (or when the search fails).
DispatchResult label_outerplanar(const Graph& g, const DispatchOptions& opts = {});

}  // namespace outerlabel
