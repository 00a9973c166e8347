#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "outerlabel/graph.hpp"
#include "outerlabel/labeling.hpp"

namespace outerlabel {

class ExactError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Largest span bound the backtracking search handles (domains are 64-bit masks).
inline constexpr int kMaxSearchLabel = 63;

struct SearchOptions {
  /// Upper limit on the number of unassigned elements the search may branch on.
  int element_cap = 30;
  /// Restrict the first branched element to labels ≤ ⌈k/2⌉ (complement symmetry).
  /// Only applied when nothing is pre-assigned.
  bool symmetry_pruning = true;
  /// Split the first branching level across OpenMP threads.
  bool parallel = false;
  /// Wall-clock budget in seconds; 0 means unlimited.
  double time_budget_s = 0.0;
};

struct SearchStats {
  std::uint64_t nodes = 0;
  double seconds = 0.0;
};

enum class SearchStatus { kFound, kInfeasible, kUnknown };

struct SearchResult {
  SearchStatus status = SearchStatus::kUnknown;
  std::optional<TotalLabeling> labeling;
  SearchStats stats;
};

/// Exhaustive search for a (p,1)-total labeling of g within {0..k}.
/// Throws ExactError when |V|+|E| exceeds the element cap.
SearchResult find_labeling_bounded(const Graph& g, int p, int k, const SearchOptions& opts = {});

struct LambdaResult {
  std::optional<int> lambda;  // empty: unknown (no feasible k ≤ kmax, or out of time)
  bool timed_out = false;
  std::optional<TotalLabeling> witness;
  SearchStats stats;
};

/// Least k ≤ kmax admitting a (p,1)-total labeling.
LambdaResult lambda_exact(const Graph& g, int p, int kmax, const SearchOptions& opts = {});

/// Completes `partial` by searching labels for the elements in `free` only.
/// Every other element keeps its label (unlabeled ones stay unlabeled and do
/// not constrain the search). Returns the first completion in search order.
std::optional<TotalLabeling> extend_bounded(const TotalLabeling& partial, const std::vector<Element>& free,
                                            int k, int p = 2, const SearchOptions& opts = {});

/// Exact L(p,1) vertex labeling of g within {0..k}; labels indexed by vertex id.
std::optional<std::vector<Label>> find_lp1_labeling(const Graph& g, int p, int k,
                                                    const SearchOptions& opts = {});

}  // namespace outerlabel
