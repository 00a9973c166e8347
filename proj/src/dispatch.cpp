#include "outerlabel/dispatch.hpp"

#include "outerlabel/delta3.hpp"
#include "outerlabel/delta4.hpp"
#include "outerlabel/exact.hpp"

namespace outerlabel {

DispatchResult label_outerplanar(const Graph& g, const DispatchOptions& opts) {
  recognize_embed(g, opts.orientation);
  const int delta = g.empty() ? 0 : g.max_degree();
  DispatchResult r;
  if (delta <= 2) {
    r.algorithm = "cycle-path";
    r.bound = 4;
    r.labeling = label_cycle_or_path(g);
  } else if (delta == 3) {
    r.algorithm = "delta3";
    r.bound = 5;
    r.labeling = label_delta3(g, &r.report, opts.orientation);
  } else if (delta == 4) {
    r.algorithm = "delta4";
    r.bound = 6;
    r.labeling = label_delta4(g, &r.report, opts.orientation);
  } else {
    if (!opts.fallback_search)
      throw UnsupportedDegree("maximum degree " + std::to_string(delta) + " has no constructive labeler");
    r.algorithm = "search (experimental)";
    SearchOptions so;
    so.element_cap = g.num_elements();
    so.time_budget_s = opts.time_budget_s;
    for (int k = delta + 2; k <= opts.kmax; ++k) {
      SearchResult s = find_labeling_bounded(g, 2, k, so);
      if (s.status == SearchStatus::kFound) {
        r.bound = k;
        r.labeling = *s.labeling;
        r.report.trace.push_back("search found span " + std::to_string(k));
        return r;
      }
      if (s.status == SearchStatus::kUnknown) break;
    }
    throw UnsupportedDegree("fallback search found no labeling with span ≤ " + std::to_string(opts.kmax));
  }
  return r;
}

}  // namespace outerlabel
