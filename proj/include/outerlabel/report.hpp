#pragma once

#include <string>
#include <vector>

namespace outerlabel {

/// Side channel filled by the constructive labelers.
struct LabelReport {
  /// One line per dispatch decision, indented by recursion depth.
  std::vector<std::string> trace;
  /// Branches whose literal assignments failed verification and were
  /// completed by bounded search instead.
  std::vector<std::string> discrepancies;
  int fallbacks = 0;
};

}  // namespace outerlabel
