#pragma once

#include <optional>
#include <string>

#include "ordsup/cyclic.hpp"
#include "ordsup/group_spec.hpp"

namespace ordsup {

struct AnalysisOptions {
  long long element_cap = kDefaultElementCap;
  int direct_threshold = kDefaultDirectThreshold;
  long long cycle_limit = kDefaultCycleLimit;
};

// Separability of the order supergraph of a group given by spec. The
// quotient path always runs; at or below the direct threshold the direct
// graph runs too and the answers must agree (std::logic_error otherwise).
// A direct-side cycle-limit overrun falls back to the quotient verdict.
struct SeparabilityAnalysis {
  bool separable = false;
  long long group_order = 0;
  std::string path;  // "direct+quotient" | "quotient" | "quotient (direct limit exceeded)"
  QuotientSeparability quotient;
  // Present when the direct graph was built and the answer is positive:
  // the quotient witness expanded to element labels.
  std::optional<std::vector<std::string>> cutset_labels;
  std::optional<std::vector<std::string>> witness_a_labels;
  std::optional<std::vector<std::string>> witness_b_labels;
};

SeparabilityAnalysis analyze_separability(const GroupSpec& spec,
                                          const AnalysisOptions& options = {});

SeparabilityAnalysis analyze_separability_of_profile(
    const OrderProfile& profile, const std::optional<Group>& materialized,
    const AnalysisOptions& options = {});

}  // namespace ordsup
