#include "ordsup/analysis.hpp"

#include <stdexcept>

#include "ordsup/errors.hpp"

namespace ordsup {

SeparabilityAnalysis analyze_separability_of_profile(
    const OrderProfile& profile, const std::optional<Group>& materialized,
    const AnalysisOptions& options) {
  SeparabilityAnalysis analysis;
  analysis.group_order = profile.total();
  QuotientOrderGraph quotient = order_quotient_graph(profile);
  analysis.quotient = quotient_is_cyclically_separable(quotient);
  analysis.separable = analysis.quotient.separable;
  analysis.path = "quotient";

  if (!materialized) return analysis;
  const Group& g = *materialized;

  SimpleGraph sg = order_supergraph(g);
  bool direct_ran = false;
  try {
    SeparabilityResult direct =
        is_cyclically_separable(sg, {.cycle_limit = options.cycle_limit});
    direct_ran = true;
    if (direct.separable != analysis.quotient.separable)
      throw std::logic_error(
          "separability: direct and quotient paths disagree on " + g.name());
  } catch (const CycleLimitError&) {
    analysis.path = "quotient (direct limit exceeded)";
  }
  if (direct_ran) {
    analysis.path = "direct+quotient";
    if (analysis.separable) {
      CutsetCertificate cert = certificate_from_quotient_witness(
          sg, g.orders(), analysis.quotient);
      if (!verify_certificate(sg, cert))
        throw std::logic_error(
            "separability: quotient witness fails direct verification on " +
            g.name());
      analysis.cutset_labels = sg.labels_of(cert.cutset);
      analysis.witness_a_labels = sg.labels_of(cert.witness_a);
      analysis.witness_b_labels = sg.labels_of(cert.witness_b);
    }
  }
  return analysis;
}

SeparabilityAnalysis analyze_separability(const GroupSpec& spec,
                                          const AnalysisOptions& options) {
  std::optional<Group> materialized;
  OrderProfile profile;
  if (spec.kind == GroupSpec::Kind::kPerm) {
    // Perm specs must be materialized to know their closure at all.
    materialized = build_group(spec, options.element_cap);
    profile = element_orders(*materialized);
    if (materialized->order() > options.direct_threshold) materialized.reset();
  } else {
    profile = build_order_profile(spec, options.element_cap);
    if (profile.total() <= options.direct_threshold)
      materialized = build_group(spec, options.element_cap);
  }
  return analyze_separability_of_profile(profile, materialized, options);
}

}  // namespace ordsup
