#pragma once

#include <optional>
#include <string>
#include <vector>

#include "ordsup/config.hpp"
#include "ordsup/graph.hpp"
#include "ordsup/supergraph.hpp"

namespace ordsup {

// Independently checkable proof of cyclic separability: removing `cutset`
// leaves `witness_a` and `witness_b` in different components, each of which
// contains a cycle.
struct CutsetCertificate {
  VertexSet cutset;
  VertexSet witness_a;
  VertexSet witness_b;
};

// Single source of truth for certificates: checks disjointness, that both
// witnesses are nonempty, that each witness lies inside one component of
// g - cutset, that the two components differ, and that both contain cycles.
bool verify_certificate(const SimpleGraph& g, const CutsetCertificate& cert);

struct SeparabilityResult {
  bool separable = false;
  std::optional<CutsetCertificate> certificate;
};

struct SearchLimits {
  long long cycle_limit = kDefaultCycleLimit;
};

// A graph is cyclically separable iff some chordless cycle C leaves a cycle
// in G - N[C]. Streams over enumerate_induced_cycles; throws CycleLimitError
// if the enumeration exceeds limits.cycle_limit (callers fall back to the
// quotient path).
SeparabilityResult is_cyclically_separable(const SimpleGraph& g,
                                           const SearchLimits& limits = {});

// Cyclic vertex connectivity with certificate: the minimum over pairs of
// vertex-disjoint, mutually non-adjacent chordless cycles (C1, C2) of the
// minimum vertex cut between them; value absent = no cyclic cutset exists.
struct CkappaResult {
  std::optional<int> value;
  std::optional<CutsetCertificate> certificate;
  bool infinite() const { return !value.has_value(); }
};

CkappaResult cyclic_vertex_connectivity(const SimpleGraph& g,
                                        const SearchLimits& limits = {});

// Exhaustive oracle: cutset candidates enumerated by size then
// lexicographically, up to max_cut_size. A cyclic cutset must leave at
// least 6 vertices, so a bound of |V| - 6 is conclusive; smaller bounds can
// only report "unknown above bound".
enum class BruteStatus { kFinite, kInfinite, kUnknownAboveBound };

struct BruteForceCkappa {
  BruteStatus status = BruteStatus::kUnknownAboveBound;
  int value = -1;
  std::optional<CutsetCertificate> certificate;
  int searched_up_to = -1;
};

BruteForceCkappa brute_force_ckappa(const SimpleGraph& g, int max_cut_size);

// Separability decided on the divisibility quotient: searches pairs of
// disjoint, mutually non-adjacent connected node sets whose blow-ups both
// contain cycles. Agrees with is_cyclically_separable on the expansion.
struct QuotientSeparability {
  bool separable = false;
  std::vector<long long> witness_a_orders;
  std::vector<long long> witness_b_orders;
};

QuotientSeparability quotient_is_cyclically_separable(const QuotientOrderGraph& q);

// Element-level certificate induced by a quotient witness: the cutset is
// every vertex whose class order lies outside both witness sides.
CutsetCertificate certificate_from_quotient_witness(
    const SimpleGraph& supergraph, const std::vector<long long>& vertex_orders,
    const QuotientSeparability& witness);

// {"cutset": [labels], "witness_a": [...], "witness_b": [...],
//  "value": int | "infinite"}.
std::string ckappa_to_json(const SimpleGraph& g, const CkappaResult& result);
std::string certificate_to_json(const SimpleGraph& g,
                                const CutsetCertificate& cert);

}  // namespace ordsup
