#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "ordsup/analysis.hpp"
#include "ordsup/group.hpp"

namespace ordsup {

enum class TheoremFamily {
  kDihedral,
  kDicyclic,
  kEppo,
  kEpo,
  kNilpotent,
  kSymmetric,
  kAlternating,
};

std::string family_name(TheoremFamily family);
std::optional<TheoremFamily> family_from_name(const std::string& name);

// A characterization predicate evaluation: overall truth plus the
// individual condition values, keyed by the condition labels. `vacuous`
// lists clauses that can never fire under the family's hypothesis.
struct PredicateResult {
  bool holds = false;
  std::vector<std::pair<std::string, bool>> clauses;
  std::vector<std::string> vacuous;
};

// Separable iff (i) n is not a power of two, (ii) n >= 5, (iii) n not in
// {6, 12}. Requires n >= 3.
PredicateResult dihedral_predicate(long long n);

// Separable iff n is not a power of two. Requires n >= 2.
PredicateResult dicyclic_predicate(long long n);

// For EPPO groups: pq | |G| for primes p > q >= 5, or at least two of
// (i) p | |G| for a prime p >= 5, (ii) a Sylow 3-subgroup not of order 3 or
// not normal, (iii) a Sylow 2-subgroup not of order 2 or not normal.
// Conditions naming an absent Sylow subgroup are false. Throws
// std::invalid_argument when the group is not EPPO.
PredicateResult eppo_predicate(const OrderProfile& profile, long long order);
PredicateResult eppo_predicate(const Group& g);

// EPO variant: "not cyclic" in place of "not of order q"; under EPO that is
// equivalent to Sylow order != q. Throws when the group is not EPO.
PredicateResult epo_predicate(const OrderProfile& profile, long long order);
PredicateResult epo_predicate(const Group& g);

// For nilpotent groups: |G| has at least three prime factors, or exactly
// two and one of clauses (i)..(vii) holds. Clause (v) requires a non-normal
// Sylow 2-subgroup and is vacuous under nilpotency; it is annotated, not
// dropped. Hypothesis is checked by the caller (needs the full group).
PredicateResult nilpotent_predicate(const OrderProfile& profile, long long order);
PredicateResult nilpotent_predicate(const Group& g);

// Separable iff n >= 4. Symmetric requires n >= 2, alternating n >= 3.
PredicateResult symmetric_predicate(long long n);
PredicateResult alternating_predicate(long long n);

struct TheoremVerdict {
  TheoremFamily family = TheoremFamily::kDihedral;
  std::string spec;    // group spec string
  std::string params;  // display form ("n=5" or the group name)
  std::string status = "ok";  // "ok" | "hypothesis_failed"
  bool predicate = false;
  bool computed = false;
  bool agree = true;
  std::vector<std::pair<std::string, bool>> clauses;
  std::vector<std::string> vacuous_clauses;
  std::string path;
  long long group_order = 0;
  // Certificate for positive verdicts: element labels when the direct graph
  // ran, quotient witness orders always.
  std::optional<std::vector<std::string>> cutset_labels;
  std::optional<std::vector<std::string>> witness_a_labels;
  std::optional<std::vector<std::string>> witness_b_labels;
  std::vector<long long> quotient_witness_a;
  std::vector<long long> quotient_witness_b;
};

struct AuditOptions {
  AnalysisOptions analysis;
  int jobs = 1;
};

struct AuditReport {
  TheoremFamily family = TheoremFamily::kDihedral;
  std::string tool_version;
  AnalysisOptions caps;
  std::vector<TheoremVerdict> rows;
  std::vector<std::size_t> discrepancies;  // indexes of rows with agree == false
};

// Range specs for the parameterized families (dihedral/dicyclic/symmetric/
// alternating). Throws std::invalid_argument for catalog families.
std::vector<std::string> family_range_specs(TheoremFamily family,
                                            long long from, long long to);

// Built-in catalogs for the eppo/epo/nilpotent audits.
std::vector<std::string> builtin_catalog(TheoremFamily family);

// Evaluates predicate vs computed separability for every spec; rows are
// ordered as given; rows may be computed concurrently (options.jobs).
AuditReport audit_family(TheoremFamily family,
                         const std::vector<std::string>& specs,
                         const AuditOptions& options = {});

std::string report_to_json(const AuditReport& report);
std::string report_to_csv(const AuditReport& report);

// One discrepancy row, as serialized into the newline-delimited ledger.
struct DiscrepancyRecord {
  std::string family;
  std::string spec;
  bool predicate = false;
  bool computed = false;
  bool operator==(const DiscrepancyRecord&) const = default;
};

std::vector<DiscrepancyRecord> report_discrepancies(const AuditReport& report);
std::string discrepancies_to_jsonl(const std::vector<DiscrepancyRecord>& records);
std::vector<DiscrepancyRecord> parse_discrepancies_jsonl(const std::string& text);

}  // namespace ordsup
