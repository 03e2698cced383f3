#include "ordsup/theorems.hpp"

#include <atomic>
#include <functional>
#include <mutex>
#include <set>
#include <stdexcept>
#include <thread>

#include <json.hpp>

#include "ordsup/config.hpp"
#include "ordsup/numbers.hpp"

namespace ordsup {

std::string family_name(TheoremFamily family) {
  switch (family) {
    case TheoremFamily::kDihedral: return "dihedral";
    case TheoremFamily::kDicyclic: return "dicyclic";
    case TheoremFamily::kEppo: return "eppo";
    case TheoremFamily::kEpo: return "epo";
    case TheoremFamily::kNilpotent: return "nilpotent";
    case TheoremFamily::kSymmetric: return "symmetric";
    case TheoremFamily::kAlternating: return "alternating";
  }
  return "?";
}

std::optional<TheoremFamily> family_from_name(const std::string& name) {
  for (TheoremFamily family :
       {TheoremFamily::kDihedral, TheoremFamily::kDicyclic, TheoremFamily::kEppo,
        TheoremFamily::kEpo, TheoremFamily::kNilpotent, TheoremFamily::kSymmetric,
        TheoremFamily::kAlternating}) {
    if (family_name(family) == name) return family;
  }
  return std::nullopt;
}

PredicateResult dihedral_predicate(long long n) {
  if (n < 3) throw std::invalid_argument("dihedral_predicate: n must be >= 3");
  PredicateResult result;
  bool i = !is_power_of_two(n);
  bool ii = n >= 5;
  bool iii = n != 6 && n != 12;
  result.clauses = {{"i", i}, {"ii", ii}, {"iii", iii}};
  result.holds = i && ii && iii;
  return result;
}

PredicateResult dicyclic_predicate(long long n) {
  if (n < 2) throw std::invalid_argument("dicyclic_predicate: n must be >= 2");
  PredicateResult result;
  bool not_pow2 = !is_power_of_two(n);
  result.clauses = {{"not_power_of_two", not_pow2}};
  result.holds = not_pow2;
  return result;
}

namespace {

// Shared body of the EPPO theorem and its EPO corollary; under EPO,
// "Sylow q-subgroup not cyclic" is equivalent to "not of order q".
PredicateResult eppo_like_predicate(const OrderProfile& profile,
                                    long long order) {
  PredicateResult result;
  std::vector<long long> primes = prime_divisors(order);
  bool pq5 = false;
  int big_primes = 0;
  for (long long p : primes)
    if (p >= 5) ++big_primes;
  pq5 = big_primes >= 2;
  bool i = big_primes >= 1;
  auto sylow_not_small_or_not_normal = [&](long long q) {
    auto facts = sylow_facts(profile, order, q);
    if (!facts) return false;
    return facts->subgroup_order != q || !facts->normal;
  };
  bool ii = sylow_not_small_or_not_normal(3);
  bool iii = sylow_not_small_or_not_normal(2);
  result.clauses = {{"pq5", pq5}, {"i", i}, {"ii", ii}, {"iii", iii}};
  int fired = (i ? 1 : 0) + (ii ? 1 : 0) + (iii ? 1 : 0);
  result.holds = pq5 || fired >= 2;
  return result;
}

}  // namespace

PredicateResult eppo_predicate(const OrderProfile& profile, long long order) {
  if (!is_eppo(profile))
    throw std::invalid_argument("eppo_predicate: group is not EPPO");
  return eppo_like_predicate(profile, order);
}

PredicateResult eppo_predicate(const Group& g) {
  return eppo_predicate(element_orders(g), g.order());
}

PredicateResult epo_predicate(const OrderProfile& profile, long long order) {
  if (!is_epo(profile))
    throw std::invalid_argument("epo_predicate: group is not EPO");
  return eppo_like_predicate(profile, order);
}

PredicateResult epo_predicate(const Group& g) {
  return epo_predicate(element_orders(g), g.order());
}

PredicateResult nilpotent_predicate(const OrderProfile& profile,
                                    long long order) {
  PredicateResult result;
  std::vector<long long> primes = prime_divisors(order);
  bool three_primes = primes.size() >= 3;
  bool two_primes = primes.size() == 2;

  auto facts = [&](long long p) { return sylow_facts(profile, order, p); };
  auto exists_big_prime = [&](auto&& pred) {
    for (long long p : primes)
      if (p >= 5 && pred(*facts(p))) return true;
    return false;
  };
  std::optional<SylowFacts> s2 = facts(2);  // nullopt when 2 does not divide
  std::optional<SylowFacts> s3 = facts(3);

  int big_primes = 0;
  for (long long p : primes)
    if (p >= 5) ++big_primes;

  bool i = big_primes >= 2;
  bool ii = (s2.has_value() || s3.has_value()) &&
            exists_big_prime([](const SylowFacts& f) {
              return f.exponent >= f.prime * f.prime;
            });
  bool iii =
      exists_big_prime([](const SylowFacts& f) { return f.exponent == f.prime; }) &&
      ((s2 && (s2->subgroup_order != 2 || !s2->normal)) ||
       (s3 && (s3->subgroup_order != 3 || !s3->normal)));
  bool iv = s2 && (s2->subgroup_order != 2 || !s2->normal) && s3 &&
            (s3->subgroup_order != 3 || !s3->normal);
  bool v = s2 && s2->exponent >= 4 && !s2->normal && s3.has_value();
  bool vi = s2 && s2->exponent >= 8 && s3.has_value();
  bool vii = s3 && s3->exponent >= 9 && s2.has_value();

  result.clauses = {{"three_primes", three_primes},
                    {"i", i},
                    {"ii", ii},
                    {"iii", iii},
                    {"iv", iv},
                    {"v", v},
                    {"vi", vi},
                    {"vii", vii}};
  // In a nilpotent group every Sylow subgroup is normal, so clause (v) can
  // never fire; it is evaluated literally and annotated.
  result.vacuous = {"v"};
  result.holds =
      three_primes || (two_primes && (i || ii || iii || iv || v || vi || vii));
  return result;
}

PredicateResult nilpotent_predicate(const Group& g) {
  if (!is_nilpotent(g))
    throw std::invalid_argument("nilpotent_predicate: group is not nilpotent");
  return nilpotent_predicate(element_orders(g), g.order());
}

PredicateResult symmetric_predicate(long long n) {
  if (n < 2) throw std::invalid_argument("symmetric_predicate: n must be >= 2");
  PredicateResult result;
  result.clauses = {{"n_ge_4", n >= 4}};
  result.holds = n >= 4;
  return result;
}

PredicateResult alternating_predicate(long long n) {
  if (n < 3) throw std::invalid_argument("alternating_predicate: n must be >= 3");
  PredicateResult result;
  result.clauses = {{"n_ge_4", n >= 4}};
  result.holds = n >= 4;
  return result;
}

std::vector<std::string> family_range_specs(TheoremFamily family,
                                            long long from, long long to) {
  std::string prefix;
  long long min_from = 0;
  switch (family) {
    case TheoremFamily::kDihedral: prefix = "dihedral:"; min_from = 3; break;
    case TheoremFamily::kDicyclic: prefix = "dicyclic:"; min_from = 2; break;
    case TheoremFamily::kSymmetric: prefix = "sym:"; min_from = 2; break;
    case TheoremFamily::kAlternating: prefix = "alt:"; min_from = 3; break;
    default:
      throw std::invalid_argument("family_range_specs: " + family_name(family) +
                                  " audits run over --catalog, not a range");
  }
  if (from < min_from || to < from)
    throw std::invalid_argument("family_range_specs: invalid range");
  std::vector<std::string> specs;
  for (long long n = from; n <= to; ++n)
    specs.push_back(prefix + std::to_string(n));
  return specs;
}

namespace {

// Direct products of p-groups used to populate the catalogs.
const std::vector<std::string>& p_group_pool() {
  static const std::vector<std::string> pool = {
      "cyclic:2", "cyclic:4",  "cyclic:8", "product:cyclic:2*cyclic:2",
      "dicyclic:2",  // Q8
      "cyclic:3", "cyclic:9",  "product:cyclic:3*cyclic:3",
      "cyclic:5", "cyclic:25", "cyclic:7",
  };
  return pool;
}

std::string product_spec(const std::vector<std::string>& factors) {
  std::string spec = factors[0];
  for (std::size_t i = 1; i < factors.size(); ++i)
    spec = "product:" + spec + "*" + factors[i];
  return spec;
}

std::vector<std::string> eppo_catalog() {
  std::vector<std::string> specs = {
      "sym:3", "sym:4", "alt:4", "alt:5",
      "dihedral:3", "dihedral:4", "dihedral:5", "dihedral:8",
      "dihedral:9", "dihedral:16", "dihedral:27",
      "dicyclic:2", "dicyclic:4",
      "perm:(1 2 3 4 5),(2 3 5 4)",  // Z5 : Z4, order 20
  };
  for (long long q = 2; q <= 32; ++q) {
    auto factors = factorize(q);
    if (factors.size() == 1) specs.push_back("cyclic:" + std::to_string(q));
  }
  // Pairwise products of small p-groups, kept when the result is EPPO.
  const auto& pool = p_group_pool();
  for (std::size_t i = 0; i < pool.size(); ++i) {
    for (std::size_t j = i; j < pool.size(); ++j) {
      std::string spec = product_spec({pool[i], pool[j]});
      GroupSpec parsed = parse_group_spec(spec);
      if (spec_group_order(parsed) > 64) continue;
      if (is_eppo(build_order_profile(parsed))) specs.push_back(spec);
    }
  }
  return specs;
}

std::vector<std::string> epo_catalog() {
  std::vector<std::string> specs;
  for (const std::string& spec : eppo_catalog()) {
    if (is_epo(build_order_profile(parse_group_spec(spec))))
      specs.push_back(spec);
  }
  return specs;
}

std::vector<std::string> nilpotent_catalog() {
  // All multiset products over the pool with order <= 400 and at most three
  // distinct primes.
  std::vector<std::string> specs;
  const auto& pool = p_group_pool();
  std::vector<long long> pool_order;
  std::vector<long long> pool_prime;
  for (const std::string& spec : pool) {
    GroupSpec parsed = parse_group_spec(spec);
    long long order = spec_group_order(parsed);
    pool_order.push_back(order);
    pool_prime.push_back(prime_divisors(order)[0]);
  }
  std::vector<std::string> chosen;
  std::set<long long> primes;
  std::function<void(std::size_t, long long)> rec = [&](std::size_t from,
                                                        long long order) {
    if (!chosen.empty()) specs.push_back(product_spec(chosen));
    for (std::size_t i = from; i < pool.size(); ++i) {
      if (order > 400 / pool_order[i]) continue;
      bool new_prime = !primes.contains(pool_prime[i]);
      if (new_prime && primes.size() >= 3) continue;
      if (new_prime) primes.insert(pool_prime[i]);
      chosen.push_back(pool[i]);
      rec(i, order * pool_order[i]);
      chosen.pop_back();
      if (new_prime) primes.erase(pool_prime[i]);
    }
  };
  rec(0, 1);
  return specs;
}

}  // namespace

std::vector<std::string> builtin_catalog(TheoremFamily family) {
  switch (family) {
    case TheoremFamily::kEppo: return eppo_catalog();
    case TheoremFamily::kEpo: return epo_catalog();
    case TheoremFamily::kNilpotent: return nilpotent_catalog();
    default:
      throw std::invalid_argument("builtin_catalog: " + family_name(family) +
                                  " audits run over a parameter range");
  }
}

namespace {

TheoremVerdict audit_row(TheoremFamily family, const std::string& spec_text,
                         const AuditOptions& options) {
  TheoremVerdict row;
  row.family = family;
  row.spec = spec_text;
  GroupSpec spec = parse_group_spec(spec_text);

  // Range families carry their parameter; catalog families show the name.
  switch (family) {
    case TheoremFamily::kDihedral:
    case TheoremFamily::kDicyclic:
    case TheoremFamily::kSymmetric:
    case TheoremFamily::kAlternating:
      row.params = "n=" + std::to_string(spec.n);
      break;
    default:
      row.params = spec_display_name(spec);
      break;
  }

  OrderProfile profile;
  std::optional<Group> materialized;
  if (spec.kind == GroupSpec::Kind::kPerm) {
    materialized = build_group(spec, options.analysis.element_cap);
    profile = element_orders(*materialized);
  } else {
    profile = build_order_profile(spec, options.analysis.element_cap);
    if (profile.total() <= options.analysis.direct_threshold)
      materialized = build_group(spec, options.analysis.element_cap);
  }
  row.group_order = profile.total();

  // Hypothesis check for the classified families.
  PredicateResult predicate;
  switch (family) {
    case TheoremFamily::kDihedral:
      predicate = dihedral_predicate(spec.n);
      break;
    case TheoremFamily::kDicyclic:
      predicate = dicyclic_predicate(spec.n);
      break;
    case TheoremFamily::kSymmetric:
      predicate = symmetric_predicate(spec.n);
      break;
    case TheoremFamily::kAlternating:
      predicate = alternating_predicate(spec.n);
      break;
    case TheoremFamily::kEppo:
      if (!is_eppo(profile)) {
        row.status = "hypothesis_failed";
        return row;
      }
      predicate = eppo_predicate(profile, row.group_order);
      break;
    case TheoremFamily::kEpo:
      if (!is_epo(profile)) {
        row.status = "hypothesis_failed";
        return row;
      }
      predicate = epo_predicate(profile, row.group_order);
      break;
    case TheoremFamily::kNilpotent: {
      // Nilpotency needs the multiplication table; materialize for the
      // hypothesis check even above the direct threshold.
      if (!materialized) materialized = build_group(spec, options.analysis.element_cap);
      if (!is_nilpotent(*materialized)) {
        row.status = "hypothesis_failed";
        return row;
      }
      predicate = nilpotent_predicate(profile, row.group_order);
      break;
    }
  }
  row.predicate = predicate.holds;
  row.clauses = std::move(predicate.clauses);
  row.vacuous_clauses = std::move(predicate.vacuous);

  std::optional<Group> for_direct;
  if (materialized &&
      materialized->order() <= options.analysis.direct_threshold)
    for_direct = std::move(materialized);
  SeparabilityAnalysis analysis = analyze_separability_of_profile(
      profile, for_direct, options.analysis);
  row.computed = analysis.separable;
  row.agree = (row.predicate == row.computed);
  row.path = analysis.path;
  row.cutset_labels = std::move(analysis.cutset_labels);
  row.witness_a_labels = std::move(analysis.witness_a_labels);
  row.witness_b_labels = std::move(analysis.witness_b_labels);
  row.quotient_witness_a = std::move(analysis.quotient.witness_a_orders);
  row.quotient_witness_b = std::move(analysis.quotient.witness_b_orders);
  return row;
}

}  // namespace

AuditReport audit_family(TheoremFamily family,
                         const std::vector<std::string>& specs,
                         const AuditOptions& options) {
  AuditReport report;
  report.family = family;
  report.tool_version = kVersion;
  report.caps = options.analysis;
  report.rows.resize(specs.size());

  const int jobs = std::max(1, options.jobs);
  if (jobs == 1 || specs.size() <= 1) {
    for (std::size_t i = 0; i < specs.size(); ++i)
      report.rows[i] = audit_row(family, specs[i], options);
  } else {
    // Rows are independent; assembly order is fixed by index, so the
    // worker count cannot change the report.
    std::atomic<std::size_t> next{0};
    std::exception_ptr failure;
    std::mutex failure_mutex;
    auto worker = [&] {
      while (true) {
        std::size_t i = next.fetch_add(1);
        if (i >= specs.size()) return;
        try {
          report.rows[i] = audit_row(family, specs[i], options);
        } catch (...) {
          std::lock_guard<std::mutex> lock(failure_mutex);
          if (!failure) failure = std::current_exception();
          return;
        }
      }
    };
    std::vector<std::thread> threads;
    for (int t = 0; t < jobs; ++t) threads.emplace_back(worker);
    for (std::thread& t : threads) t.join();
    if (failure) std::rethrow_exception(failure);
  }

  for (std::size_t i = 0; i < report.rows.size(); ++i)
    if (report.rows[i].status == "ok" && !report.rows[i].agree)
      report.discrepancies.push_back(i);
  return report;
}

namespace {

nlohmann::ordered_json verdict_to_json(const TheoremVerdict& row) {
  nlohmann::ordered_json j;
  j["family"] = family_name(row.family);
  j["spec"] = row.spec;
  j["params"] = row.params;
  j["status"] = row.status;
  j["group_order"] = row.group_order;
  if (row.status != "ok") return j;
  j["predicate"] = row.predicate;
  j["computed"] = row.computed;
  j["agree"] = row.agree;
  auto clauses = nlohmann::ordered_json::object();
  for (const auto& [label, value] : row.clauses) clauses[label] = value;
  j["clauses"] = std::move(clauses);
  j["vacuous_clauses"] = row.vacuous_clauses;
  j["path"] = row.path;
  if (row.computed) {
    nlohmann::ordered_json cert;
    if (row.cutset_labels) {
      cert["kind"] = "direct";
      cert["cutset"] = *row.cutset_labels;
      cert["witness_a"] = *row.witness_a_labels;
      cert["witness_b"] = *row.witness_b_labels;
    } else {
      cert["kind"] = "quotient";
    }
    cert["witness_a_orders"] = row.quotient_witness_a;
    cert["witness_b_orders"] = row.quotient_witness_b;
    j["certificate"] = std::move(cert);
  } else {
    j["certificate"] = nullptr;
  }
  return j;
}

std::string csv_escape(const std::string& field) {
  std::string out = "\"";
  for (char c : field) {
    if (c == '"') out += '"';
    out += c;
  }
  out += '"';
  return out;
}

}  // namespace

std::string report_to_json(const AuditReport& report) {
  nlohmann::ordered_json j;
  j["family"] = family_name(report.family);
  j["tool_version"] = report.tool_version;
  j["caps"] = {{"element_cap", report.caps.element_cap},
               {"direct_threshold", report.caps.direct_threshold},
               {"cycle_limit", report.caps.cycle_limit}};
  auto rows = nlohmann::ordered_json::array();
  for (const TheoremVerdict& row : report.rows) rows.push_back(verdict_to_json(row));
  j["rows"] = std::move(rows);
  auto disc = nlohmann::ordered_json::array();
  for (std::size_t i : report.discrepancies) disc.push_back(verdict_to_json(report.rows[i]));
  j["discrepancies"] = std::move(disc);
  return j.dump(2) + "\n";
}

std::string report_to_csv(const AuditReport& report) {
  std::vector<std::string> clause_labels;
  for (const TheoremVerdict& row : report.rows) {
    if (row.status == "ok") {
      for (const auto& [label, value] : row.clauses) clause_labels.push_back(label);
      break;
    }
  }
  std::string out = "family,params,spec,status,predicate,computed,agree";
  for (const std::string& label : clause_labels) out += ",clause_" + label;
  out += "\n";
  for (const TheoremVerdict& row : report.rows) {
    out += family_name(row.family) + "," + csv_escape(row.params) + "," +
           csv_escape(row.spec) + "," + row.status;
    if (row.status == "ok") {
      out += std::string(",") + (row.predicate ? "1" : "0") + "," +
             (row.computed ? "1" : "0") + "," + (row.agree ? "1" : "0");
      for (const auto& [label, value] : row.clauses)
        out += std::string(",") + (value ? "1" : "0");
    } else {
      out += ",,,";
      for (std::size_t i = 0; i < clause_labels.size(); ++i) out += ",";
    }
    out += "\n";
  }
  return out;
}

std::vector<DiscrepancyRecord> report_discrepancies(const AuditReport& report) {
  std::vector<DiscrepancyRecord> records;
  for (std::size_t i : report.discrepancies) {
    const TheoremVerdict& row = report.rows[i];
    records.push_back({family_name(row.family), row.spec, row.predicate,
                       row.computed});
  }
  return records;
}

std::string discrepancies_to_jsonl(const std::vector<DiscrepancyRecord>& records) {
  std::string out;
  for (const DiscrepancyRecord& record : records) {
    nlohmann::ordered_json j;
    j["family"] = record.family;
    j["spec"] = record.spec;
    j["predicate"] = record.predicate;
    j["computed"] = record.computed;
    out += j.dump() + "\n";
  }
  return out;
}

std::vector<DiscrepancyRecord> parse_discrepancies_jsonl(const std::string& text) {
  std::vector<DiscrepancyRecord> records;
  std::size_t pos = 0;
  while (pos < text.size()) {
    std::size_t eol = text.find('\n', pos);
    if (eol == std::string::npos) eol = text.size();
    std::string line = text.substr(pos, eol - pos);
    pos = eol + 1;
    if (line.empty()) continue;
    nlohmann::json j = nlohmann::json::parse(line);
    records.push_back({j.at("family").get<std::string>(),
                       j.at("spec").get<std::string>(),
                       j.at("predicate").get<bool>(),
                       j.at("computed").get<bool>()});
  }
  return records;
}

}  // namespace ordsup
