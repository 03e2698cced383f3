#include <doctest.h>

#include <set>

#include "ordsup/families.hpp"
#include "ordsup/theorems.hpp"

using namespace ordsup;

namespace {

bool clause(const PredicateResult& r, const std::string& label) {
  for (const auto& [key, value] : r.clauses)
    if (key == label) return value;
  FAIL("missing clause ", label);
  return false;
}

}  // namespace

TEST_CASE("dihedral predicate") {
  CHECK(dihedral_predicate(5).holds);
  CHECK_FALSE(dihedral_predicate(12).holds);
  CHECK_FALSE(dihedral_predicate(16).holds);
  CHECK_FALSE(dihedral_predicate(3).holds);
  CHECK_FALSE(dihedral_predicate(6).holds);
  CHECK(dihedral_predicate(24).holds);
  CHECK_THROWS_AS(dihedral_predicate(2), std::invalid_argument);

  std::set<long long> separable;
  for (long long n = 3; n <= 16; ++n)
    if (dihedral_predicate(n).holds) separable.insert(n);
  CHECK(separable == std::set<long long>{5, 7, 9, 10, 11, 13, 14, 15});
}

TEST_CASE("dicyclic predicate") {
  CHECK_FALSE(dicyclic_predicate(2).holds);
  CHECK(dicyclic_predicate(3).holds);
  CHECK(dicyclic_predicate(12).holds);
  CHECK_FALSE(dicyclic_predicate(16).holds);
  CHECK_THROWS_AS(dicyclic_predicate(1), std::invalid_argument);
}

TEST_CASE("eppo predicate with clauses") {
  SUBCASE("A4: non-normal Sylow 3 plus big Sylow 2") {
    PredicateResult r = eppo_predicate(make_alternating(4));
    CHECK(r.holds);
    CHECK(clause(r, "ii"));
    CHECK(clause(r, "iii"));
    CHECK_FALSE(clause(r, "i"));
    CHECK_FALSE(clause(r, "pq5"));
  }
  SUBCASE("S3: only one condition fires") {
    PredicateResult r = eppo_predicate(make_symmetric(3));
    CHECK_FALSE(r.holds);
    CHECK_FALSE(clause(r, "i"));
    CHECK_FALSE(clause(r, "ii"));  // Sylow 3 of order 3 and normal
    CHECK(clause(r, "iii"));       // Sylow 2 not normal
  }
  SUBCASE("A5: prime 5 plus order-4 Sylow 2") {
    PredicateResult r = eppo_predicate(make_alternating(5));
    CHECK(r.holds);
    CHECK(clause(r, "i"));
    CHECK(clause(r, "iii"));
  }
  SUBCASE("rejects non-EPPO groups") {
    CHECK_THROWS_AS(eppo_predicate(make_cyclic(6)), std::invalid_argument);
  }
}

TEST_CASE("epo predicate") {
  CHECK(epo_predicate(make_alternating(5)).holds);
  CHECK_FALSE(epo_predicate(make_symmetric(3)).holds);
  CHECK_THROWS_AS(epo_predicate(make_symmetric(4)), std::invalid_argument);
}

TEST_CASE("nilpotent predicate with clauses") {
  SUBCASE("Z30: three primes") {
    PredicateResult r = nilpotent_predicate(make_cyclic(30));
    CHECK(r.holds);
    CHECK(clause(r, "three_primes"));
  }
  SUBCASE("Z6: nothing fires") {
    PredicateResult r = nilpotent_predicate(make_cyclic(6));
    CHECK_FALSE(r.holds);
    for (const auto& [label, value] : r.clauses) CHECK_FALSE(value);
  }
  SUBCASE("Z12: exponent 4 but normal, no clause") {
    CHECK_FALSE(nilpotent_predicate(make_cyclic(12)).holds);
  }
  SUBCASE("Z24: Sylow 2 of exponent 8") {
    PredicateResult r = nilpotent_predicate(make_cyclic(24));
    CHECK(r.holds);
    CHECK(clause(r, "vi"));
  }
  SUBCASE("Z36 = Z4 x Z9: clause iv") {
    PredicateResult r = nilpotent_predicate(make_cyclic(36));
    CHECK(r.holds);
    CHECK(clause(r, "iv"));
  }
  SUBCASE("Z18: Sylow 3 of exponent 9") {
    PredicateResult r = nilpotent_predicate(make_cyclic(18));
    CHECK(r.holds);
    CHECK(clause(r, "vii"));
  }
  SUBCASE("Z20: exponent-p Sylow 5 with an order-4 Sylow 2") {
    PredicateResult r = nilpotent_predicate(make_cyclic(20));
    CHECK(r.holds);
    CHECK(clause(r, "iii"));
  }
  SUBCASE("Z50 = Z25 x Z2: Sylow 5 exponent 25") {
    PredicateResult r = nilpotent_predicate(make_cyclic(50));
    CHECK(r.holds);
    CHECK(clause(r, "ii"));
  }
  SUBCASE("clause v is annotated vacuous under nilpotency") {
    PredicateResult r = nilpotent_predicate(make_cyclic(12));
    CHECK(r.vacuous == std::vector<std::string>{"v"});
    CHECK_FALSE(clause(r, "v"));
  }
  SUBCASE("rejects non-nilpotent groups") {
    CHECK_THROWS_AS(nilpotent_predicate(make_symmetric(3)), std::invalid_argument);
  }
}

TEST_CASE("symmetric and alternating predicates") {
  CHECK_FALSE(symmetric_predicate(3).holds);
  CHECK(symmetric_predicate(4).holds);
  CHECK(symmetric_predicate(7).holds);
  CHECK_FALSE(alternating_predicate(3).holds);
  CHECK(alternating_predicate(4).holds);
  CHECK_THROWS_AS(symmetric_predicate(1), std::invalid_argument);
  CHECK_THROWS_AS(alternating_predicate(2), std::invalid_argument);
}

TEST_CASE("range audits agree with the predicates") {
  AuditOptions options;
  SUBCASE("dihedral 3..16") {
    AuditReport report = audit_family(
        TheoremFamily::kDihedral, family_range_specs(TheoremFamily::kDihedral, 3, 16),
        options);
    CHECK(report.rows.size() == 14);
    CHECK(report.discrepancies.empty());
    std::set<long long> computed_true;
    for (const TheoremVerdict& row : report.rows) {
      CHECK(row.agree);
      if (row.computed) {
        long long n = std::stoll(row.params.substr(2));
        computed_true.insert(n);
      }
    }
    CHECK(computed_true == std::set<long long>{5, 7, 9, 10, 11, 13, 14, 15});
  }
  SUBCASE("dicyclic 2..4") {
    AuditReport report = audit_family(
        TheoremFamily::kDicyclic, family_range_specs(TheoremFamily::kDicyclic, 2, 4),
        options);
    REQUIRE(report.rows.size() == 3);
    CHECK_FALSE(report.rows[0].computed);
    CHECK(report.rows[1].computed);
    CHECK_FALSE(report.rows[2].computed);
    CHECK(report.discrepancies.empty());
  }
  SUBCASE("symmetric 3..6 all agree") {
    AuditReport report = audit_family(
        TheoremFamily::kSymmetric,
        family_range_specs(TheoremFamily::kSymmetric, 3, 6), options);
    REQUIRE(report.rows.size() == 4);
    CHECK_FALSE(report.rows[0].computed);
    for (std::size_t i = 1; i < 4; ++i) CHECK(report.rows[i].computed);
    CHECK(report.discrepancies.empty());
  }
  SUBCASE("alternating 3..7 all agree, n=7 over the quotient") {
    AuditReport report = audit_family(
        TheoremFamily::kAlternating,
        family_range_specs(TheoremFamily::kAlternating, 3, 7), options);
    REQUIRE(report.rows.size() == 5);
    CHECK_FALSE(report.rows[0].computed);
    for (std::size_t i = 1; i < 5; ++i) CHECK(report.rows[i].computed);
    CHECK(report.rows[4].path == "quotient");
    CHECK(report.discrepancies.empty());
  }
}

TEST_CASE("clause mappings carry exactly the theorem's condition labels") {
  auto labels = [](const PredicateResult& r) {
    std::vector<std::string> out;
    for (const auto& [label, value] : r.clauses) out.push_back(label);
    return out;
  };
  CHECK(labels(dihedral_predicate(5)) ==
        std::vector<std::string>{"i", "ii", "iii"});
  CHECK(labels(dicyclic_predicate(3)) ==
        std::vector<std::string>{"not_power_of_two"});
  CHECK(labels(eppo_predicate(make_alternating(4))) ==
        std::vector<std::string>{"pq5", "i", "ii", "iii"});
  CHECK(labels(nilpotent_predicate(make_cyclic(12))) ==
        std::vector<std::string>{"three_primes", "i", "ii", "iii", "iv", "v",
                                 "vi", "vii"});
  CHECK(labels(symmetric_predicate(4)) == std::vector<std::string>{"n_ge_4"});
}

TEST_CASE("catalog audits") {
  AuditOptions options;
  SUBCASE("eppo catalog has anchors and no discrepancies") {
    std::vector<std::string> catalog = builtin_catalog(TheoremFamily::kEppo);
    AuditReport report = audit_family(TheoremFamily::kEppo, catalog, options);
    CHECK(report.discrepancies.empty());
    auto row_for = [&](const std::string& spec) -> const TheoremVerdict& {
      for (const TheoremVerdict& row : report.rows)
        if (row.spec == spec) return row;
      FAIL("missing catalog row ", spec);
      return report.rows[0];
    };
    CHECK(row_for("alt:4").computed);        // A4 separable
    CHECK_FALSE(row_for("sym:3").computed);  // S3 not separable
    CHECK(row_for("alt:5").computed);        // A5 separable
    for (const TheoremVerdict& row : report.rows) CHECK(row.status == "ok");
  }
  SUBCASE("epo catalog is the EPO-filtered EPPO catalog") {
    std::vector<std::string> catalog = builtin_catalog(TheoremFamily::kEpo);
    CHECK(!catalog.empty());
    AuditReport report = audit_family(TheoremFamily::kEpo, catalog, options);
    CHECK(report.discrepancies.empty());
    for (const TheoremVerdict& row : report.rows) CHECK(row.status == "ok");
  }
  SUBCASE("hypothesis violations are marked, not fatal") {
    AuditReport report =
        audit_family(TheoremFamily::kEppo, {"cyclic:6", "cyclic:5"}, options);
    CHECK(report.rows[0].status == "hypothesis_failed");
    CHECK(report.rows[1].status == "ok");
    CHECK(report.discrepancies.empty());
  }
}

TEST_CASE("nilpotent catalog audit matches the known discrepancy family") {
  AuditOptions options;
  std::vector<std::string> catalog = builtin_catalog(TheoremFamily::kNilpotent);
  CHECK(catalog.size() > 100);
  AuditReport report = audit_family(TheoremFamily::kNilpotent, catalog, options);
  for (const TheoremVerdict& row : report.rows) CHECK(row.status == "ok");

  auto row_for = [&](const std::string& spec) -> const TheoremVerdict& {
    for (const TheoremVerdict& row : report.rows)
      if (row.spec == spec) return row;
    FAIL("missing catalog row ", spec);
    return report.rows[0];
  };
  CHECK_FALSE(row_for("product:cyclic:2*cyclic:3").computed);  // Z6
  CHECK_FALSE(row_for("product:cyclic:4*cyclic:3").computed);  // Z12
  CHECK(row_for("product:cyclic:8*cyclic:3").computed);        // Z24
  CHECK(row_for("product:product:cyclic:2*cyclic:3*cyclic:5").computed);  // Z30
  CHECK_FALSE(
      row_for("product:product:cyclic:2*cyclic:2*cyclic:3").computed);  // Z2^2 x Z3

  // Every disagreement has a separable graph that the predicate misses, and
  // its Sylow 2-subgroup has exponent 4 but is not cyclic, with Sylow 3 of
  // order exactly 3.
  CHECK(!report.discrepancies.empty());
  for (std::size_t i : report.discrepancies) {
    const TheoremVerdict& row = report.rows[i];
    CHECK(row.computed);
    CHECK_FALSE(row.predicate);
    OrderProfile profile =
        build_order_profile(parse_group_spec(row.spec));
    auto s2 = sylow_facts(profile, profile.total(), 2);
    auto s3 = sylow_facts(profile, profile.total(), 3);
    REQUIRE(s2.has_value());
    REQUIRE(s3.has_value());
    CHECK(s2->exponent == 4);
    CHECK(s2->subgroup_order > 4);  // not cyclic of order 4
    CHECK(s3->subgroup_order == 3);
  }
}

TEST_CASE("audit reports are deterministic across worker counts") {
  std::vector<std::string> specs =
      family_range_specs(TheoremFamily::kDihedral, 3, 24);
  AuditOptions serial;
  serial.jobs = 1;
  AuditOptions parallel;
  parallel.jobs = 8;
  AuditReport a = audit_family(TheoremFamily::kDihedral, specs, serial);
  AuditReport b = audit_family(TheoremFamily::kDihedral, specs, parallel);
  CHECK(report_to_json(a) == report_to_json(b));
  CHECK(report_to_csv(a) == report_to_csv(b));
}

TEST_CASE("report serialization round trip") {
  AuditReport report = audit_family(
      TheoremFamily::kDicyclic, family_range_specs(TheoremFamily::kDicyclic, 2, 6),
      {});
  std::string json = report_to_json(report);
  CHECK(json.find("\"family\": \"dicyclic\"") != std::string::npos);
  std::string csv = report_to_csv(report);
  CHECK(csv.substr(0, 6) == "family");
  CHECK(std::count(csv.begin(), csv.end(), '\n') == 6);  // header + 5 rows

  std::vector<DiscrepancyRecord> records = {
      {"nilpotent", "product:a*b", false, true}};
  std::string jsonl = discrepancies_to_jsonl(records);
  CHECK(parse_discrepancies_jsonl(jsonl) == records);
  CHECK(parse_discrepancies_jsonl("").empty());
}
