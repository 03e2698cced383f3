// ordsup: order supergraphs of finite groups, cyclic separability, exact
// cyclic vertex connectivity, and predicate-vs-computation audits.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "ordsup/analysis.hpp"
#include "ordsup/config.hpp"
#include "ordsup/cyclic.hpp"
#include "ordsup/errors.hpp"
#include "ordsup/group_spec.hpp"
#include "ordsup/numbers.hpp"
#include "ordsup/supergraph.hpp"
#include "ordsup/theorems.hpp"

namespace {

using namespace ordsup;

constexpr int kExitSeparable = 0;
constexpr int kExitNegative = 1;
constexpr int kExitUsage = 2;
constexpr int kExitCap = 3;
constexpr int kExitInternal = 4;

long long element_cap_from_env() {
  const char* env = std::getenv("ORDSUP_ELEMENT_CAP");
  if (!env) return kDefaultElementCap;
  try {
    long long cap = std::stoll(env);
    if (cap < 1) throw std::invalid_argument("non-positive");
    return cap;
  } catch (const std::exception&) {
    throw ParseError("ORDSUP_ELEMENT_CAP is not a positive integer", 0);
  }
}

void write_output(const std::string& path, const std::string& content) {
  if (path == "-") {
    std::cout << content;
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot open output file: " + path);
  out << content;
}

std::string profile_json(const OrderProfile& profile) {
  nlohmann::ordered_json j = nlohmann::ordered_json::object();
  for (const auto& [d, m] : profile.counts()) j[std::to_string(d)] = m;
  return j.dump();
}

int cmd_group(const std::string& spec_text, bool as_json, long long cap) {
  GroupSpec spec = parse_group_spec(spec_text);
  Group g = build_group(spec, cap);
  OrderProfile profile = element_orders(g);
  bool eppo = is_eppo(profile);
  bool epo = is_epo(profile);
  bool nilpotent = is_nilpotent(g);

  if (as_json) {
    nlohmann::ordered_json j;
    j["name"] = g.name();
    j["spec"] = spec_text;
    j["order"] = g.order();
    j["profile"] = nlohmann::ordered_json::parse(profile_json(profile));
    j["exponent"] = profile.exponent();
    j["eppo"] = eppo;
    j["epo"] = epo;
    j["nilpotent"] = nilpotent;
    auto sylow = nlohmann::ordered_json::object();
    for (long long p : prime_divisors(g.order())) {
      auto facts = sylow_facts(profile, g.order(), p);
      sylow[std::to_string(p)] = {{"order", facts->subgroup_order},
                                  {"exponent", facts->exponent},
                                  {"element_count", facts->element_count},
                                  {"normal", facts->normal}};
    }
    j["sylow"] = std::move(sylow);
    std::cout << j.dump(2) << "\n";
    return kExitSeparable;
  }

  std::cout << "name:      " << g.name() << "\n";
  std::cout << "order:     " << g.order() << "\n";
  std::cout << "profile:   ";
  bool first = true;
  for (const auto& [d, m] : profile.counts()) {
    if (!first) std::cout << ", ";
    std::cout << d << ":" << m;
    first = false;
  }
  std::cout << "\n";
  std::cout << "exponent:  " << profile.exponent() << "\n";
  std::cout << "eppo:      " << (eppo ? "yes" : "no") << "\n";
  std::cout << "epo:       " << (epo ? "yes" : "no") << "\n";
  std::cout << "nilpotent: " << (nilpotent ? "yes" : "no") << "\n";
  for (long long p : prime_divisors(g.order())) {
    auto facts = sylow_facts(profile, g.order(), p);
    std::cout << "sylow " << p << ":   order " << facts->subgroup_order
              << ", exponent " << facts->exponent << ", p-elements "
              << facts->element_count << ", normal "
              << (facts->normal ? "yes" : "no") << "\n";
  }
  return kExitSeparable;
}

int cmd_graph(const std::string& spec_text, const std::string& dot_path,
              const std::string& json_path, bool quotient, long long cap) {
  GroupSpec spec = parse_group_spec(spec_text);
  if (dot_path.empty() && json_path.empty())
    throw ParseError("graph: need --dot PATH and/or --json PATH", 0);
  if (quotient) {
    OrderProfile profile = build_order_profile(spec, cap);
    QuotientOrderGraph q = order_quotient_graph(profile);
    if (!dot_path.empty()) write_output(dot_path, quotient_to_dot(q));
    if (!json_path.empty()) write_output(json_path, quotient_to_json(q));
    return kExitSeparable;
  }
  Group g = build_group(spec, cap);
  SimpleGraph sg = order_supergraph(g);
  if (!dot_path.empty()) write_output(dot_path, to_dot(sg));
  if (!json_path.empty()) write_output(json_path, to_adjacency_json(sg));
  return kExitSeparable;
}

int cmd_analyze_separable(const std::string& spec_text, bool as_json,
                          const AnalysisOptions& options) {
  GroupSpec spec = parse_group_spec(spec_text);
  SeparabilityAnalysis analysis = analyze_separability(spec, options);

  if (as_json) {
    nlohmann::ordered_json j;
    j["spec"] = spec_text;
    j["order"] = analysis.group_order;
    j["separable"] = analysis.separable;
    j["path"] = analysis.path;
    if (analysis.separable) {
      nlohmann::ordered_json cert;
      if (analysis.cutset_labels) {
        cert["kind"] = "direct";
        cert["cutset"] = *analysis.cutset_labels;
        cert["witness_a"] = *analysis.witness_a_labels;
        cert["witness_b"] = *analysis.witness_b_labels;
        cert["value"] = analysis.cutset_labels->size();
      } else {
        cert["kind"] = "quotient";
      }
      cert["witness_a_orders"] = analysis.quotient.witness_a_orders;
      cert["witness_b_orders"] = analysis.quotient.witness_b_orders;
      j["certificate"] = std::move(cert);
    } else {
      j["certificate"] = nullptr;
    }
    std::cout << j.dump(2) << "\n";
    return analysis.separable ? kExitSeparable : kExitNegative;
  }

  if (!analysis.separable) {
    std::cout << "not cyclically separable (" << analysis.path << ")\n";
    return kExitNegative;
  }
  std::cout << "cyclically separable (" << analysis.path << ")\n";
  if (analysis.cutset_labels) {
    auto print_set = [](const char* name, const std::vector<std::string>& v) {
      std::cout << name << " {";
      for (std::size_t i = 0; i < v.size(); ++i)
        std::cout << (i ? ", " : "") << v[i];
      std::cout << "}\n";
    };
    print_set("cutset:   ", *analysis.cutset_labels);
    print_set("witness a:", *analysis.witness_a_labels);
    print_set("witness b:", *analysis.witness_b_labels);
  } else {
    auto print_orders = [](const char* name, const std::vector<long long>& v) {
      std::cout << name << " orders {";
      for (std::size_t i = 0; i < v.size(); ++i)
        std::cout << (i ? ", " : "") << v[i];
      std::cout << "}\n";
    };
    print_orders("witness a:", analysis.quotient.witness_a_orders);
    print_orders("witness b:", analysis.quotient.witness_b_orders);
  }
  return kExitSeparable;
}

int cmd_analyze_ckappa(const std::string& spec_text, bool as_json,
                       const AnalysisOptions& options) {
  GroupSpec spec = parse_group_spec(spec_text);
  long long order = spec_group_order(spec, options.element_cap);
  if (order > options.direct_threshold)
    throw CapExceededError(
        "ckappa needs the direct graph; order " + std::to_string(order) +
        " exceeds the direct threshold " +
        std::to_string(options.direct_threshold));
  Group g = build_group(spec, options.element_cap);
  SimpleGraph sg = order_supergraph(g);
  CkappaResult result =
      cyclic_vertex_connectivity(sg, {.cycle_limit = options.cycle_limit});
  if (as_json) {
    std::cout << ckappa_to_json(sg, result);
  } else if (result.infinite()) {
    std::cout << "cyclic vertex connectivity: infinite\n";
  } else {
    std::cout << "cyclic vertex connectivity: " << *result.value << "\n";
    std::cout << "cutset: {";
    const VertexSet& cut = result.certificate->cutset;
    for (std::size_t i = 0; i < cut.size(); ++i)
      std::cout << (i ? ", " : "") << sg.label(cut[i]);
    std::cout << "}\n";
  }
  return result.infinite() ? kExitNegative : kExitSeparable;
}

int cmd_audit(const std::string& family_text, std::optional<long long> from,
              std::optional<long long> to, bool catalog,
              const std::string& format, const std::string& out_path,
              const std::string& ledger_path, int jobs,
              const AnalysisOptions& analysis_options) {
  auto family = family_from_name(family_text);
  if (!family)
    throw ParseError("unknown audit family: " + family_text, 0);

  std::vector<std::string> specs;
  if (catalog) {
    specs = builtin_catalog(*family);
  } else {
    if (!from || !to)
      throw ParseError("audit: need --from and --to, or --catalog", 0);
    specs = family_range_specs(*family, *from, *to);
  }

  AuditOptions options;
  options.analysis = analysis_options;
  options.jobs = jobs;
  AuditReport report = audit_family(*family, specs, options);

  write_output(out_path,
               format == "csv" ? report_to_csv(report) : report_to_json(report));

  std::vector<DiscrepancyRecord> found = report_discrepancies(report);
  std::vector<DiscrepancyRecord> known;
  if (!ledger_path.empty()) {
    std::ifstream in(ledger_path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot read ledger: " + ledger_path);
    std::stringstream buffer;
    buffer << in.rdbuf();
    for (DiscrepancyRecord& record : parse_discrepancies_jsonl(buffer.str()))
      known.push_back(std::move(record));
  }
  std::vector<DiscrepancyRecord> known_for_family;
  for (const DiscrepancyRecord& record : known)
    if (record.family == family_name(*family)) known_for_family.push_back(record);

  std::cerr << "audit " << family_name(*family) << ": " << report.rows.size()
            << " rows, " << found.size() << " disagreement(s), "
            << known_for_family.size() << " known\n";
  if (found == known_for_family) return kExitSeparable;
  std::cerr << "discrepancies do not match the ledger\n";
  return kExitNegative;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"order supergraph toolkit"};
  app.require_subcommand(1);

  std::string spec_text;
  bool as_json = false;

  CLI::App* group_cmd = app.add_subcommand("group", "inspect a finite group");
  group_cmd->add_option("spec", spec_text, "group spec, e.g. dihedral:5")
      ->required();
  group_cmd->add_flag("--json", as_json, "JSON output");

  std::string dot_path, json_path;
  bool quotient = false;
  CLI::App* graph_cmd =
      app.add_subcommand("graph", "export the order supergraph");
  graph_cmd->add_option("spec", spec_text, "group spec")->required();
  graph_cmd->add_option("--dot", dot_path, "write DOT to PATH ('-' = stdout)");
  graph_cmd->add_option("--json", json_path, "write JSON to PATH");
  graph_cmd->add_flag("--quotient", quotient,
                      "export the divisibility quotient instead");

  std::string mode;
  CLI::App* analyze_cmd =
      app.add_subcommand("analyze", "separability / cyclic connectivity");
  analyze_cmd->add_option("mode", mode, "separable | ckappa")
      ->required()
      ->check(CLI::IsMember({"separable", "ckappa"}));
  analyze_cmd->add_option("spec", spec_text, "group spec")->required();
  analyze_cmd->add_flag("--json", as_json, "JSON output");

  std::string family_text, format = "json", out_path = "-", ledger_path;
  std::optional<long long> from, to;
  bool catalog = false;
  int jobs = 1;
  CLI::App* audit_cmd =
      app.add_subcommand("audit", "audit a characterization predicate");
  audit_cmd->add_option("family", family_text,
                        "dihedral|dicyclic|eppo|epo|nilpotent|symmetric|alternating")
      ->required();
  audit_cmd->add_option("--from", from, "first parameter of the range");
  audit_cmd->add_option("--to", to, "last parameter of the range");
  audit_cmd->add_flag("--catalog", catalog, "audit the built-in catalog");
  audit_cmd->add_option("--format", format, "json | csv")
      ->check(CLI::IsMember({"json", "csv"}));
  audit_cmd->add_option("--out", out_path, "report path ('-' = stdout)");
  audit_cmd->add_option("--ledger", ledger_path,
                        "known-discrepancies JSONL to compare against");
  audit_cmd->add_option("--jobs", jobs, "worker threads")
      ->check(CLI::PositiveNumber);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_name() == "CallForHelp" || e.get_name() == "CallForAllHelp") {
      app.exit(e);
      return 0;
    }
    std::cerr << e.what() << "\n";
    return kExitUsage;
  }

  try {
    AnalysisOptions analysis_options;
    analysis_options.element_cap = element_cap_from_env();
    if (group_cmd->parsed())
      return cmd_group(spec_text, as_json, analysis_options.element_cap);
    if (graph_cmd->parsed())
      return cmd_graph(spec_text, dot_path, json_path, quotient,
                       analysis_options.element_cap);
    if (analyze_cmd->parsed()) {
      return mode == "separable"
                 ? cmd_analyze_separable(spec_text, as_json, analysis_options)
                 : cmd_analyze_ckappa(spec_text, as_json, analysis_options);
    }
    if (audit_cmd->parsed())
      return cmd_audit(family_text, from, to, catalog, format, out_path,
                       ledger_path, jobs, analysis_options);
    std::cerr << "no subcommand\n";
    return kExitUsage;
  } catch (const ParseError& e) {
    std::cerr << "parse error at byte " << e.offset() << ": " << e.what()
              << "\n";
    return kExitUsage;
  } catch (const std::invalid_argument& e) {
    std::cerr << "invalid argument: " << e.what() << "\n";
    return kExitUsage;
  } catch (const CapExceededError& e) {
    std::cerr << "resource cap: " << e.what() << "\n";
    return kExitCap;
  } catch (const CycleLimitError& e) {
    std::cerr << "resource cap: " << e.what() << "\n";
    return kExitCap;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInternal;
  }
}
