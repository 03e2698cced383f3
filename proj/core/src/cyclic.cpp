#include "ordsup/cyclic.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <stdexcept>
#include <utility>

#include <json.hpp>

#include "ordsup/min_vertex_cut.hpp"

namespace ordsup {

namespace {

bool sorted_unique(const VertexSet& vs) {
  return std::is_sorted(vs.begin(), vs.end()) &&
         std::adjacent_find(vs.begin(), vs.end()) == vs.end();
}

}  // namespace

bool verify_certificate(const SimpleGraph& g, const CutsetCertificate& cert) {
  const int n = g.vertex_count();
  for (const VertexSet* part : {&cert.cutset, &cert.witness_a, &cert.witness_b}) {
    if (!sorted_unique(*part)) return false;
    for (int v : *part)
      if (v < 0 || v >= n) return false;
  }
  if (cert.witness_a.empty() || cert.witness_b.empty()) return false;
  Bitset cut = to_bitset(cert.cutset, n);
  Bitset wa = to_bitset(cert.witness_a, n);
  Bitset wb = to_bitset(cert.witness_b, n);
  if (cut.intersects(wa) || cut.intersects(wb) || wa.intersects(wb)) return false;

  Bitset alive(n);
  alive.set_all();
  alive.subtract(cut);
  Bitset comp_a(n), comp_b(n);
  bool found_a = false, found_b = false;
  for (const VertexSet& comp : components_within(g, alive)) {
    Bitset mask = to_bitset(comp, n);
    if (wa.is_subset_of(mask)) {
      comp_a = mask;
      found_a = true;
    }
    if (wb.is_subset_of(mask)) {
      comp_b = mask;
      found_b = true;
    }
  }
  if (!found_a || !found_b) return false;  // a witness straddles components
  if (comp_a == comp_b) return false;
  return edges_within(g, comp_a) >= comp_a.count() &&
         edges_within(g, comp_b) >= comp_b.count();
}

SeparabilityResult is_cyclically_separable(const SimpleGraph& g,
                                           const SearchLimits& limits) {
  const int n = g.vertex_count();
  if (n < 6) return {};            // two disjoint cycles need six vertices
  if (g.is_complete()) return {};  // complete graphs cannot be disconnected

  const Bitset universal = g.universal_vertices();
  Bitset all(n);
  all.set_all();

  SeparabilityResult result;
  enumerate_induced_cycles(g, limits.cycle_limit, [&](const VertexSet& cycle) {
    Bitset cycle_mask = to_bitset(cycle, n);
    // A cycle touching a universal vertex dominates the whole graph.
    if (cycle_mask.intersects(universal)) return true;
    Bitset closed = cycle_mask;
    for (int v : cycle) closed |= g.neighbors(v);
    Bitset rest = all;
    rest.subtract(closed);
    if (rest.none()) return true;
    auto cyclic_comp = find_cyclic_component(g, rest);
    if (!cyclic_comp) return true;
    auto partner = first_induced_cycle(g, *cyclic_comp);
    if (!partner) throw std::logic_error("cyclic component without chordless cycle");
    CutsetCertificate cert;
    Bitset cut = closed;
    cut.subtract(cycle_mask);
    cert.cutset = cut.to_vector();
    cert.witness_a = cycle;
    cert.witness_b = *partner;
    if (!verify_certificate(g, cert))
      throw std::logic_error("separability produced an invalid certificate");
    result.separable = true;
    result.certificate = std::move(cert);
    return false;
  });
  return result;
}

CkappaResult cyclic_vertex_connectivity(const SimpleGraph& g,
                                        const SearchLimits& limits) {
  CkappaResult result;
  if (!is_cyclically_separable(g, limits).separable) return result;

  const int n = g.vertex_count();
  const Bitset universal = g.universal_vertices();

  // Cycles touching a universal vertex can never be one side of a valid
  // pair; they are skipped up front.
  struct Candidate {
    VertexSet cycle;
    Bitset mask;
    Bitset closed;  // N[cycle]
  };
  std::vector<Candidate> candidates;
  enumerate_induced_cycles(g, limits.cycle_limit, [&](const VertexSet& cycle) {
    Bitset mask = to_bitset(cycle, n);
    if (mask.intersects(universal)) return true;
    Bitset closed = mask;
    for (int v : cycle) closed |= g.neighbors(v);
    candidates.push_back({cycle, std::move(mask), std::move(closed)});
    return true;
  });

  // Tie-break order for the returned certificate: smallest cutset, then
  // lexicographically least cutset, then least witness pair.
  auto better = [](const CutsetCertificate& a, const CutsetCertificate& b) {
    if (a.cutset.size() != b.cutset.size())
      return a.cutset.size() < b.cutset.size();
    if (a.cutset != b.cutset) return a.cutset < b.cutset;
    if (a.witness_a != b.witness_a) return a.witness_a < b.witness_a;
    return a.witness_b < b.witness_b;
  };

  std::optional<CutsetCertificate> best;
  for (std::size_t i = 0; i < candidates.size(); ++i) {
    for (std::size_t j = i + 1; j < candidates.size(); ++j) {
      if (candidates[i].closed.intersects(candidates[j].mask)) continue;
      MinVertexCut cut =
          min_vertex_cut(g, candidates[i].cycle, candidates[j].cycle);
      if (cut.inseparable)
        throw std::logic_error("non-adjacent cycles reported inseparable");
      CutsetCertificate cert;
      cert.cutset = cut.cut;
      cert.witness_a = candidates[i].cycle;
      cert.witness_b = candidates[j].cycle;
      if (cert.witness_b < cert.witness_a)
        std::swap(cert.witness_a, cert.witness_b);
      if (!verify_certificate(g, cert))
        throw std::logic_error("pair search produced an invalid certificate");
      if (!best || better(cert, *best)) best = std::move(cert);
    }
  }
  if (!best) throw std::logic_error("separable graph but no cycle pair found");
  result.value = static_cast<int>(best->cutset.size());
  result.certificate = std::move(best);
  return result;
}

namespace {

// Word-mask subset scan for graphs of at most 64 vertices: returns the
// masks of up to two cyclic components of g - cutset, or nothing when
// fewer than two exist.
std::optional<std::pair<std::uint64_t, std::uint64_t>> two_cyclic_components(
    const std::vector<std::uint64_t>& adj, std::uint64_t alive) {
  std::uint64_t first_found = 0;
  int found = 0;
  std::uint64_t unseen = alive;
  while (unseen) {
    std::uint64_t comp = unseen & (~unseen + 1);  // lowest unseen vertex
    std::uint64_t frontier = comp;
    while (frontier) {
      std::uint64_t next = 0;
      std::uint64_t f = frontier;
      while (f) {
        int v = std::countr_zero(f);
        f &= f - 1;
        next |= adj[v];
      }
      next &= alive & ~comp;
      comp |= next;
      frontier = next;
    }
    unseen &= ~comp;
    int vertices = std::popcount(comp);
    int twice_edges = 0;
    std::uint64_t c = comp;
    while (c) {
      int v = std::countr_zero(c);
      c &= c - 1;
      twice_edges += std::popcount(adj[v] & comp);
    }
    if (twice_edges / 2 >= vertices) {
      if (found == 0) {
        first_found = comp;
        found = 1;
      } else {
        return std::make_pair(first_found, comp);
      }
    }
  }
  return std::nullopt;
}

}  // namespace

BruteForceCkappa brute_force_ckappa(const SimpleGraph& g, int max_cut_size) {
  const int n = g.vertex_count();
  BruteForceCkappa result;
  const int conclusive = n - 6;  // larger cutsets cannot leave two cycles
  const int bound = std::min(max_cut_size, conclusive);
  result.searched_up_to = std::max(bound, -1);
  if (n > 64)
    throw std::invalid_argument("brute_force_ckappa: graph too large for the oracle");

  std::vector<std::uint64_t> adj(n, 0);
  for (int v = 0; v < n; ++v)
    for (int u = g.neighbors(v).first(); u != -1; u = g.neighbors(v).next(u))
      adj[v] |= std::uint64_t{1} << u;
  const std::uint64_t all =
      n == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1;

  std::vector<int> subset;
  for (int k = 0; k <= bound; ++k) {
    // k-subsets in lexicographic order.
    subset.resize(k);
    std::uint64_t cut_mask = 0;
    for (int i = 0; i < k; ++i) {
      subset[i] = i;
      cut_mask |= std::uint64_t{1} << i;
    }
    while (true) {
      if (auto comps = two_cyclic_components(adj, all & ~cut_mask)) {
        CutsetCertificate cert;
        cert.cutset = subset;
        for (int v = 0; v < n; ++v) {
          if (comps->first >> v & 1) cert.witness_a.push_back(v);
          if (comps->second >> v & 1) cert.witness_b.push_back(v);
        }
        if (!verify_certificate(g, cert))
          throw std::logic_error("oracle produced an invalid certificate");
        result.status = BruteStatus::kFinite;
        result.value = k;
        result.certificate = std::move(cert);
        return result;
      }
      // next k-combination
      int i = k - 1;
      while (i >= 0 && subset[i] == n - k + i) --i;
      if (i < 0) break;
      cut_mask = 0;
      ++subset[i];
      for (int j = i + 1; j < k; ++j) subset[j] = subset[j - 1] + 1;
      for (int j = 0; j < k; ++j) cut_mask |= std::uint64_t{1} << subset[j];
    }
  }
  result.status = max_cut_size >= conclusive ? BruteStatus::kInfinite
                                             : BruteStatus::kUnknownAboveBound;
  return result;
}

namespace {

// Connected node sets whose blow-up certainly contains a cycle, enumerated
// smallest-first: heavy single nodes, edges with a weight-2 endpoint,
// chordless cycles of the quotient itself.
std::vector<std::vector<int>> quotient_cyclic_cores(const QuotientOrderGraph& q,
                                                    const SimpleGraph& qg) {
  std::vector<std::vector<int>> cores;
  for (int i = 0; i < q.node_count(); ++i)
    if (q.weight_at(i) >= 3) cores.push_back({i});
  for (int i = 0; i < q.node_count(); ++i) {
    for (int j = i + 1; j < q.node_count(); ++j) {
      if (!q.adjacent(i, j)) continue;
      if (q.weight_at(i) >= 2 || q.weight_at(j) >= 2) cores.push_back({i, j});
    }
  }
  enumerate_induced_cycles(qg, kDefaultCycleLimit, [&](const VertexSet& cycle) {
    cores.push_back(cycle);
    return true;
  });
  return cores;
}

}  // namespace

QuotientSeparability quotient_is_cyclically_separable(const QuotientOrderGraph& q) {
  QuotientSeparability result;
  const int k = q.node_count();
  SimpleGraph qg = q.as_graph();
  Bitset all(k);
  all.set_all();

  for (const std::vector<int>& core : quotient_cyclic_cores(q, qg)) {
    Bitset closed = to_bitset(core, k);
    for (int i : core) closed |= qg.neighbors(i);
    Bitset rest = all;
    rest.subtract(closed);
    if (rest.none()) continue;
    for (const VertexSet& comp : components_within(qg, rest)) {
      if (!blown_up_component_has_cycle(q, comp)) continue;
      result.separable = true;
      for (int i : core) result.witness_a_orders.push_back(q.order_at(i));
      std::sort(result.witness_a_orders.begin(), result.witness_a_orders.end());
      for (int i : comp) result.witness_b_orders.push_back(q.order_at(i));
      return result;
    }
  }
  return result;
}

CutsetCertificate certificate_from_quotient_witness(
    const SimpleGraph& supergraph, const std::vector<long long>& vertex_orders,
    const QuotientSeparability& witness) {
  CutsetCertificate cert;
  auto side_of = [&](long long order) {
    if (std::binary_search(witness.witness_a_orders.begin(),
                           witness.witness_a_orders.end(), order))
      return 0;
    if (std::binary_search(witness.witness_b_orders.begin(),
                           witness.witness_b_orders.end(), order))
      return 1;
    return 2;
  };
  for (int v = 0; v < supergraph.vertex_count(); ++v) {
    switch (side_of(vertex_orders[v])) {
      case 0: cert.witness_a.push_back(v); break;
      case 1: cert.witness_b.push_back(v); break;
      default: cert.cutset.push_back(v); break;
    }
  }
  return cert;
}

namespace {

nlohmann::ordered_json labels_json(const SimpleGraph& g, const VertexSet& vs) {
  auto arr = nlohmann::ordered_json::array();
  for (int v : vs) arr.push_back(g.label(v));
  return arr;
}

}  // namespace

std::string certificate_to_json(const SimpleGraph& g,
                                const CutsetCertificate& cert) {
  nlohmann::ordered_json j;
  j["cutset"] = labels_json(g, cert.cutset);
  j["witness_a"] = labels_json(g, cert.witness_a);
  j["witness_b"] = labels_json(g, cert.witness_b);
  j["value"] = cert.cutset.size();
  return j.dump(2) + "\n";
}

std::string ckappa_to_json(const SimpleGraph& g, const CkappaResult& result) {
  nlohmann::ordered_json j;
  if (result.infinite()) {
    j["value"] = "infinite";
  } else {
    const CutsetCertificate& cert = *result.certificate;
    j["cutset"] = labels_json(g, cert.cutset);
    j["witness_a"] = labels_json(g, cert.witness_a);
    j["witness_b"] = labels_json(g, cert.witness_b);
    j["value"] = *result.value;
  }
  return j.dump(2) + "\n";
}

}  // namespace ordsup
