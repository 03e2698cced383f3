#pragma once

// Test-only oracles, independent of the library's computation paths.

#include <algorithm>
#include <random>
#include <vector>

#include "ordsup/graph.hpp"
#include "ordsup/group.hpp"

namespace ordsup::testing {

// Element orders by repeated multiplication. Walks each cyclic subgroup
// once: x^j has order k/gcd(j,k) when x has order k.
inline std::vector<long long> orders_by_iteration(const Group& g) {
  const int n = g.order();
  std::vector<long long> orders(n, 0);
  orders[0] = 1;
  for (int x = 0; x < n; ++x) {
    if (orders[x] != 0) continue;
    std::vector<int> powers;  // x^1, x^2, ...
    int y = x;
    while (y != 0) {
      powers.push_back(y);
      y = g.multiply(y, x);
    }
    const long long k = static_cast<long long>(powers.size()) + 1;
    for (std::size_t j = 1; j <= powers.size(); ++j) {
      long long order = k / std::gcd(static_cast<long long>(j), k);
      orders[powers[j - 1]] = order;
    }
  }
  return orders;
}

// All vertex subsets that induce a cycle graph (connected, every degree 2).
inline std::vector<VertexSet> brute_force_induced_cycles(const SimpleGraph& g) {
  const int n = g.vertex_count();
  std::vector<VertexSet> cycles;
  for (unsigned mask = 0; mask < (1u << n); ++mask) {
    VertexSet subset;
    for (int v = 0; v < n; ++v)
      if (mask & (1u << v)) subset.push_back(v);
    if (subset.size() < 3) continue;
    bool all_degree_two = true;
    long long edges = 0;
    for (int u : subset) {
      int deg = 0;
      for (int v : subset)
        if (u != v && g.adjacent(u, v)) ++deg;
      if (deg != 2) all_degree_two = false;
      edges += deg;
    }
    if (!all_degree_two || edges / 2 != static_cast<long long>(subset.size()))
      continue;
    Bitset bs = to_bitset(subset, n);
    if (components_within(g, bs).size() == 1) cycles.push_back(subset);
  }
  std::sort(cycles.begin(), cycles.end());
  return cycles;
}

// Minimum vertex cut between a and b by subset enumeration.
// Returns -1 when inseparable (shared vertex or edge).
inline int brute_force_min_vertex_cut(const SimpleGraph& g, const VertexSet& a,
                                      const VertexSet& b) {
  const int n = g.vertex_count();
  Bitset in_a = to_bitset(a, n), in_b = to_bitset(b, n);
  if (in_a.intersects(in_b)) return -1;
  for (int u : a)
    if (g.neighbors(u).intersects(in_b)) return -1;
  std::vector<int> free_vertices;
  for (int v = 0; v < n; ++v)
    if (!in_a.test(v) && !in_b.test(v)) free_vertices.push_back(v);
  const int f = static_cast<int>(free_vertices.size());
  for (int k = 0; k <= f; ++k) {
    for (unsigned mask = 0; mask < (1u << f); ++mask) {
      if (std::popcount(mask) != k) continue;
      Bitset alive(n);
      alive.set_all();
      for (int i = 0; i < f; ++i)
        if (mask & (1u << i)) alive.reset(free_vertices[i]);
      bool separated = true;
      for (const VertexSet& comp : components_within(g, alive)) {
        Bitset cm = to_bitset(comp, n);
        if (cm.intersects(in_a) && cm.intersects(in_b)) separated = false;
      }
      if (separated) return k;
    }
  }
  return f;
}

// The seeded random-graph corpus shared by property and acceptance tests:
// 6..10 vertices, edge probability cycling through {0.2, 0.4, 0.6}.
inline std::vector<SimpleGraph> random_graph_corpus(int count,
                                                    unsigned seed = 0x0cafe5) {
  std::mt19937 rng(seed);
  std::vector<SimpleGraph> graphs;
  const int probabilities[] = {2, 4, 6};  // tenths
  for (int i = 0; i < count; ++i) {
    int n = 6 + static_cast<int>(rng() % 5);
    int p = probabilities[i % 3];
    SimpleGraph g(n);
    for (int u = 0; u < n; ++u)
      for (int v = u + 1; v < n; ++v)
        if (rng() % 10 < static_cast<unsigned>(p)) g.add_edge(u, v);
    graphs.push_back(std::move(g));
  }
  return graphs;
}

}  // namespace ordsup::testing
