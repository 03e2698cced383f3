#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "ordsup/config.hpp"

namespace ordsup {

// Fixed-size bit vector sized to a graph's vertex count.
class Bitset {
 public:
  Bitset() = default;
  explicit Bitset(int bits) : bits_(bits), words_((bits + 63) / 64, 0) {}

  int size() const { return bits_; }
  bool test(int i) const { return (words_[i >> 6] >> (i & 63)) & 1; }
  void set(int i) { words_[i >> 6] |= std::uint64_t{1} << (i & 63); }
  void reset(int i) { words_[i >> 6] &= ~(std::uint64_t{1} << (i & 63)); }
  void set_all();
  void clear() { std::fill(words_.begin(), words_.end(), 0); }

  int count() const;
  bool any() const;
  bool none() const { return !any(); }
  int first() const;          // lowest set bit, -1 if none
  int next(int after) const;  // lowest set bit > after, -1 if none

  Bitset& operator|=(const Bitset& other);
  Bitset& operator&=(const Bitset& other);
  Bitset& subtract(const Bitset& other);  // this &= ~other
  bool intersects(const Bitset& other) const;
  bool is_subset_of(const Bitset& other) const;

  std::vector<int> to_vector() const;
  const std::vector<std::uint64_t>& words() const { return words_; }

  bool operator==(const Bitset&) const = default;

 private:
  int bits_ = 0;
  std::vector<std::uint64_t> words_;
};

// Sorted duplicate-free vertex indices.
using VertexSet = std::vector<int>;

Bitset to_bitset(const VertexSet& vs, int n);

// Undirected simple graph on {0..n-1}, adjacency as bitset rows.
// Logically immutable once populated.
class SimpleGraph {
 public:
  explicit SimpleGraph(int n);
  SimpleGraph(int n, std::vector<std::string> labels);

  int vertex_count() const { return n_; }
  long long edge_count() const { return edge_count_; }
  void add_edge(int u, int v);
  bool adjacent(int u, int v) const { return adj_[u].test(v); }
  const Bitset& neighbors(int v) const { return adj_[v]; }
  int degree(int v) const { return adj_[v].count(); }
  std::vector<std::pair<int, int>> edges() const;  // u < v, sorted

  bool is_complete() const;
  Bitset universal_vertices() const;  // vertices adjacent to all others

  std::string label(int v) const;
  void set_labels(std::vector<std::string> labels);
  std::vector<std::string> labels_of(const VertexSet& vs) const;

 private:
  int n_ = 0;
  long long edge_count_ = 0;
  std::vector<Bitset> adj_;
  std::vector<std::string> labels_;  // empty => numeric labels
};

// Connected components, ordered by least vertex, vertices ascending.
std::vector<VertexSet> components(const SimpleGraph& g);

// Components of the subgraph induced by `alive`.
std::vector<VertexSet> components_within(const SimpleGraph& g,
                                         const Bitset& alive);

// True iff the component has at least as many internal edges as vertices
// (a connected graph contains a cycle iff it is not a tree). Throws
// std::invalid_argument if `component` is not a connected component of g.
bool component_contains_cycle(const SimpleGraph& g, const VertexSet& component);

// Edge count of the subgraph induced by `mask`.
long long edges_within(const SimpleGraph& g, const Bitset& mask);

// First component (by least vertex) of g[alive] that contains a cycle.
std::optional<Bitset> find_cyclic_component(const SimpleGraph& g,
                                            const Bitset& alive);

// Streams the vertex sets of the chordless cycles (length >= 3) of
// g[allowed], each exactly once, in a fixed DFS order. The sink returns
// false to stop early. Returns false if stopped by the sink. Throws
// CycleLimitError once more than `limit` cycles would be emitted.
bool enumerate_induced_cycles(const SimpleGraph& g, long long limit,
                              const std::function<bool(const VertexSet&)>& sink);
bool enumerate_induced_cycles(const SimpleGraph& g, const Bitset& allowed,
                              long long limit,
                              const std::function<bool(const VertexSet&)>& sink);

std::vector<VertexSet> collect_induced_cycles(
    const SimpleGraph& g, long long limit = kDefaultCycleLimit);

// First chordless cycle of g[allowed] in enumeration order, if any.
std::optional<VertexSet> first_induced_cycle(const SimpleGraph& g,
                                             const Bitset& allowed);

// DOT text, stable vertex and edge order, labels preserved.
std::string to_dot(const SimpleGraph& g);

// {"n": int, "edges": [[u,v],...], "labels": [...]}.
std::string to_adjacency_json(const SimpleGraph& g);

}  // namespace ordsup
