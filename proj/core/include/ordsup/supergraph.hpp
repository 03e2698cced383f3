#pragma once

#include <string>
#include <vector>

#include "ordsup/graph.hpp"
#include "ordsup/group.hpp"

namespace ordsup {

// Weighted divisibility graph on the distinct element orders of a group:
// nodes d with weight m(d), d1 ~ d2 iff d1 != d2 and one divides the other.
// Compressed representation of the order supergraph.
class QuotientOrderGraph {
 public:
  static QuotientOrderGraph from_profile(const OrderProfile& profile);

  int node_count() const { return static_cast<int>(orders_.size()); }
  const std::vector<long long>& orders() const { return orders_; }
  long long order_at(int i) const { return orders_[i]; }
  long long weight_at(int i) const { return weights_[i]; }
  long long weight_of(long long order) const;
  bool adjacent(int i, int j) const;
  long long total_weight() const;

  // Plain graph over the node indices, labeled by order values.
  SimpleGraph as_graph() const;

 private:
  std::vector<long long> orders_;   // ascending
  std::vector<long long> weights_;  // aligned with orders_
};

// The order supergraph S(G): vertices are elements, x ~ y iff the order of
// one divides the order of the other. Vertex labels are element labels.
SimpleGraph order_supergraph(const Group& g, int max_vertices = 20000);

QuotientOrderGraph order_quotient_graph(const OrderProfile& profile);

struct ExpandedGraph {
  SimpleGraph graph;
  std::vector<long long> vertex_orders;  // class key per vertex
};

// Blow-up: node d becomes a clique of m(d) vertices, adjacent nodes become
// complete bipartite. Isomorphic to the order supergraph of any group with
// the same profile.
ExpandedGraph expand(const QuotientOrderGraph& q, long long max_vertices = 20000);

// Whether the blow-up of a connected component of the quotient (given as a
// set of node indices) contains a cycle: some node of weight >= 3, or an
// internal edge with an endpoint of weight >= 2, or a plain cycle.
bool blown_up_component_has_cycle(const QuotientOrderGraph& q,
                                  const std::vector<int>& component_nodes);

// Canonical form of a graph whose vertices are partitioned into classes by
// key: classes must be cliques and pairwise completely adjacent or
// non-adjacent (throws std::logic_error otherwise). Two class-blowup graphs
// are isomorphic iff their signatures are equal.
struct ClassSignature {
  std::vector<std::pair<long long, long long>> classes;      // (key, size)
  std::vector<std::pair<long long, long long>> class_edges;  // key1 < key2
  bool operator==(const ClassSignature&) const = default;
};

ClassSignature class_signature(const SimpleGraph& g,
                               const std::vector<long long>& vertex_keys);

// {"orders": [...], "weights": [...], "edges": [[d1,d2],...]}.
std::string quotient_to_json(const QuotientOrderGraph& q);

std::string quotient_to_dot(const QuotientOrderGraph& q);

}  // namespace ordsup
