#include "ordsup/supergraph.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

#include <json.hpp>

#include "ordsup/errors.hpp"

namespace ordsup {

QuotientOrderGraph QuotientOrderGraph::from_profile(const OrderProfile& profile) {
  QuotientOrderGraph q;
  for (const auto& [d, m] : profile.counts()) {
    q.orders_.push_back(d);
    q.weights_.push_back(m);
  }
  return q;
}

long long QuotientOrderGraph::weight_of(long long order) const {
  auto it = std::lower_bound(orders_.begin(), orders_.end(), order);
  if (it == orders_.end() || *it != order) return 0;
  return weights_[static_cast<std::size_t>(it - orders_.begin())];
}

bool QuotientOrderGraph::adjacent(int i, int j) const {
  if (i == j) return false;
  long long a = orders_[i], b = orders_[j];
  return a % b == 0 || b % a == 0;
}

long long QuotientOrderGraph::total_weight() const {
  long long sum = 0;
  for (long long w : weights_) sum += w;
  return sum;
}

SimpleGraph QuotientOrderGraph::as_graph() const {
  std::vector<std::string> labels;
  labels.reserve(orders_.size());
  for (long long d : orders_) labels.push_back(std::to_string(d));
  SimpleGraph g(node_count(), std::move(labels));
  for (int i = 0; i < node_count(); ++i)
    for (int j = i + 1; j < node_count(); ++j)
      if (adjacent(i, j)) g.add_edge(i, j);
  return g;
}

SimpleGraph order_supergraph(const Group& g, int max_vertices) {
  const int n = g.order();
  if (n > max_vertices)
    throw CapExceededError("order_supergraph: " + std::to_string(n) +
                           " vertices exceeds limit " +
                           std::to_string(max_vertices) +
                           "; use the quotient representation");
  std::vector<std::string> labels;
  labels.reserve(n);
  for (int v = 0; v < n; ++v) labels.push_back(g.label(v));
  SimpleGraph sg(n, std::move(labels));
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v) {
      long long a = g.order_of(u), b = g.order_of(v);
      if (a % b == 0 || b % a == 0) sg.add_edge(u, v);
    }
  }
  return sg;
}

QuotientOrderGraph order_quotient_graph(const OrderProfile& profile) {
  return QuotientOrderGraph::from_profile(profile);
}

ExpandedGraph expand(const QuotientOrderGraph& q, long long max_vertices) {
  const long long total = q.total_weight();
  if (total > max_vertices)
    throw CapExceededError("expand: blow-up has " + std::to_string(total) +
                           " vertices, limit " + std::to_string(max_vertices));
  std::vector<long long> vertex_orders;
  std::vector<std::string> labels;
  std::vector<int> block_start(q.node_count());
  int at = 0;
  for (int i = 0; i < q.node_count(); ++i) {
    block_start[i] = at;
    for (long long k = 0; k < q.weight_at(i); ++k) {
      vertex_orders.push_back(q.order_at(i));
      labels.push_back(std::to_string(q.order_at(i)) + "#" + std::to_string(k));
      ++at;
    }
  }
  SimpleGraph g(at, std::move(labels));
  for (int i = 0; i < q.node_count(); ++i) {
    int ai = block_start[i];
    int bi = ai + static_cast<int>(q.weight_at(i));
    for (int u = ai; u < bi; ++u)
      for (int v = u + 1; v < bi; ++v) g.add_edge(u, v);
    for (int j = i + 1; j < q.node_count(); ++j) {
      if (!q.adjacent(i, j)) continue;
      int aj = block_start[j];
      int bj = aj + static_cast<int>(q.weight_at(j));
      for (int u = ai; u < bi; ++u)
        for (int v = aj; v < bj; ++v) g.add_edge(u, v);
    }
  }
  return {std::move(g), std::move(vertex_orders)};
}

bool blown_up_component_has_cycle(const QuotientOrderGraph& q,
                                  const std::vector<int>& component_nodes) {
  for (int i : component_nodes)
    if (q.weight_at(i) >= 3) return true;
  long long internal_edges = 0;
  for (std::size_t a = 0; a < component_nodes.size(); ++a) {
    for (std::size_t b = a + 1; b < component_nodes.size(); ++b) {
      int i = component_nodes[a], j = component_nodes[b];
      if (!q.adjacent(i, j)) continue;
      if (q.weight_at(i) >= 2 || q.weight_at(j) >= 2) return true;
      ++internal_edges;
    }
  }
  return internal_edges >= static_cast<long long>(component_nodes.size());
}

ClassSignature class_signature(const SimpleGraph& g,
                               const std::vector<long long>& vertex_keys) {
  if (static_cast<int>(vertex_keys.size()) != g.vertex_count())
    throw std::invalid_argument("class_signature: key vector size mismatch");
  std::map<long long, VertexSet> classes;
  for (int v = 0; v < g.vertex_count(); ++v) classes[vertex_keys[v]].push_back(v);

  ClassSignature sig;
  for (const auto& [key, members] : classes) {
    for (std::size_t a = 0; a < members.size(); ++a)
      for (std::size_t b = a + 1; b < members.size(); ++b)
        if (!g.adjacent(members[a], members[b]))
          throw std::logic_error("class_signature: class is not a clique");
    sig.classes.emplace_back(key, static_cast<long long>(members.size()));
  }
  for (auto it = classes.begin(); it != classes.end(); ++it) {
    for (auto jt = std::next(it); jt != classes.end(); ++jt) {
      bool any = false, all = true;
      for (int u : it->second) {
        for (int v : jt->second) {
          if (g.adjacent(u, v))
            any = true;
          else
            all = false;
        }
      }
      if (any && !all)
        throw std::logic_error("class_signature: classes not module-like");
      if (any) sig.class_edges.emplace_back(it->first, jt->first);
    }
  }
  return sig;
}

std::string quotient_to_json(const QuotientOrderGraph& q) {
  nlohmann::ordered_json j;
  j["orders"] = q.orders();
  auto weights = nlohmann::ordered_json::array();
  for (int i = 0; i < q.node_count(); ++i) weights.push_back(q.weight_at(i));
  j["weights"] = std::move(weights);
  auto edges = nlohmann::ordered_json::array();
  for (int i = 0; i < q.node_count(); ++i)
    for (int k = i + 1; k < q.node_count(); ++k)
      if (q.adjacent(i, k)) edges.push_back({q.order_at(i), q.order_at(k)});
  j["edges"] = std::move(edges);
  return j.dump(2) + "\n";
}

std::string quotient_to_dot(const QuotientOrderGraph& q) {
  std::string out = "graph Q {\n";
  for (int i = 0; i < q.node_count(); ++i) {
    out += "  " + std::to_string(i) + " [label=\"" +
           std::to_string(q.order_at(i)) + " (x" +
           std::to_string(q.weight_at(i)) + ")\"];\n";
  }
  for (int i = 0; i < q.node_count(); ++i)
    for (int k = i + 1; k < q.node_count(); ++k)
      if (q.adjacent(i, k))
        out += "  " + std::to_string(i) + " -- " + std::to_string(k) + ";\n";
  out += "}\n";
  return out;
}

}  // namespace ordsup
