#include "ordsup/min_vertex_cut.hpp"

#include <algorithm>
#include <limits>
#include <queue>
#include <stdexcept>

namespace ordsup {

namespace {

// Dinic on a unit-ish capacity network, plain adjacency-array arcs.
class FlowNetwork {
 public:
  explicit FlowNetwork(int nodes) : head_(nodes), level_(nodes), it_(nodes) {}

  void add_arc(int from, int to, int cap) {
    head_[from].push_back(static_cast<int>(arcs_.size()));
    arcs_.push_back({to, cap});
    head_[to].push_back(static_cast<int>(arcs_.size()));
    arcs_.push_back({from, 0});
  }

  int max_flow(int source, int sink) {
    int flow = 0;
    while (bfs(source, sink)) {
      std::fill(it_.begin(), it_.end(), 0);
      while (int pushed = dfs(source, sink, std::numeric_limits<int>::max()))
        flow += pushed;
    }
    return flow;
  }

  // Nodes reachable from `source` in the final residual network.
  std::vector<bool> residual_reachable(int source) const {
    std::vector<bool> seen(head_.size(), false);
    std::queue<int> queue;
    queue.push(source);
    seen[source] = true;
    while (!queue.empty()) {
      int v = queue.front();
      queue.pop();
      for (int id : head_[v]) {
        const Arc& arc = arcs_[id];
        if (arc.cap > 0 && !seen[arc.to]) {
          seen[arc.to] = true;
          queue.push(arc.to);
        }
      }
    }
    return seen;
  }

 private:
  struct Arc {
    int to;
    int cap;
  };

  bool bfs(int source, int sink) {
    std::fill(level_.begin(), level_.end(), -1);
    std::queue<int> queue;
    queue.push(source);
    level_[source] = 0;
    while (!queue.empty()) {
      int v = queue.front();
      queue.pop();
      for (int id : head_[v]) {
        const Arc& arc = arcs_[id];
        if (arc.cap > 0 && level_[arc.to] == -1) {
          level_[arc.to] = level_[v] + 1;
          queue.push(arc.to);
        }
      }
    }
    return level_[sink] != -1;
  }

  int dfs(int v, int sink, int limit) {
    if (v == sink) return limit;
    for (int& i = it_[v]; i < static_cast<int>(head_[v].size()); ++i) {
      int id = head_[v][i];
      Arc& arc = arcs_[id];
      if (arc.cap > 0 && level_[arc.to] == level_[v] + 1) {
        int pushed = dfs(arc.to, sink, std::min(limit, arc.cap));
        if (pushed > 0) {
          arc.cap -= pushed;
          arcs_[id ^ 1].cap += pushed;
          return pushed;
        }
      }
    }
    return 0;
  }

  std::vector<Arc> arcs_;
  std::vector<std::vector<int>> head_;
  std::vector<int> level_;
  std::vector<int> it_;
};

}  // namespace

MinVertexCut min_vertex_cut(const SimpleGraph& g, const VertexSet& a,
                            const VertexSet& b) {
  const int n = g.vertex_count();
  Bitset in_a = to_bitset(a, n);
  Bitset in_b = to_bitset(b, n);
  if (in_a.intersects(in_b)) return MinVertexCut{.inseparable = true, .size = 0, .cut = {}};
  for (int u : a)
    if (g.neighbors(u).intersects(in_b))
      return MinVertexCut{.inseparable = true, .size = 0, .cut = {}};

  // Split each removable vertex v into v_in = 2v and v_out = 2v + 1 joined
  // by a unit arc; terminal-set vertices get infinite self-capacity.
  const int source = 2 * n;
  const int sink = 2 * n + 1;
  const int inf = n + 5;
  FlowNetwork net(2 * n + 2);
  for (int v = 0; v < n; ++v) {
    if (in_a.test(v)) {
      net.add_arc(source, 2 * v + 1, inf);
      net.add_arc(2 * v, 2 * v + 1, inf);
    } else if (in_b.test(v)) {
      net.add_arc(2 * v, sink, inf);
      net.add_arc(2 * v, 2 * v + 1, inf);
    } else {
      net.add_arc(2 * v, 2 * v + 1, 1);
    }
  }
  for (const auto& [u, v] : g.edges()) {
    net.add_arc(2 * u + 1, 2 * v, inf);
    net.add_arc(2 * v + 1, 2 * u, inf);
  }

  MinVertexCut result;
  result.size = net.max_flow(source, sink);

  std::vector<bool> reach = net.residual_reachable(source);
  for (int v = 0; v < n; ++v) {
    if (!in_a.test(v) && !in_b.test(v) && reach[2 * v] && !reach[2 * v + 1])
      result.cut.push_back(v);
  }
  if (static_cast<int>(result.cut.size()) != result.size)
    throw std::logic_error("min_vertex_cut: cut size does not match flow");

  // Post-verify: removing the cut really separates every A vertex from
  // every B vertex.
  Bitset alive(n);
  alive.set_all();
  for (int v : result.cut) alive.reset(v);
  for (const VertexSet& comp : components_within(g, alive)) {
    Bitset mask = to_bitset(comp, n);
    if (mask.intersects(in_a) && mask.intersects(in_b))
      throw std::logic_error("min_vertex_cut: returned cut does not separate");
  }
  return result;
}

}  // namespace ordsup
