#include "ordsup/graph.hpp"

#include <algorithm>
#include <bit>
#include <limits>
#include <stdexcept>

#include <json.hpp>

#include "ordsup/errors.hpp"

namespace ordsup {

void Bitset::set_all() {
  std::fill(words_.begin(), words_.end(), ~std::uint64_t{0});
  if (bits_ & 63) words_.back() = (std::uint64_t{1} << (bits_ & 63)) - 1;
}

int Bitset::count() const {
  int total = 0;
  for (std::uint64_t w : words_) total += std::popcount(w);
  return total;
}

bool Bitset::any() const {
  for (std::uint64_t w : words_)
    if (w) return true;
  return false;
}

int Bitset::first() const { return next(-1); }

int Bitset::next(int after) const {
  int word = (after + 1) >> 6;
  if (word >= static_cast<int>(words_.size())) return -1;
  std::uint64_t w = words_[word] & (~std::uint64_t{0} << ((after + 1) & 63));
  while (true) {
    if (w) return (word << 6) + std::countr_zero(w);
    if (++word >= static_cast<int>(words_.size())) return -1;
    w = words_[word];
  }
}

Bitset& Bitset::operator|=(const Bitset& other) {
  for (std::size_t i = 0; i < words_.size(); ++i) words_[i] |= other.words_[i];
  return *this;
}

Bitset& Bitset::operator&=(const Bitset& other) {
  for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= other.words_[i];
  return *this;
}

Bitset& Bitset::subtract(const Bitset& other) {
  for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= ~other.words_[i];
  return *this;
}

bool Bitset::intersects(const Bitset& other) const {
  for (std::size_t i = 0; i < words_.size(); ++i)
    if (words_[i] & other.words_[i]) return true;
  return false;
}

bool Bitset::is_subset_of(const Bitset& other) const {
  for (std::size_t i = 0; i < words_.size(); ++i)
    if (words_[i] & ~other.words_[i]) return false;
  return true;
}

std::vector<int> Bitset::to_vector() const {
  std::vector<int> out;
  for (int v = first(); v != -1; v = next(v)) out.push_back(v);
  return out;
}

Bitset to_bitset(const VertexSet& vs, int n) {
  Bitset bs(n);
  for (int v : vs) bs.set(v);
  return bs;
}

SimpleGraph::SimpleGraph(int n) : n_(n), adj_(n, Bitset(n)) {
  if (n < 0) throw std::invalid_argument("SimpleGraph: negative vertex count");
}

SimpleGraph::SimpleGraph(int n, std::vector<std::string> labels)
    : SimpleGraph(n) {
  set_labels(std::move(labels));
}

void SimpleGraph::add_edge(int u, int v) {
  if (u < 0 || v < 0 || u >= n_ || v >= n_)
    throw std::invalid_argument("add_edge: vertex out of range");
  if (u == v) throw std::invalid_argument("add_edge: self loops not allowed");
  if (adj_[u].test(v)) return;
  adj_[u].set(v);
  adj_[v].set(u);
  ++edge_count_;
}

std::vector<std::pair<int, int>> SimpleGraph::edges() const {
  std::vector<std::pair<int, int>> out;
  out.reserve(static_cast<std::size_t>(edge_count_));
  for (int u = 0; u < n_; ++u)
    for (int v = adj_[u].next(u); v != -1; v = adj_[u].next(v))
      out.emplace_back(u, v);
  return out;
}

bool SimpleGraph::is_complete() const {
  return edge_count_ == static_cast<long long>(n_) * (n_ - 1) / 2;
}

Bitset SimpleGraph::universal_vertices() const {
  Bitset result(n_);
  for (int v = 0; v < n_; ++v)
    if (degree(v) == n_ - 1) result.set(v);
  return result;
}

std::string SimpleGraph::label(int v) const {
  if (labels_.empty()) return std::to_string(v);
  return labels_[v];
}

void SimpleGraph::set_labels(std::vector<std::string> labels) {
  if (static_cast<int>(labels.size()) != n_)
    throw std::invalid_argument("set_labels: size mismatch");
  labels_ = std::move(labels);
}

std::vector<std::string> SimpleGraph::labels_of(const VertexSet& vs) const {
  std::vector<std::string> out;
  out.reserve(vs.size());
  for (int v : vs) out.push_back(label(v));
  return out;
}

namespace {

std::vector<Bitset> component_masks(const SimpleGraph& g, const Bitset& alive) {
  std::vector<Bitset> comps;
  Bitset unseen = alive;
  for (int start = unseen.first(); start != -1; start = unseen.first()) {
    Bitset comp(g.vertex_count());
    comp.set(start);
    Bitset frontier(g.vertex_count());
    frontier.set(start);
    while (frontier.any()) {
      Bitset next(g.vertex_count());
      for (int v = frontier.first(); v != -1; v = frontier.next(v)) {
        Bitset reach = g.neighbors(v);
        reach &= alive;
        reach.subtract(comp);
        next |= reach;
      }
      comp |= next;
      frontier = std::move(next);
    }
    unseen.subtract(comp);
    comps.push_back(std::move(comp));
  }
  return comps;
}

}  // namespace

std::vector<VertexSet> components(const SimpleGraph& g) {
  Bitset all(g.vertex_count());
  all.set_all();
  return components_within(g, all);
}

std::vector<VertexSet> components_within(const SimpleGraph& g,
                                         const Bitset& alive) {
  std::vector<VertexSet> out;
  for (const Bitset& comp : component_masks(g, alive))
    out.push_back(comp.to_vector());
  return out;
}

long long edges_within(const SimpleGraph& g, const Bitset& mask) {
  long long twice = 0;
  for (int v = mask.first(); v != -1; v = mask.next(v)) {
    Bitset inside = g.neighbors(v);
    inside &= mask;
    twice += inside.count();
  }
  return twice / 2;
}

bool component_contains_cycle(const SimpleGraph& g, const VertexSet& component) {
  Bitset mask = to_bitset(component, g.vertex_count());
  auto comps = component_masks(g, mask);
  if (comps.size() != 1)
    throw std::invalid_argument("component_contains_cycle: set not connected");
  // Maximality: no edge may leave the set.
  for (int v = mask.first(); v != -1; v = mask.next(v)) {
    Bitset outside = g.neighbors(v);
    outside.subtract(mask);
    if (outside.any())
      throw std::invalid_argument(
          "component_contains_cycle: set is not a maximal component");
  }
  return edges_within(g, mask) >= mask.count();
}

std::optional<Bitset> find_cyclic_component(const SimpleGraph& g,
                                            const Bitset& alive) {
  for (Bitset& comp : component_masks(g, alive)) {
    if (edges_within(g, comp) >= comp.count()) return std::move(comp);
  }
  return std::nullopt;
}

namespace {

// Chordless-cycle DFS. Paths start at the smallest cycle vertex v0, grow
// through vertices > v0 that are non-adjacent to everything but the path
// tip, and close on a neighbor of v0. Each cycle is reported once: the
// second path vertex must be smaller than the closing vertex.
class CycleEnumerator {
 public:
  CycleEnumerator(const SimpleGraph& g, const Bitset& allowed, long long limit,
                  const std::function<bool(const VertexSet&)>& sink)
      : g_(g), allowed_(allowed), limit_(limit), sink_(sink) {}

  // false when the sink requested an early stop
  bool run() {
    const int n = g_.vertex_count();
    for (int v0 = allowed_.first(); v0 != -1; v0 = allowed_.next(v0)) {
      Bitset above(n);
      for (int v = allowed_.next(v0); v != -1; v = allowed_.next(v)) above.set(v);
      Bitset start_candidates = g_.neighbors(v0);
      start_candidates &= above;
      for (int v1 = start_candidates.first(); v1 != -1;
           v1 = start_candidates.next(v1)) {
        path_ = {v0, v1};
        Bitset banned = g_.neighbors(v0);  // chords to v0 close, never extend
        banned.set(v0);
        banned.set(v1);
        Bitset usable = above;
        usable.subtract(banned);
        if (!extend(v1, usable)) return false;
      }
    }
    return true;
  }

 private:
  bool extend(int tip, const Bitset& usable) {
    // Closing candidates: neighbors of both the tip and v0.
    Bitset closing = g_.neighbors(tip);
    closing &= g_.neighbors(path_[0]);
    closing &= allowed_;
    for (int u = closing.first(); u != -1; u = closing.next(u)) {
      if (u <= path_[0] || u == path_[1]) continue;
      bool chordless = true;
      for (std::size_t i = 1; chordless && i + 1 < path_.size(); ++i)
        if (g_.adjacent(u, path_[i])) chordless = false;
      if (!chordless) continue;
      if (path_[1] < u) {
        VertexSet cycle = path_;
        cycle.push_back(u);
        std::sort(cycle.begin(), cycle.end());
        if (++emitted_ > limit_)
          throw CycleLimitError("induced-cycle enumeration exceeded limit of " +
                                std::to_string(limit_));
        if (!sink_(cycle)) return false;
      }
    }
    // Extension candidates: neighbors of the tip that are not adjacent to
    // v0 or to any interior path vertex.
    Bitset cands = g_.neighbors(tip);
    cands &= usable;
    for (int u = cands.first(); u != -1; u = cands.next(u)) {
      path_.push_back(u);
      Bitset next_usable = usable;
      next_usable.subtract(g_.neighbors(tip));
      next_usable.reset(u);
      bool keep_going = extend(u, next_usable);
      path_.pop_back();
      if (!keep_going) return false;
    }
    return true;
  }

  const SimpleGraph& g_;
  const Bitset& allowed_;
  long long limit_;
  const std::function<bool(const VertexSet&)>& sink_;
  std::vector<int> path_;
  long long emitted_ = 0;
};

}  // namespace

bool enumerate_induced_cycles(const SimpleGraph& g, const Bitset& allowed,
                              long long limit,
                              const std::function<bool(const VertexSet&)>& sink) {
  return CycleEnumerator(g, allowed, limit, sink).run();
}

bool enumerate_induced_cycles(const SimpleGraph& g, long long limit,
                              const std::function<bool(const VertexSet&)>& sink) {
  Bitset all(g.vertex_count());
  all.set_all();
  return enumerate_induced_cycles(g, all, limit, sink);
}

std::vector<VertexSet> collect_induced_cycles(const SimpleGraph& g,
                                              long long limit) {
  std::vector<VertexSet> cycles;
  enumerate_induced_cycles(g, limit, [&](const VertexSet& cycle) {
    cycles.push_back(cycle);
    return true;
  });
  return cycles;
}

std::optional<VertexSet> first_induced_cycle(const SimpleGraph& g,
                                             const Bitset& allowed) {
  std::optional<VertexSet> found;
  enumerate_induced_cycles(g, allowed,
                           std::numeric_limits<long long>::max(),
                           [&](const VertexSet& cycle) {
                             found = cycle;
                             return false;
                           });
  return found;
}

std::string to_dot(const SimpleGraph& g) {
  std::string out = "graph G {\n";
  for (int v = 0; v < g.vertex_count(); ++v) {
    out += "  " + std::to_string(v) + " [label=\"" + g.label(v) + "\"];\n";
  }
  for (const auto& [u, v] : g.edges()) {
    out += "  " + std::to_string(u) + " -- " + std::to_string(v) + ";\n";
  }
  out += "}\n";
  return out;
}

std::string to_adjacency_json(const SimpleGraph& g) {
  nlohmann::ordered_json j;
  j["n"] = g.vertex_count();
  auto edges = nlohmann::ordered_json::array();
  for (const auto& [u, v] : g.edges()) edges.push_back({u, v});
  j["edges"] = std::move(edges);
  auto labels = nlohmann::ordered_json::array();
  for (int v = 0; v < g.vertex_count(); ++v) labels.push_back(g.label(v));
  j["labels"] = std::move(labels);
  return j.dump(2) + "\n";
}

}  // namespace ordsup
