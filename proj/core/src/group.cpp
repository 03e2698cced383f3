#include "ordsup/group.hpp"

#include <algorithm>
#include <numeric>
#include <random>
#include <stdexcept>

#include "ordsup/numbers.hpp"

namespace ordsup {

void OrderProfile::add(long long order, long long count) {
  if (order < 1 || count < 1)
    throw std::invalid_argument("OrderProfile::add: positive values required");
  counts_[order] += count;
}

long long OrderProfile::multiplicity(long long order) const {
  auto it = counts_.find(order);
  return it == counts_.end() ? 0 : it->second;
}

long long OrderProfile::total() const {
  long long sum = 0;
  for (const auto& [d, m] : counts_) sum += m;
  return sum;
}

long long OrderProfile::exponent() const {
  long long e = 1;
  for (const auto& [d, m] : counts_) e = std::lcm(e, d);
  return e;
}

std::vector<long long> OrderProfile::distinct_orders() const {
  std::vector<long long> orders;
  orders.reserve(counts_.size());
  for (const auto& [d, m] : counts_) orders.push_back(d);
  return orders;
}

OrderProfile profile_from_orders(const std::vector<long long>& orders) {
  OrderProfile profile;
  for (long long d : orders) profile.add(d);
  return profile;
}

void validate_profile(const OrderProfile& profile, long long group_order) {
  if (profile.multiplicity(1) != 1)
    throw std::logic_error("profile: identity multiplicity must be exactly 1");
  if (profile.total() != group_order)
    throw std::logic_error("profile: multiplicities must sum to group order");
  for (const auto& [d, m] : profile.counts()) {
    if (group_order % d != 0)
      throw std::logic_error("profile: element order must divide group order");
    if (d > 2 && m % euler_phi(d) != 0)
      throw std::logic_error("profile: m(d) must be a multiple of phi(d)");
  }
}

Group::Group(std::string name, int order, std::function<int(int, int)> multiply,
             std::vector<long long> element_orders,
             std::function<std::string(int)> labeler)
    : name_(std::move(name)),
      order_(order),
      multiply_(std::move(multiply)),
      orders_(std::move(element_orders)),
      labeler_(std::move(labeler)) {
  if (order_ < 1) throw std::invalid_argument("Group: order must be positive");
  if (static_cast<int>(orders_.size()) != order_)
    throw std::invalid_argument("Group: order vector size mismatch");
}

OrderProfile element_orders(const Group& g) {
  return profile_from_orders(g.orders());
}

std::vector<int> order_class(const Group& g, int x) {
  const long long d = g.order_of(x);
  std::vector<int> cls;
  for (int y = 0; y < g.order(); ++y)
    if (g.order_of(y) == d) cls.push_back(y);
  return cls;
}

void check_group_axioms(const Group& g, unsigned seed) {
  const int n = g.order();
  if (g.order_of(0) != 1) throw std::logic_error("element 0 is not the identity");
  for (int x = 0; x < n; ++x) {
    if (g.multiply(0, x) != x || g.multiply(x, 0) != x)
      throw std::logic_error("element 0 is not a two-sided identity");
  }
  // Inverses via x^(o(x)-1), verified on both sides.
  for (int x = 0; x < n; ++x) {
    int inv = 0;
    int power = 0;
    for (long long k = 1; k < g.order_of(x); ++k) power = g.multiply(power, x);
    inv = power;
    if (g.multiply(x, inv) != 0 || g.multiply(inv, x) != 0)
      throw std::logic_error("missing two-sided inverse");
  }
  // Closure.
  for (int x = 0; x < n; ++x) {
    for (int y = 0; y < n; ++y) {
      int z = g.multiply(x, y);
      if (z < 0 || z >= n) throw std::logic_error("multiplication not closed");
    }
  }
  // Associativity: exhaustive up to 64 elements, sampled above.
  auto check_triple = [&](int a, int b, int c) {
    if (g.multiply(g.multiply(a, b), c) != g.multiply(a, g.multiply(b, c)))
      throw std::logic_error("multiplication not associative");
  };
  if (n <= 64) {
    for (int a = 0; a < n; ++a)
      for (int b = 0; b < n; ++b)
        for (int c = 0; c < n; ++c) check_triple(a, b, c);
  } else {
    std::mt19937 rng(seed);
    for (int trial = 0; trial < 20000; ++trial) {
      check_triple(static_cast<int>(rng() % n), static_cast<int>(rng() % n),
                   static_cast<int>(rng() % n));
    }
  }
}

std::optional<SylowFacts> sylow_facts(const OrderProfile& profile,
                                      long long group_order, long long p) {
  if (!is_prime(p)) throw std::invalid_argument("sylow_facts: p must be prime");
  if (group_order % p != 0) return std::nullopt;
  SylowFacts facts;
  facts.prime = p;
  facts.subgroup_order = p_part(group_order, p);
  facts.exponent = 1;
  facts.element_count = 1;  // identity
  for (const auto& [d, m] : profile.counts()) {
    if (d == 1) continue;
    if (p_part(d, p) == d) {  // d is a power of p
      facts.element_count += m;
      facts.exponent = std::max(facts.exponent, d);
    }
  }
  // All p-elements lie in the union of the Sylow p-subgroups; that union has
  // size p^a exactly when the Sylow p-subgroup is unique, i.e. normal.
  facts.normal = (facts.element_count == facts.subgroup_order);
  return facts;
}

std::optional<SylowFacts> sylow_facts(const Group& g, long long p) {
  return sylow_facts(element_orders(g), g.order(), p);
}

bool all_sylows_normal(const OrderProfile& profile, long long group_order) {
  for (long long p : prime_divisors(group_order)) {
    auto facts = sylow_facts(profile, group_order, p);
    if (!facts || !facts->normal) return false;
  }
  return true;
}

bool is_eppo(const OrderProfile& profile) {
  for (const auto& [d, m] : profile.counts()) {
    if (d == 1) continue;
    if (factorize(d).size() != 1) return false;
  }
  return true;
}

bool is_eppo(const Group& g) { return is_eppo(element_orders(g)); }

bool is_epo(const OrderProfile& profile) {
  for (const auto& [d, m] : profile.counts()) {
    if (d == 1) continue;
    if (!is_prime(d)) return false;
  }
  return true;
}

bool is_epo(const Group& g) { return is_epo(element_orders(g)); }

namespace {

// Elements of coprime orders commute iff all cross-prime pairs of
// prime-power-order elements commute (every element splits into commuting
// prime-power components inside its own cyclic subgroup).
bool coprime_elements_commute(const Group& g) {
  std::map<long long, std::vector<int>> by_prime;
  for (int x = 1; x < g.order(); ++x) {
    long long d = g.order_of(x);
    auto factors = factorize(d);
    if (factors.size() == 1) by_prime[factors[0].first].push_back(x);
  }
  for (auto it = by_prime.begin(); it != by_prime.end(); ++it) {
    for (auto jt = std::next(it); jt != by_prime.end(); ++jt) {
      for (int x : it->second) {
        for (int y : jt->second) {
          if (g.multiply(x, y) != g.multiply(y, x)) return false;
        }
      }
    }
  }
  return true;
}

}  // namespace

bool is_nilpotent(const Group& g) {
  const bool via_commuting = coprime_elements_commute(g);
  const bool via_sylow = all_sylows_normal(element_orders(g), g.order());
  if (via_commuting != via_sylow)
    throw std::logic_error(
        "is_nilpotent: commuting criterion and Sylow criterion disagree on " +
        g.name());
  return via_commuting;
}

}  // namespace ordsup
