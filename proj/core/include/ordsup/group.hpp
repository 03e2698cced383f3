#pragma once

#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace ordsup {

// Multiplicity of each element order in a finite group. Determines the
// order supergraph up to vertex labels.
class OrderProfile {
 public:
  OrderProfile() = default;
  explicit OrderProfile(std::map<long long, long long> counts)
      : counts_(std::move(counts)) {}

  void add(long long order, long long count = 1);
  long long multiplicity(long long order) const;
  const std::map<long long, long long>& counts() const { return counts_; }
  long long total() const;
  long long exponent() const;  // lcm of the orders present
  std::vector<long long> distinct_orders() const;

  bool operator==(const OrderProfile&) const = default;

 private:
  std::map<long long, long long> counts_;
};

OrderProfile profile_from_orders(const std::vector<long long>& orders);

// Throws std::logic_error if the profile violates a structural invariant:
// m(1) == 1, counts sum to group_order, every order divides group_order,
// and phi(d) | m(d).
void validate_profile(const OrderProfile& profile, long long group_order);

// A finite group materialized as an element table. Element 0 is the
// identity. Immutable after construction; safe to share across threads.
class Group {
 public:
  Group(std::string name, int order, std::function<int(int, int)> multiply,
        std::vector<long long> element_orders,
        std::function<std::string(int)> labeler);

  const std::string& name() const { return name_; }
  int order() const { return order_; }
  int multiply(int a, int b) const { return multiply_(a, b); }
  long long order_of(int x) const { return orders_[x]; }
  const std::vector<long long>& orders() const { return orders_; }
  std::string label(int x) const { return labeler_(x); }

 private:
  std::string name_;
  int order_;
  std::function<int(int, int)> multiply_;
  std::vector<long long> orders_;
  std::function<std::string(int)> labeler_;
};

OrderProfile element_orders(const Group& g);

// All elements with the same order as x, ascending.
std::vector<int> order_class(const Group& g, int x);

// Throws std::logic_error if the table is not a group: identity, closure,
// inverses, associativity (exhaustive for |G| <= 64, sampled above).
void check_group_axioms(const Group& g, unsigned seed = 0x5eed);

struct SylowFacts {
  long long prime = 0;
  long long subgroup_order = 0;   // p-part of |G|
  long long exponent = 0;         // largest p-power element order
  long long element_count = 0;    // elements of p-power order, identity included
  bool normal = false;            // element_count == subgroup_order
};

// nullopt when p does not divide the group order. Throws on non-prime p.
std::optional<SylowFacts> sylow_facts(const OrderProfile& profile,
                                      long long group_order, long long p);
std::optional<SylowFacts> sylow_facts(const Group& g, long long p);

bool all_sylows_normal(const OrderProfile& profile, long long group_order);

// Every element order is a prime power (1 included).
bool is_eppo(const OrderProfile& profile);
bool is_eppo(const Group& g);

// Every non-identity element has prime order.
bool is_epo(const OrderProfile& profile);
bool is_epo(const Group& g);

// Finite nilpotency, decided two ways and cross-checked: elements of
// coprime prime-power orders all commute, and every Sylow subgroup is
// normal. Throws std::logic_error if the two routes ever disagree.
bool is_nilpotent(const Group& g);

}  // namespace ordsup
