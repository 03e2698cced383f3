#include "ordsup/families.hpp"

#include <algorithm>
#include <map>
#include <memory>
#include <numeric>
#include <queue>
#include <stdexcept>

#include "ordsup/errors.hpp"
#include "ordsup/numbers.hpp"

namespace ordsup {

namespace {

void require_cap(long long order, long long cap, const std::string& what) {
  if (order > cap)
    throw CapExceededError(what + ": order " + std::to_string(order) +
                           " exceeds element cap " + std::to_string(cap));
}

std::string power_label(const std::string& base, long long i) {
  if (i == 0) return "e";
  if (i == 1) return base;
  return base + std::to_string(i);
}

}  // namespace

Group make_cyclic(long long n, long long element_cap) {
  if (n < 1) throw std::invalid_argument("make_cyclic: n must be >= 1");
  require_cap(n, element_cap, "make_cyclic");
  std::vector<long long> orders(n);
  for (long long i = 0; i < n; ++i) orders[i] = n / std::gcd(i, n);
  orders[0] = 1;
  return Group(
      "Z" + std::to_string(n), static_cast<int>(n),
      [n](int a, int b) { return static_cast<int>((a + b) % n); },
      std::move(orders), [](int i) { return power_label("a", i); });
}

Group make_dihedral(long long n, long long element_cap) {
  if (n < 3) throw std::invalid_argument("make_dihedral: n must be >= 3");
  require_cap(2 * n, element_cap, "make_dihedral");
  // Elements 0..n-1 are a^i, elements n..2n-1 are a^(i-n) b.
  std::vector<long long> orders(2 * n);
  for (long long i = 0; i < n; ++i) orders[i] = n / std::gcd(i, n);
  orders[0] = 1;
  for (long long i = n; i < 2 * n; ++i) orders[i] = 2;
  auto mul = [n](int x, int y) {
    long long i = x % n, j = x / n;
    long long k = y % n, l = y / n;
    long long rot = j == 0 ? (i + k) % n : ((i - k) % n + n) % n;
    long long flip = (j + l) % 2;
    return static_cast<int>(rot + flip * n);
  };
  auto label = [n](int x) {
    if (x < n) return power_label("a", x);
    long long i = x - n;
    return i == 0 ? std::string("b") : power_label("a", i) + "b";
  };
  return Group("D" + std::to_string(2 * n), static_cast<int>(2 * n), mul,
               std::move(orders), label);
}

Group make_dicyclic(long long n, long long element_cap) {
  if (n < 2) throw std::invalid_argument("make_dicyclic: n must be >= 2");
  require_cap(4 * n, element_cap, "make_dicyclic");
  const long long m = 2 * n;  // order of a
  // Elements 0..2n-1 are a^i, elements 2n..4n-1 are a^(i-2n) b.
  std::vector<long long> orders(4 * n);
  for (long long i = 0; i < m; ++i) orders[i] = m / std::gcd(i, m);
  orders[0] = 1;
  for (long long i = m; i < 4 * n; ++i) orders[i] = 4;
  auto mul = [n, m](int x, int y) {
    long long i = x % m, j = x / m;
    long long k = y % m, l = y / m;
    long long rot = j == 0 ? (i + k) % m : ((i - k) % m + m) % m;
    long long flip = j + l;
    if (flip == 2) {  // b^2 = a^n
      rot = (rot + n) % m;
      flip = 0;
    }
    return static_cast<int>(rot + flip * m);
  };
  auto label = [m](int x) {
    if (x < m) return power_label("a", x);
    long long i = x - m;
    return i == 0 ? std::string("b") : power_label("a", i) + "b";
  };
  return Group("Q" + std::to_string(4 * n), static_cast<int>(4 * n), mul,
               std::move(orders), label);
}

namespace {

struct SymData {
  int degree = 0;
  std::vector<Perm> perms;              // lexicographic order
  std::vector<int> index_of_full_rank;  // full Lehmer rank -> element index
};

std::shared_ptr<SymData> enumerate_permutations(int n, bool even_only) {
  auto data = std::make_shared<SymData>();
  data->degree = n;
  Perm p = identity_perm(n);
  long long full = factorial(n);
  data->index_of_full_rank.assign(static_cast<std::size_t>(full), -1);
  long long rank = 0;
  do {
    if (!even_only || is_even_perm(p)) {
      data->index_of_full_rank[static_cast<std::size_t>(rank)] =
          static_cast<int>(data->perms.size());
      data->perms.push_back(p);
    }
    ++rank;
  } while (std::next_permutation(p.begin(), p.end()));
  return data;
}

Group group_from_sym_data(std::string name, std::shared_ptr<SymData> data) {
  const int order = static_cast<int>(data->perms.size());
  std::vector<long long> orders(order);
  for (int i = 0; i < order; ++i) orders[i] = perm_order(data->perms[i]);
  auto mul = [data](int a, int b) {
    Perm c = compose(data->perms[a], data->perms[b]);
    return data->index_of_full_rank[static_cast<std::size_t>(lehmer_rank(c))];
  };
  auto label = [data](int i) { return cycle_notation(data->perms[i]); };
  return Group(std::move(name), order, mul, std::move(orders), label);
}

}  // namespace

Group make_symmetric(int n, long long element_cap) {
  if (n < 1) throw std::invalid_argument("make_symmetric: n must be >= 1");
  if (n > 12 || factorial(n) > element_cap)
    throw CapExceededError("make_symmetric: " + std::to_string(n) +
                           "! exceeds element cap");
  return group_from_sym_data("S" + std::to_string(n),
                             enumerate_permutations(n, false));
}

Group make_alternating(int n, long long element_cap) {
  if (n < 2) throw std::invalid_argument("make_alternating: n must be >= 2");
  if (n > 12 || factorial(n) / 2 > element_cap)
    throw CapExceededError("make_alternating: " + std::to_string(n) +
                           "!/2 exceeds element cap");
  return group_from_sym_data("A" + std::to_string(n),
                             enumerate_permutations(n, true));
}

Group make_direct_product(const Group& a, const Group& b,
                          long long element_cap) {
  const long long order =
      static_cast<long long>(a.order()) * static_cast<long long>(b.order());
  require_cap(order, element_cap, "make_direct_product");
  const int nb = b.order();
  std::vector<long long> orders(static_cast<std::size_t>(order));
  for (int x = 0; x < a.order(); ++x)
    for (int y = 0; y < nb; ++y)
      orders[static_cast<std::size_t>(x) * nb + y] =
          std::lcm(a.order_of(x), b.order_of(y));
  auto pa = std::make_shared<Group>(a);
  auto pb = std::make_shared<Group>(b);
  auto mul = [pa, pb, nb](int x, int y) {
    int xa = x / nb, xb = x % nb;
    int ya = y / nb, yb = y % nb;
    return pa->multiply(xa, ya) * nb + pb->multiply(xb, yb);
  };
  auto label = [pa, pb, nb](int x) {
    return "(" + pa->label(x / nb) + "," + pb->label(x % nb) + ")";
  };
  return Group(a.name() + " x " + b.name(), static_cast<int>(order), mul,
               std::move(orders), label);
}

Group group_from_permutation_generators(const std::vector<Perm>& generators,
                                        long long element_cap) {
  if (generators.empty())
    throw std::invalid_argument("permutation generators: none given");
  const std::size_t degree = generators[0].size();
  for (const Perm& g : generators) {
    if (g.size() != degree)
      throw std::invalid_argument("permutation generators: degree mismatch");
    std::vector<bool> hit(degree, false);
    for (int image : g) {
      if (image < 0 || image >= static_cast<int>(degree) || hit[image])
        throw std::invalid_argument("permutation generators: not a bijection");
      hit[image] = true;
    }
  }

  struct PermGroupData {
    std::vector<Perm> elements;
    std::map<Perm, int> index;
  };
  auto data = std::make_shared<PermGroupData>();

  std::queue<int> todo;
  Perm id = identity_perm(static_cast<int>(degree));
  data->index[id] = 0;
  data->elements.push_back(std::move(id));
  todo.push(0);
  while (!todo.empty()) {
    int current = todo.front();
    todo.pop();
    for (const Perm& gen : generators) {
      Perm next = compose(data->elements[current], gen);
      auto [it, inserted] =
          data->index.emplace(std::move(next), static_cast<int>(data->elements.size()));
      if (inserted) {
        if (static_cast<long long>(data->elements.size()) + 1 > element_cap)
          throw CapExceededError(
              "permutation closure exceeds element cap of " +
              std::to_string(element_cap));
        data->elements.push_back(it->first);
        todo.push(it->second);
      }
    }
  }

  const int order = static_cast<int>(data->elements.size());
  std::vector<long long> orders(order);
  for (int i = 0; i < order; ++i) orders[i] = perm_order(data->elements[i]);
  auto mul = [data](int a, int b) {
    return data->index.at(compose(data->elements[a], data->elements[b]));
  };
  auto label = [data](int i) { return cycle_notation(data->elements[i]); };
  return Group("perm group of order " + std::to_string(order), order, mul,
               std::move(orders), label);
}

OrderProfile cyclic_order_profile(long long n) {
  if (n < 1) throw std::invalid_argument("cyclic_order_profile: n must be >= 1");
  OrderProfile profile;
  for (long long d = 1; d * d <= n; ++d) {
    if (n % d != 0) continue;
    profile.add(d, euler_phi(d));
    if (d != n / d) profile.add(n / d, euler_phi(n / d));
  }
  return profile;
}

OrderProfile dihedral_order_profile(long long n) {
  if (n < 3) throw std::invalid_argument("dihedral_order_profile: n must be >= 3");
  OrderProfile profile = cyclic_order_profile(n);
  profile.add(2, n);  // the n reflections
  return profile;
}

OrderProfile dicyclic_order_profile(long long n) {
  if (n < 2) throw std::invalid_argument("dicyclic_order_profile: n must be >= 2");
  OrderProfile profile = cyclic_order_profile(2 * n);
  profile.add(4, 2 * n);  // every element outside <a> has order 4
  return profile;
}

namespace {

OrderProfile sym_or_alt_profile(int n, bool even_only) {
  if (n < 1 || n > kMaxCycleTypeDegree)
    throw std::invalid_argument("cycle-type profile: need 1 <= n <= 20");
  OrderProfile profile;
  for_each_partition(n, [&](const std::vector<int>& parts) {
    CycleType type;
    long long order = 1;
    int transpositions = 0;
    for (std::size_t i = 0; i < parts.size();) {
      std::size_t j = i;
      while (j < parts.size() && parts[j] == parts[i]) ++j;
      type.emplace_back(parts[i], static_cast<int>(j - i));
      order = std::lcm(order, static_cast<long long>(parts[i]));
      transpositions += (parts[i] - 1) * static_cast<int>(j - i);
      i = j;
    }
    if (even_only && transpositions % 2 != 0) return;
    profile.add(order, conjugacy_class_size(n, type));
  });
  return profile;
}

}  // namespace

OrderProfile symmetric_order_profile(int n) { return sym_or_alt_profile(n, false); }

OrderProfile alternating_order_profile(int n) {
  if (n < 2) throw std::invalid_argument("alternating_order_profile: n must be >= 2");
  return sym_or_alt_profile(n, true);
}

OrderProfile product_order_profile(const OrderProfile& a,
                                   const OrderProfile& b) {
  OrderProfile profile;
  for (const auto& [da, ma] : a.counts())
    for (const auto& [db, mb] : b.counts())
      profile.add(std::lcm(da, db), ma * mb);
  return profile;
}

}  // namespace ordsup
