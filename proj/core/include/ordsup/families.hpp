#pragma once

#include "ordsup/config.hpp"
#include "ordsup/group.hpp"
#include "ordsup/perm.hpp"

namespace ordsup {

// Element tables for the named families. Every constructor rejects
// parameters below its bound and element counts above `element_cap`
// (CapExceededError).

Group make_cyclic(long long n, long long element_cap = kDefaultElementCap);

// Order 2n, n >= 3: <a, b | a^n = b^2 = e, ab = b a^-1>.
Group make_dihedral(long long n, long long element_cap = kDefaultElementCap);

// Order 4n, n >= 2: <a, b | a^2n = e, a^n = b^2, ab = b a^-1>.
Group make_dicyclic(long long n, long long element_cap = kDefaultElementCap);

Group make_symmetric(int n, long long element_cap = kDefaultElementCap);

Group make_alternating(int n, long long element_cap = kDefaultElementCap);

Group make_direct_product(const Group& a, const Group& b,
                          long long element_cap = kDefaultElementCap);

// Closure under composition, breadth-first from the identity.
Group group_from_permutation_generators(
    const std::vector<Perm>& generators,
    long long element_cap = kDefaultElementCap);

// Order profiles computed without materializing elements.
OrderProfile cyclic_order_profile(long long n);
OrderProfile dihedral_order_profile(long long n);
OrderProfile dicyclic_order_profile(long long n);
OrderProfile symmetric_order_profile(int n);    // cycle-type combinatorics
OrderProfile alternating_order_profile(int n);  // even cycle types only
OrderProfile product_order_profile(const OrderProfile& a, const OrderProfile& b);

}  // namespace ordsup
