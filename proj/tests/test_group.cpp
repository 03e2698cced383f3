#include <doctest.h>

#include "ordsup/families.hpp"
#include "ordsup/group.hpp"
#include "test_support.hpp"

using namespace ordsup;

TEST_CASE("order profile invariants") {
  OrderProfile p;
  p.add(1);
  p.add(2, 3);
  p.add(3, 2);
  CHECK(p.total() == 6);
  CHECK(p.exponent() == 6);
  CHECK(p.multiplicity(2) == 3);
  CHECK(p.multiplicity(7) == 0);
  CHECK(p.distinct_orders() == std::vector<long long>{1, 2, 3});
  CHECK_NOTHROW(validate_profile(p, 6));  // S3
  CHECK_THROWS_AS(validate_profile(p, 7), std::logic_error);
}

TEST_CASE("element orders and order classes") {
  Group z6 = make_cyclic(6);
  OrderProfile profile = element_orders(z6);
  CHECK(profile.counts() ==
        std::map<long long, long long>{{1, 1}, {2, 1}, {3, 2}, {6, 2}});

  // The two elements of order 3 in Z6 are a^2 and a^4.
  std::vector<int> cls = order_class(z6, 2);
  CHECK(cls == std::vector<int>{2, 4});
  CHECK(order_class(z6, 0) == std::vector<int>{0});
}

TEST_CASE("sylow facts from profiles") {
  SUBCASE("A4 at 3: eight 3-elements, not normal") {
    Group a4 = make_alternating(4);
    auto facts = sylow_facts(a4, 3);
    REQUIRE(facts.has_value());
    CHECK(facts->subgroup_order == 3);
    CHECK(facts->exponent == 3);
    CHECK(facts->element_count == 9);
    CHECK_FALSE(facts->normal);
  }
  SUBCASE("Z12 at 2: the unique Z4") {
    Group z12 = make_cyclic(12);
    auto facts = sylow_facts(z12, 2);
    REQUIRE(facts.has_value());
    CHECK(facts->subgroup_order == 4);
    CHECK(facts->exponent == 4);
    CHECK(facts->element_count == 4);
    CHECK(facts->normal);
  }
  SUBCASE("S3 at 3: the unique A3") {
    Group s3 = make_symmetric(3);
    auto facts = sylow_facts(s3, 3);
    REQUIRE(facts.has_value());
    CHECK(facts->subgroup_order == 3);
    CHECK(facts->exponent == 3);
    CHECK(facts->element_count == 3);
    CHECK(facts->normal);
  }
  SUBCASE("absent prime and non-prime argument") {
    Group s3 = make_symmetric(3);
    CHECK_FALSE(sylow_facts(s3, 5).has_value());
    CHECK_THROWS_AS(sylow_facts(s3, 4), std::invalid_argument);
  }
}

TEST_CASE("EPPO and EPO classification") {
  CHECK(is_eppo(make_symmetric(4)));
  CHECK_FALSE(is_epo(make_symmetric(4)));  // has elements of order 4
  Group a5 = make_alternating(5);
  CHECK(is_eppo(a5));
  CHECK(is_epo(a5));
  CHECK_FALSE(is_eppo(make_cyclic(6)));
  CHECK_FALSE(is_epo(make_cyclic(6)));
}

TEST_CASE("nilpotency via commuting and Sylow routes") {
  CHECK(is_nilpotent(make_cyclic(12)));
  CHECK_FALSE(is_nilpotent(make_symmetric(3)));
  Group q8z3 = make_direct_product(make_dicyclic(2), make_cyclic(3));
  CHECK(is_nilpotent(q8z3));
  CHECK_FALSE(is_nilpotent(make_dihedral(5)));

  // Sylow route alone matches on a spread of groups.
  for (const Group& g :
       {make_cyclic(24), make_dihedral(6), make_symmetric(4),
        make_dicyclic(3), make_direct_product(make_cyclic(4), make_cyclic(9))}) {
    CHECK(is_nilpotent(g) == all_sylows_normal(element_orders(g), g.order()));
  }
}

TEST_CASE("group axioms hold for every constructor") {
  CHECK_NOTHROW(check_group_axioms(make_cyclic(1)));
  CHECK_NOTHROW(check_group_axioms(make_cyclic(12)));
  CHECK_NOTHROW(check_group_axioms(make_dihedral(3)));
  CHECK_NOTHROW(check_group_axioms(make_dihedral(8)));
  CHECK_NOTHROW(check_group_axioms(make_dicyclic(2)));
  CHECK_NOTHROW(check_group_axioms(make_dicyclic(5)));
  CHECK_NOTHROW(check_group_axioms(make_symmetric(4)));
  CHECK_NOTHROW(check_group_axioms(make_alternating(5)));
  CHECK_NOTHROW(check_group_axioms(
      make_direct_product(make_dicyclic(2), make_cyclic(3))));
  CHECK_NOTHROW(check_group_axioms(make_symmetric(5)));  // sampled triples
}

TEST_CASE("factory orders match the iteration oracle") {
  auto check_orders = [](const Group& g) {
    CHECK(g.orders() == testing::orders_by_iteration(g));
  };
  check_orders(make_cyclic(60));
  check_orders(make_dihedral(12));
  check_orders(make_dicyclic(6));
  check_orders(make_symmetric(5));
  check_orders(make_alternating(6));
  check_orders(make_direct_product(make_dihedral(4), make_cyclic(9)));
}
