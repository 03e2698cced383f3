#include <doctest.h>

#include <random>
#include <set>

#include "ordsup/errors.hpp"
#include "ordsup/families.hpp"
#include "ordsup/supergraph.hpp"
#include "test_support.hpp"

using namespace ordsup;

TEST_CASE("order supergraph construction") {
  SUBCASE("Z_p is complete") {
    SimpleGraph sg = order_supergraph(make_cyclic(7));
    CHECK(sg.is_complete());
    CHECK(sg.vertex_count() == 7);
  }
  SUBCASE("D8 is complete: orders 1, 2, 4 form a chain") {
    SimpleGraph sg = order_supergraph(make_dihedral(4));
    CHECK(sg.vertex_count() == 8);
    CHECK(sg.is_complete());
  }
  SUBCASE("Z6: the order-2 element misses the order-3 elements") {
    SimpleGraph sg = order_supergraph(make_cyclic(6));
    CHECK(sg.edge_count() == 13);
    CHECK_FALSE(sg.adjacent(3, 2));  // a^3 (order 2) vs a^2 (order 3)
    CHECK_FALSE(sg.adjacent(3, 4));
    CHECK(sg.adjacent(3, 1));  // 2 | 6
  }
  SUBCASE("identity vertex is universal, so S(G) is connected") {
    for (const Group& g : {make_dihedral(6), make_dicyclic(3), make_symmetric(4)}) {
      SimpleGraph sg = order_supergraph(g);
      CHECK(sg.degree(0) == sg.vertex_count() - 1);
      CHECK(components(sg).size() == 1);
    }
  }
  SUBCASE("vertex cap") {
    CHECK_THROWS_AS(order_supergraph(make_cyclic(100), 99), CapExceededError);
  }
}

TEST_CASE("quotient order graph") {
  SUBCASE("Z24 divisor structure") {
    QuotientOrderGraph q = order_quotient_graph(cyclic_order_profile(24));
    CHECK(q.orders() == std::vector<long long>{1, 2, 3, 4, 6, 8, 12, 24});
    std::vector<long long> weights;
    for (int i = 0; i < q.node_count(); ++i) weights.push_back(q.weight_at(i));
    CHECK(weights == std::vector<long long>{1, 1, 2, 2, 2, 4, 4, 8});
    auto idx = [&](long long d) {
      for (int i = 0; i < q.node_count(); ++i)
        if (q.order_at(i) == d) return i;
      return -1;
    };
    CHECK(q.adjacent(idx(8), idx(24)));
    CHECK_FALSE(q.adjacent(idx(8), idx(12)));
    CHECK(q.total_weight() == 24);
  }
  SUBCASE("D10: orders 1, 2, 5 with weights 1, 5, 4") {
    QuotientOrderGraph q = order_quotient_graph(dihedral_order_profile(5));
    CHECK(q.orders() == std::vector<long long>{1, 2, 5});
    CHECK(q.weight_of(2) == 5);
    CHECK(q.weight_of(5) == 4);
    CHECK(q.adjacent(0, 1));
    CHECK(q.adjacent(0, 2));
    CHECK_FALSE(q.adjacent(1, 2));
  }
  SUBCASE("node 1 is adjacent to every other node") {
    QuotientOrderGraph q = order_quotient_graph(symmetric_order_profile(6));
    for (int i = 1; i < q.node_count(); ++i) CHECK(q.adjacent(0, i));
  }
}

TEST_CASE("expansion blow-up") {
  SUBCASE("single node of weight 3 expands to K3") {
    OrderProfile p;
    p.add(1, 3);  // not a group profile; expansion is purely graph-level
    ExpandedGraph ex = expand(order_quotient_graph(p));
    CHECK(ex.graph.vertex_count() == 3);
    CHECK(ex.graph.is_complete());
  }
  SUBCASE("path of three weight-1 nodes expands to P3") {
    // Orders 2, 4, 8 form a chain 2|4|8: take 2 and 8 non-adjacent? They are
    // adjacent. Use orders 2, 6, 3: 2~6, 3~6, 2 and 3 non-adjacent.
    OrderProfile p;
    p.add(2, 1);
    p.add(3, 1);
    p.add(6, 1);
    ExpandedGraph ex = expand(order_quotient_graph(p));
    CHECK(ex.graph.vertex_count() == 3);
    CHECK(ex.graph.edge_count() == 2);
  }
  SUBCASE("edge with weights (2,1) expands to a triangle") {
    OrderProfile p;
    p.add(2, 2);
    p.add(4, 1);
    ExpandedGraph ex = expand(order_quotient_graph(p));
    CHECK(ex.graph.vertex_count() == 3);
    CHECK(ex.graph.edge_count() == 3);
  }
  SUBCASE("expansion cap") {
    OrderProfile p;
    p.add(1, 1);
    p.add(2, 100);
    CHECK_THROWS_AS(expand(order_quotient_graph(p), 50), CapExceededError);
  }
}

TEST_CASE("expansion is isomorphic to the direct supergraph (class signature)") {
  auto check_group = [](const Group& g) {
    SimpleGraph direct = order_supergraph(g);
    ClassSignature direct_sig = class_signature(direct, g.orders());
    ExpandedGraph ex = expand(order_quotient_graph(element_orders(g)));
    ClassSignature expanded_sig = class_signature(ex.graph, ex.vertex_orders);
    CHECK(direct_sig == expanded_sig);
  };
  check_group(make_dihedral(5));
  check_group(make_dihedral(6));
  check_group(make_dicyclic(3));
  check_group(make_cyclic(24));
  check_group(make_symmetric(4));
  check_group(make_alternating(5));
  check_group(make_direct_product(make_dicyclic(2), make_cyclic(3)));
}

TEST_CASE("class signature rejects non-modular partitions") {
  SimpleGraph p3(3);
  p3.add_edge(0, 1);
  p3.add_edge(1, 2);
  // Putting the two ends in one class: class {0,2} is not a clique.
  CHECK_THROWS_AS(class_signature(p3, {7, 8, 7}), std::logic_error);
  // Mixed adjacency between classes {0,1} and {2}.
  CHECK_THROWS_AS(class_signature(p3, {7, 7, 8}), std::logic_error);
}

TEST_CASE("blown-up component cycle rule matches expansion") {
  SUBCASE("stated cases") {
    OrderProfile single;
    single.add(5, 3);
    QuotientOrderGraph q1 = order_quotient_graph(single);
    CHECK(blown_up_component_has_cycle(q1, {0}));

    OrderProfile edge;
    edge.add(2, 2);
    edge.add(4, 1);
    QuotientOrderGraph q2 = order_quotient_graph(edge);
    CHECK(blown_up_component_has_cycle(q2, {0, 1}));

    OrderProfile path;
    path.add(2, 1);
    path.add(3, 1);
    path.add(6, 1);
    QuotientOrderGraph q3 = order_quotient_graph(path);
    CHECK_FALSE(blown_up_component_has_cycle(q3, {0, 1, 2}));
  }

  SUBCASE("500 random weighted divisibility graphs vs expansion") {
    std::mt19937 rng(0x5eed42);
    int cyclic_seen = 0;
    for (int trial = 0; trial < 500; ++trial) {
      // Random node set of distinct orders <= 60, random weights 1..4.
      OrderProfile p;
      int nodes = 2 + static_cast<int>(rng() % 7);
      std::set<long long> used;
      for (int i = 0; i < nodes; ++i) {
        long long d = 1 + rng() % 60;
        if (!used.insert(d).second) continue;
        p.add(d, 1 + rng() % 4);
      }
      QuotientOrderGraph q = order_quotient_graph(p);
      ExpandedGraph ex = expand(q);
      // Map each quotient component to the expansion vertices it covers.
      SimpleGraph qg = q.as_graph();
      for (const VertexSet& comp : components(qg)) {
        bool predicted = blown_up_component_has_cycle(q, comp);
        std::set<long long> comp_orders;
        for (int i : comp) comp_orders.insert(q.order_at(i));
        VertexSet expansion_comp;
        for (int v = 0; v < ex.graph.vertex_count(); ++v)
          if (comp_orders.contains(ex.vertex_orders[v]))
            expansion_comp.push_back(v);
        bool actual = component_contains_cycle(ex.graph, expansion_comp);
        CHECK(predicted == actual);
        if (actual) ++cyclic_seen;
      }
    }
    CHECK(cyclic_seen > 100);  // the corpus exercises both outcomes
  }
}

TEST_CASE("quotient JSON export") {
  QuotientOrderGraph q = order_quotient_graph(dihedral_order_profile(5));
  std::string json = quotient_to_json(q);
  CHECK(json.find("\"orders\"") != std::string::npos);
  CHECK(json.find("\"weights\"") != std::string::npos);
  CHECK(json.find("\"edges\"") != std::string::npos);
}
