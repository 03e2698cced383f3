#include <doctest.h>

#include "ordsup/errors.hpp"
#include "ordsup/perm.hpp"

using namespace ordsup;

TEST_CASE("compose applies right factor first") {
  // f = (1 2), g = (2 3) as 0-based perms on 3 points.
  Perm f = {1, 0, 2};
  Perm g = {0, 2, 1};
  Perm fg = compose(f, g);  // x -> f(g(x))
  CHECK(fg == Perm{1, 2, 0});
  CHECK(compose(f, inverse_perm(f)) == identity_perm(3));
}

TEST_CASE("perm order and parity") {
  CHECK(perm_order(identity_perm(5)) == 1);
  CHECK(perm_order(Perm{1, 2, 0, 4, 3}) == 6);  // 3-cycle * 2-cycle
  CHECK(is_even_perm(identity_perm(4)));
  CHECK_FALSE(is_even_perm(Perm{1, 0, 2}));
  CHECK(is_even_perm(Perm{1, 2, 0}));
}

TEST_CASE("cycle notation rendering") {
  CHECK(cycle_notation(identity_perm(4)) == "e");
  CHECK(cycle_notation(Perm{1, 2, 0}) == "(1 2 3)");
  CHECK(cycle_notation(Perm{1, 0, 3, 2}) == "(1 2)(3 4)");
}

TEST_CASE("lehmer rank is the lexicographic index") {
  Perm p = identity_perm(4);
  long long rank = 0;
  do {
    CHECK(lehmer_rank(p) == rank);
    ++rank;
  } while (std::next_permutation(p.begin(), p.end()));
  CHECK(rank == 24);
}

TEST_CASE("cycle notation parsing") {
  ParsedGenerators parsed = parse_cycle_generators("(1 2 3)(4 5), (1 2)");
  REQUIRE(parsed.generators.size() == 2);
  CHECK(parsed.degree == 5);
  CHECK(parsed.generators[0][0] == 1);  // 1 -> 2
  CHECK(parsed.generators[0][2] == 0);  // 3 -> 1
  CHECK(parsed.generators[0][3] == 4);  // 4 -> 5
  CHECK(parsed.generators[1][0] == 1);
  CHECK(parsed.generators[1][2] == 2);  // fixed point

  SUBCASE("errors carry byte offsets") {
    try {
      parse_cycle_generators("(1 2 x)");
      FAIL("expected ParseError");
    } catch (const ParseError& e) {
      CHECK(e.offset() == 5);
    }
    CHECK_THROWS_AS(parse_cycle_generators("(1 2"), ParseError);
    CHECK_THROWS_AS(parse_cycle_generators("(1 2)(2 3), (1 1)"), ParseError);
    CHECK_THROWS_AS(parse_cycle_generators(""), ParseError);
    CHECK_THROWS_AS(parse_cycle_generators("(1 2)(1 3)"), ParseError);
  }
}
