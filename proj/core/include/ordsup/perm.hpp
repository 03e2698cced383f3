#pragma once

#include <string>
#include <string_view>
#include <vector>

namespace ordsup {

// A permutation of {0..n-1} stored as its image vector.
using Perm = std::vector<int>;

Perm identity_perm(int n);

// Apply g first, then f: (f * g)(x) = f(g(x)).
Perm compose(const Perm& f, const Perm& g);

Perm inverse_perm(const Perm& p);

// lcm of cycle lengths.
long long perm_order(const Perm& p);

bool is_even_perm(const Perm& p);

// 1-based cycle notation, fixed points omitted; "e" for the identity.
std::string cycle_notation(const Perm& p);

// Lexicographic rank of p among all permutations of its degree.
long long lehmer_rank(const Perm& p);

struct ParsedGenerators {
  std::vector<Perm> generators;
  int degree = 0;
};

// Parses "(1 2 3)(4 5), (1 2)": comma-separated generators, each a product
// of parenthesized cycles of whitespace-separated 1-based points, fixed
// points omitted. Degree = largest point mentioned. Throws ParseError with
// a byte offset on malformed input.
ParsedGenerators parse_cycle_generators(std::string_view text);

}  // namespace ordsup
