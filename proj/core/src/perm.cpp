#include "ordsup/perm.hpp"

#include <numeric>
#include <stdexcept>

#include "ordsup/errors.hpp"

namespace ordsup {

Perm identity_perm(int n) {
  Perm p(n);
  std::iota(p.begin(), p.end(), 0);
  return p;
}

Perm compose(const Perm& f, const Perm& g) {
  Perm result(f.size());
  for (std::size_t x = 0; x < f.size(); ++x) result[x] = f[g[x]];
  return result;
}

Perm inverse_perm(const Perm& p) {
  Perm inv(p.size());
  for (std::size_t x = 0; x < p.size(); ++x) inv[p[x]] = static_cast<int>(x);
  return inv;
}

long long perm_order(const Perm& p) {
  long long order = 1;
  std::vector<bool> seen(p.size(), false);
  for (std::size_t start = 0; start < p.size(); ++start) {
    if (seen[start]) continue;
    long long len = 0;
    std::size_t x = start;
    while (!seen[x]) {
      seen[x] = true;
      x = static_cast<std::size_t>(p[x]);
      ++len;
    }
    order = std::lcm(order, len);
  }
  return order;
}

bool is_even_perm(const Perm& p) {
  int transpositions = 0;
  std::vector<bool> seen(p.size(), false);
  for (std::size_t start = 0; start < p.size(); ++start) {
    if (seen[start]) continue;
    int len = 0;
    std::size_t x = start;
    while (!seen[x]) {
      seen[x] = true;
      x = static_cast<std::size_t>(p[x]);
      ++len;
    }
    transpositions += len - 1;
  }
  return transpositions % 2 == 0;
}

std::string cycle_notation(const Perm& p) {
  std::string out;
  std::vector<bool> seen(p.size(), false);
  for (std::size_t start = 0; start < p.size(); ++start) {
    if (seen[start] || p[start] == static_cast<int>(start)) continue;
    out += '(';
    std::size_t x = start;
    bool first = true;
    while (!seen[x]) {
      seen[x] = true;
      if (!first) out += ' ';
      out += std::to_string(x + 1);
      first = false;
      x = static_cast<std::size_t>(p[x]);
    }
    out += ')';
  }
  return out.empty() ? "e" : out;
}

long long lehmer_rank(const Perm& p) {
  const int n = static_cast<int>(p.size());
  long long rank = 0;
  long long fact = 1;
  for (int i = 2; i <= n; ++i) fact *= i;
  for (int i = 0; i < n; ++i) {
    fact /= (n - i);
    int smaller = 0;
    for (int j = i + 1; j < n; ++j)
      if (p[j] < p[i]) ++smaller;
    rank += smaller * fact;
  }
  return rank;
}

ParsedGenerators parse_cycle_generators(std::string_view text) {
  ParsedGenerators result;
  std::size_t pos = 0;
  const std::size_t end = text.size();

  auto skip_ws = [&] {
    while (pos < end && (text[pos] == ' ' || text[pos] == '\t')) ++pos;
  };

  // First pass: collect generators as lists of cycles of 1-based points.
  std::vector<std::vector<std::vector<int>>> raw_generators;
  int max_point = 0;

  while (true) {
    std::vector<std::vector<int>> cycles;
    skip_ws();
    if (pos >= end) throw ParseError("expected '(' to start a cycle", pos);
    while (pos < end && text[pos] == '(') {
      ++pos;  // consume '('
      std::vector<int> cycle;
      while (true) {
        skip_ws();
        if (pos >= end) throw ParseError("unterminated cycle", pos);
        if (text[pos] == ')') {
          ++pos;
          break;
        }
        if (text[pos] < '0' || text[pos] > '9')
          throw ParseError("expected point or ')'", pos);
        long long value = 0;
        while (pos < end && text[pos] >= '0' && text[pos] <= '9') {
          value = value * 10 + (text[pos] - '0');
          if (value > 1'000'000) throw ParseError("point out of range", pos);
          ++pos;
        }
        if (value < 1) throw ParseError("points are 1-based", pos - 1);
        cycle.push_back(static_cast<int>(value));
        max_point = std::max(max_point, static_cast<int>(value));
      }
      for (std::size_t i = 0; i < cycle.size(); ++i)
        for (std::size_t j = i + 1; j < cycle.size(); ++j)
          if (cycle[i] == cycle[j])
            throw ParseError("repeated point in cycle", pos - 1);
      if (!cycle.empty()) cycles.push_back(std::move(cycle));
      skip_ws();
    }
    if (cycles.empty())
      throw ParseError("generator has no non-trivial cycle", pos);
    raw_generators.push_back(std::move(cycles));
    skip_ws();
    if (pos >= end) break;
    if (text[pos] != ',')
      throw ParseError("expected ',' between generators", pos);
    ++pos;
  }

  if (max_point == 0) throw ParseError("no points given", 0);
  result.degree = max_point;
  for (const auto& cycles : raw_generators) {
    Perm p = identity_perm(max_point);
    for (const auto& cycle : cycles) {
      // Disjointness across cycles of one generator.
      for (std::size_t i = 0; i < cycle.size(); ++i) {
        int from = cycle[i] - 1;
        int to = cycle[(i + 1) % cycle.size()] - 1;
        if (p[from] != from)
          throw ParseError("cycles within a generator must be disjoint", 0);
        p[from] = to;
      }
    }
    result.generators.push_back(std::move(p));
  }
  return result;
}

}  // namespace ordsup
