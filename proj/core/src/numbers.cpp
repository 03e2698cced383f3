#include "ordsup/numbers.hpp"

#include <numeric>
#include <stdexcept>
#include <string>

namespace ordsup {

long long euler_phi(long long m) {
  if (m < 1) throw std::invalid_argument("euler_phi: m must be positive");
  long long result = m;
  long long n = m;
  for (long long p = 2; p * p <= n; ++p) {
    if (n % p == 0) {
      result -= result / p;
      while (n % p == 0) n /= p;
    }
  }
  if (n > 1) result -= result / n;
  return result;
}

bool is_prime(long long n) {
  if (n < 2) return false;
  for (long long p = 2; p * p <= n; ++p) {
    if (n % p == 0) return false;
  }
  return true;
}

bool is_power_of_two(long long n) { return n > 0 && (n & (n - 1)) == 0; }

std::vector<std::pair<long long, int>> factorize(long long n) {
  if (n < 1) throw std::invalid_argument("factorize: n must be positive");
  std::vector<std::pair<long long, int>> factors;
  for (long long p = 2; p * p <= n; ++p) {
    if (n % p == 0) {
      int e = 0;
      while (n % p == 0) {
        n /= p;
        ++e;
      }
      factors.emplace_back(p, e);
    }
  }
  if (n > 1) factors.emplace_back(n, 1);
  return factors;
}

std::vector<long long> prime_divisors(long long n) {
  std::vector<long long> primes;
  for (const auto& [p, e] : factorize(n)) primes.push_back(p);
  return primes;
}

long long p_part(long long n, long long p) {
  long long part = 1;
  while (n % p == 0) {
    n /= p;
    part *= p;
  }
  return part;
}

long long factorial(int n) {
  if (n < 0 || n > 20) throw std::invalid_argument("factorial: need 0 <= n <= 20");
  long long f = 1;
  for (int i = 2; i <= n; ++i) f *= i;
  return f;
}

void for_each_partition(int n,
                        const std::function<void(const std::vector<int>&)>& fn) {
  if (n < 0) throw std::invalid_argument("for_each_partition: n must be >= 0");
  if (n == 0) {
    fn({});
    return;
  }
  // Descending-first recursive generation: parts non-increasing.
  std::vector<int> parts;
  std::function<void(int, int)> rec = [&](int remaining, int max_part) {
    if (remaining == 0) {
      fn(parts);
      return;
    }
    for (int part = std::min(remaining, max_part); part >= 1; --part) {
      parts.push_back(part);
      rec(remaining - part, part);
      parts.pop_back();
    }
  };
  rec(n, n);
}

long long conjugacy_class_size(int n, const CycleType& type) {
  if (n < 1 || n > 20)
    throw std::invalid_argument("conjugacy_class_size: need 1 <= n <= 20");
  long long covered = 0;
  std::vector<bool> seen(n + 1, false);
  for (const auto& [r, m] : type) {
    if (r < 1 || r > n || m < 1)
      throw std::invalid_argument("conjugacy_class_size: malformed cycle type");
    if (seen[r])
      throw std::invalid_argument("conjugacy_class_size: repeated cycle length");
    seen[r] = true;
    covered += static_cast<long long>(r) * m;
  }
  if (covered != n)
    throw std::invalid_argument("conjugacy_class_size: lengths do not sum to n");
  long long size = factorial(n);
  for (const auto& [r, m] : type) {
    for (int k = 0; k < m; ++k) size /= r;
    for (int k = 2; k <= m; ++k) size /= k;
  }
  return size;
}

}  // namespace ordsup
