#pragma once

#include <functional>
#include <utility>
#include <vector>

namespace ordsup {

long long euler_phi(long long m);

bool is_prime(long long n);

bool is_power_of_two(long long n);

// Prime factorization as (p, exponent) pairs, p ascending.
std::vector<std::pair<long long, int>> factorize(long long n);

std::vector<long long> prime_divisors(long long n);

// Largest power of p dividing n.
long long p_part(long long n, long long p);

long long factorial(int n);  // n <= 20

// Calls fn once per partition of n, parts non-increasing, in a fixed order.
void for_each_partition(int n,
                        const std::function<void(const std::vector<int>&)>& fn);

// A cycle type for S_n: (cycle length r, multiplicity m_r), r distinct.
using CycleType = std::vector<std::pair<int, int>>;

// Size of the S_n conjugacy class with the given cycle type:
// n! / prod_r (r^{m_r} * m_r!). Throws std::invalid_argument if the type is
// malformed or does not sum to n.
long long conjugacy_class_size(int n, const CycleType& type);

}  // namespace ordsup
