#pragma once

#include <cstdint>
#include <utility>
#include <vector>

namespace signil {

// number theory on group and element orders (all <= 8192), trial division is plenty

inline bool is_prime(std::uint64_t n)
{
  if (n < 2)
    return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0)
      return false;
  return true;
}

inline std::vector<std::pair<std::uint32_t, int>> factor(std::uint64_t n)
{
  std::vector<std::pair<std::uint32_t, int>> out;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) {
      int e = 0;
      while (n % d == 0) {
        n /= d;
        ++e;
      }
      out.emplace_back(static_cast<std::uint32_t>(d), e);
    }
  }
  if (n > 1)
    out.emplace_back(static_cast<std::uint32_t>(n), 1);
  return out;
}

inline std::vector<std::uint32_t> prime_divisors(std::uint64_t n)
{
  std::vector<std::uint32_t> out;
  for (auto &[p, e] : factor(n))
    out.push_back(p);
  return out;
}

inline std::uint64_t p_part(std::uint64_t n, std::uint32_t p)
{
  std::uint64_t m = 1;
  while (n % p == 0) {
    n /= p;
    m *= p;
  }
  return m;
}

// largest divisor of n with prime support inside `primes`
inline std::uint64_t pi_part(std::uint64_t n,
                             const std::vector<std::uint32_t> &primes)
{
  std::uint64_t m = 1;
  for (auto p : primes)
    m *= p_part(n, p);
  return m;
}

} // namespace signil
