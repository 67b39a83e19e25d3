#pragma once

#include <algorithm>
#include <cstdint>
#include <string>
#include <vector>

#include "arith.hpp"
#include "errors.hpp"

namespace signil {

// A partition of the set of all primes: finitely many explicit blocks plus a
// rule for everything left over.  Blocks are identified by a BlockId:
//   0..k-1    the explicit blocks, in declaration order
//   -1        the single co-block of the remainder
//   -(p+2)    the remainder singleton {p}
using BlockId = std::int64_t;

inline constexpr BlockId kCoblock = -1;

enum class RemainderPolicy { singletons, coblock };

inline BlockId singleton_block(std::uint32_t p)
{
  return -static_cast<BlockId>(p) - 2;
}

inline std::uint32_t singleton_prime(BlockId b)
{
  return static_cast<std::uint32_t>(-b - 2);
}

// explicit blocks first, then remainder singletons by prime, co-block last
inline bool block_less(BlockId a, BlockId b)
{
  auto rank = [](BlockId x) { return x >= 0 ? 0 : (x == kCoblock ? 2 : 1); };
  int ra = rank(a), rb = rank(b);
  if (ra != rb)
    return ra < rb;
  if (ra == 0)
    return a < b;
  if (ra == 1)
    return singleton_prime(a) < singleton_prime(b);
  return false;
}

class PrimePartition {
public:
  PrimePartition() = default;

  PrimePartition(std::vector<std::vector<std::uint32_t>> blocks,
                 RemainderPolicy rest)
    : _blocks(std::move(blocks)), _rest(rest)
  {
    for (auto &b : _blocks) {
      std::sort(b.begin(), b.end());
      for (auto p : b)
        if (!is_prime(p))
          fail(errc::semantic_error,
               std::to_string(p) + " is not a prime");
    }
    for (std::size_t i = 0; i < _blocks.size(); ++i)
      for (std::size_t j = i + 1; j < _blocks.size(); ++j)
        for (auto p : _blocks[i])
          if (std::find(_blocks[j].begin(), _blocks[j].end(), p)
              != _blocks[j].end())
            fail(errc::overlap_error,
                 "prime " + std::to_string(p) + " appears in two blocks");
  }

  // all singletons
  static PrimePartition sigma1()
  {
    return PrimePartition({}, RemainderPolicy::singletons);
  }

  // {pi, pi'}
  static PrimePartition pi(std::vector<std::uint32_t> primes)
  {
    return PrimePartition({std::move(primes)}, RemainderPolicy::coblock);
  }

  // {{p_1}, ..., {p_n}, pi'}
  static PrimePartition pi1(const std::vector<std::uint32_t> &primes)
  {
    std::vector<std::vector<std::uint32_t>> blocks;
    for (auto p : primes)
      blocks.push_back({p});
    return PrimePartition(std::move(blocks), RemainderPolicy::coblock);
  }

  std::size_t explicit_count() const { return _blocks.size(); }

  const std::vector<std::uint32_t> &explicit_block(std::size_t i) const
  {
    return _blocks[i];
  }

  RemainderPolicy remainder() const { return _rest; }

  BlockId block_of(std::uint32_t p) const
  {
    for (std::size_t i = 0; i < _blocks.size(); ++i)
      if (std::find(_blocks[i].begin(), _blocks[i].end(), p)
          != _blocks[i].end())
        return static_cast<BlockId>(i);
    return _rest == RemainderPolicy::coblock ? kCoblock : singleton_block(p);
  }

  std::string label(BlockId b) const
  {
    if (b == kCoblock)
      return "rest";
    if (b < 0)
      return "{" + std::to_string(singleton_prime(b)) + "}";
    std::string out = "{";
    const auto &blk = _blocks[static_cast<std::size_t>(b)];
    for (std::size_t i = 0; i < blk.size(); ++i) {
      if (i)
        out += ",";
      out += std::to_string(blk[i]);
    }
    return out + "}";
  }

  // stable text form; parse_sigma_spec accepts it back
  std::string canonical() const
  {
    if (_blocks.empty() && _rest == RemainderPolicy::singletons)
      return "singletons";
    std::string out = "blocks:";
    for (std::size_t i = 0; i < _blocks.size(); ++i)
      out += label(static_cast<BlockId>(i));
    out += ";rest:";
    out += _rest == RemainderPolicy::coblock ? "coblock" : "singletons";
    return out;
  }

  bool operator==(const PrimePartition &o) const = default;

private:
  std::vector<std::vector<std::uint32_t>> _blocks;
  RemainderPolicy _rest = RemainderPolicy::singletons;
};

// block ids meeting the prime divisors of n, in block order
inline std::vector<BlockId> sigma_of(std::uint64_t n, const PrimePartition &s)
{
  std::vector<BlockId> out;
  for (auto p : prime_divisors(n)) {
    BlockId b = s.block_of(p);
    if (std::find(out.begin(), out.end(), b) == out.end())
      out.push_back(b);
  }
  std::sort(out.begin(), out.end(), block_less);
  return out;
}

inline bool sigma_primary_order(std::uint64_t n, const PrimePartition &s)
{
  return sigma_of(n, s).size() <= 1;
}

// largest divisor of n supported on block b
inline std::uint64_t sigma_block_part(std::uint64_t n, const PrimePartition &s,
                                      BlockId b)
{
  std::uint64_t r = 1;
  for (auto [p, e] : factor(n))
    if (s.block_of(p) == b)
      for (int i = 0; i < e; ++i)
        r *= p;
  return r;
}

} // namespace signil
