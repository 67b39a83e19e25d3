#pragma once

#include <bit>
#include <cstddef>
#include <cstdint>
#include <vector>

namespace signil {

// membership mask over the element indices 0..n-1 of one parent group
class Bitset {
public:
  Bitset() = default;

  explicit Bitset(std::size_t universe)
    : _n(universe), _w((universe + 63u) >> 6, 0u)
  {}

  std::size_t universe() const { return _n; }

  bool test(std::size_t i) const { return (_w[i >> 6] >> (i & 63u)) & 1u; }

  void set(std::size_t i) { _w[i >> 6] |= std::uint64_t{1} << (i & 63u); }

  void reset(std::size_t i) { _w[i >> 6] &= ~(std::uint64_t{1} << (i & 63u)); }

  std::size_t count() const
  {
    std::size_t c = 0;
    for (auto w : _w)
      c += static_cast<std::size_t>(std::popcount(w));
    return c;
  }

  bool none() const
  {
    for (auto w : _w)
      if (w)
        return false;
    return true;
  }

  bool subset_of(const Bitset &o) const
  {
    for (std::size_t i = 0; i < _w.size(); ++i)
      if (_w[i] & ~o._w[i])
        return false;
    return true;
  }

  bool intersects(const Bitset &o) const
  {
    for (std::size_t i = 0; i < _w.size(); ++i)
      if (_w[i] & o._w[i])
        return true;
    return false;
  }

  Bitset &operator&=(const Bitset &o)
  {
    for (std::size_t i = 0; i < _w.size(); ++i)
      _w[i] &= o._w[i];
    return *this;
  }

  Bitset &operator|=(const Bitset &o)
  {
    for (std::size_t i = 0; i < _w.size(); ++i)
      _w[i] |= o._w[i];
    return *this;
  }

  friend Bitset operator&(Bitset a, const Bitset &b) { a &= b; return a; }
  friend Bitset operator|(Bitset a, const Bitset &b) { a |= b; return a; }

  bool operator==(const Bitset &o) const = default;

  // deterministic tie-break order: at the first element index where membership
  // differs, the set containing it comes first
  bool lex_before(const Bitset &o) const
  {
    for (std::size_t i = 0; i < _w.size(); ++i) {
      std::uint64_t d = _w[i] ^ o._w[i];
      if (d)
        return (_w[i] >> std::countr_zero(d)) & 1u;
    }
    return false;
  }

  // first set index >= from, or -1
  int next(std::size_t from) const
  {
    if (from >= _n)
      return -1;
    std::size_t wi = from >> 6;
    std::uint64_t w = _w[wi] & (~std::uint64_t{0} << (from & 63u));
    while (true) {
      if (w)
        return static_cast<int>((wi << 6) + std::countr_zero(w));
      if (++wi == _w.size())
        return -1;
      w = _w[wi];
    }
  }

  std::vector<std::uint16_t> elements() const
  {
    std::vector<std::uint16_t> out;
    out.reserve(count());
    for (int i = next(0); i >= 0; i = next(static_cast<std::size_t>(i) + 1))
      out.push_back(static_cast<std::uint16_t>(i));
    return out;
  }

  std::size_t hash() const
  {
    std::uint64_t h = 0xcbf29ce484222325ull ^ _n;
    for (auto w : _w) {
      h ^= w;
      h *= 0x100000001b3ull;
    }
    return static_cast<std::size_t>(h);
  }

private:
  std::size_t _n = 0;
  std::vector<std::uint64_t> _w;
};

struct BitsetHash {
  std::size_t operator()(const Bitset &b) const { return b.hash(); }
};

} // namespace signil
