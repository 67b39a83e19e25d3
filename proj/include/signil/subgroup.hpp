#pragma once

#include <cstdint>
#include <vector>

#include "bitset.hpp"
#include "errors.hpp"
#include "group.hpp"

namespace signil {

inline Bitset trivial_subgroup(const Group &G)
{
  Bitset b(G.order());
  b.set(0);
  return b;
}

inline Bitset full_subgroup(const Group &G)
{
  Bitset b(G.order());
  for (std::uint32_t i = 0; i < G.order(); ++i)
    b.set(i);
  return b;
}

// incremental closure: add_gen folds one more generator into the subgroup,
// reusing everything already built (Dimino-style, O(|result| * #gens) total)
class ClosureBuilder {
public:
  explicit ClosureBuilder(const Group &G) : _g(&G), _in(G.order())
  {
    _in.set(0);
    _elems.push_back(0);
  }

  void add_gen(std::uint16_t g)
  {
    if (_in.test(g)) {
      return;
    }
    _gens.push_back(g);
    _in.set(g);
    _elems.push_back(g);
    // earlier elements are closed under earlier gens, so one sweep that
    // multiplies everything by everything new saturates the closure
    std::size_t scan = 0;
    while (scan < _elems.size()) {
      std::uint16_t w = _elems[scan++];
      for (auto s : _gens) {
        std::uint16_t p = _g->mul(w, s);
        if (!_in.test(p)) {
          _in.set(p);
          _elems.push_back(p);
        }
      }
    }
  }

  const Bitset &set() const { return _in; }
  const std::vector<std::uint16_t> &elements() const { return _elems; }
  const std::vector<std::uint16_t> &gens() const { return _gens; }
  std::size_t size() const { return _elems.size(); }

private:
  const Group *_g;
  Bitset _in;
  std::vector<std::uint16_t> _elems;
  std::vector<std::uint16_t> _gens;
};

inline Bitset subgroup_generated(const Group &G,
                                 const std::vector<std::uint16_t> &gens)
{
  ClosureBuilder cb(G);
  for (auto g : gens)
    cb.add_gen(g);
  return cb.set();
}

inline Bitset cyclic_subgroup(const Group &G, std::uint16_t x)
{
  return subgroup_generated(G, {x});
}

inline Bitset join(const Group &G, const std::vector<std::uint16_t> &a_gens,
                   const std::vector<std::uint16_t> &b_gens)
{
  ClosureBuilder cb(G);
  for (auto g : a_gens)
    cb.add_gen(g);
  for (auto g : b_gens)
    cb.add_gen(g);
  return cb.set();
}

inline bool is_subgroup(const Group &G, const Bitset &S)
{
  if (!S.test(0))
    return false;
  auto elts = S.elements();
  for (auto a : elts)
    for (auto b : elts)
      if (!S.test(G.mul(a, b)))
        return false;
  return true;
}

// greedy: repeatedly adjoin a highest-order element not yet generated
inline std::vector<std::uint16_t> small_gens(const Group &G, const Bitset &S)
{
  ClosureBuilder cb(G);
  std::vector<std::uint16_t> out;
  auto elts = S.elements();
  while (cb.size() < elts.size()) {
    std::uint16_t best = 0;
    std::uint32_t best_ord = 0;
    for (auto e : elts)
      if (!cb.set().test(e) && G.elt_order(e) > best_ord) {
        best_ord = G.elt_order(e);
        best = e;
      }
    out.push_back(best);
    cb.add_gen(best);
  }
  if (out.empty())
    out.push_back(0);
  return out;
}

inline Bitset conjugate_subgroup(const Group &G, const Bitset &S,
                                 std::uint16_t g)
{
  Bitset out(G.order());
  for (auto s : S.elements())
    out.set(G.conj(s, g));
  return out;
}

// S^g == S iff every generator's conjugate lands back in S
inline bool normalizes(const Group &G,
                       const std::vector<std::uint16_t> &s_gens,
                       const Bitset &S, std::uint16_t g)
{
  for (auto z : s_gens)
    if (!S.test(G.conj(z, g)))
      return false;
  return true;
}

inline Bitset normalizer(const Group &G, const Bitset &S)
{
  auto sg = small_gens(G, S);
  Bitset out(G.order());
  for (std::uint32_t g = 0; g < G.order(); ++g)
    if (normalizes(G, sg, S, static_cast<std::uint16_t>(g)))
      out.set(g);
  return out;
}

inline bool is_normal_in(const Group &G, const Bitset &S,
                         const std::vector<std::uint16_t> &y_gens)
{
  auto sg = small_gens(G, S);
  for (auto g : y_gens)
    if (!normalizes(G, sg, S, g))
      return false;
  return true;
}

inline Bitset centralizer(const Group &G, const Bitset &S)
{
  auto sg = small_gens(G, S);
  Bitset out(G.order());
  for (std::uint32_t g = 0; g < G.order(); ++g) {
    bool ok = true;
    for (auto s : sg)
      if (G.mul(static_cast<std::uint16_t>(g), s)
          != G.mul(s, static_cast<std::uint16_t>(g))) {
        ok = false;
        break;
      }
    if (ok)
      out.set(g);
  }
  return out;
}

inline Bitset centre(const Group &G)
{
  return centralizer(G, full_subgroup(G));
}

// C_G(H/K) for K normal in H (as in a chief factor, where both are normal
// in G).  Checking generators of H suffices: [g, ab] = [g,b] [g,a]^b keeps
// the witness inside K.
inline Bitset centralizer_of_section(const Group &G, const Bitset &H,
                                     const Bitset &K)
{
  auto hg = small_gens(G, H);
  Bitset out(G.order());
  for (std::uint32_t g = 0; g < G.order(); ++g) {
    bool ok = true;
    for (auto h : hg)
      if (!K.test(G.comm(static_cast<std::uint16_t>(g), h))) {
        ok = false;
        break;
      }
    if (ok)
      out.set(g);
  }
  return out;
}

// smallest subgroup containing S and normalized by <y_gens>
inline Bitset normal_closure_in(const Group &G,
                                const std::vector<std::uint16_t> &y_gens,
                                const std::vector<std::uint16_t> &s_gens)
{
  ClosureBuilder cb(G);
  std::vector<std::uint16_t> work;
  for (auto s : s_gens) {
    cb.add_gen(s);
    work.push_back(s);
  }
  for (std::size_t i = 0; i < work.size(); ++i)
    for (auto y : y_gens) {
      std::uint16_t c = G.conj(work[i], y);
      if (!cb.set().test(c)) {
        cb.add_gen(c);
        work.push_back(c);
      }
    }
  return cb.set();
}

inline Bitset normal_closure(const Group &G,
                             const std::vector<std::uint16_t> &s_gens)
{
  return normal_closure_in(G, G.gens(), s_gens);
}

// largest subgroup of S normal in <y_gens>: shrink to a fixpoint
inline Bitset core_in(const Group &G, const Bitset &S,
                      const std::vector<std::uint16_t> &y_gens)
{
  Bitset K = S;
  bool changed = true;
  while (changed) {
    changed = false;
    for (auto g : y_gens) {
      Bitset c = conjugate_subgroup(G, K, g);
      c &= K;
      if (!(c == K)) {
        K = std::move(c);
        changed = true;
      }
    }
  }
  return K;
}

inline bool is_subnormal_in(const Group &G, const Bitset &S, const Bitset &Y,
                            const std::vector<std::uint16_t> &y_gens)
{
  auto sg = small_gens(G, S);
  Bitset K = Y;
  std::vector<std::uint16_t> kg = y_gens;
  while (true) {
    if (K == S)
      return true;
    Bitset next = normal_closure_in(G, kg, sg);
    if (next == K)
      return false;  // stuck above S
    K = std::move(next);
    kg = small_gens(G, K);
  }
}

inline bool is_subnormal(const Group &G, const Bitset &S)
{
  return is_subnormal_in(G, S, full_subgroup(G), G.gens());
}

inline bool is_abelian_subgroup(const Group &G, const Bitset &S)
{
  auto sg = small_gens(G, S);
  for (auto a : sg)
    for (auto b : sg)
      if (G.mul(a, b) != G.mul(b, a))
        return false;
  return true;
}

}  // namespace signil
