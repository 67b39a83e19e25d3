#pragma once

#include <algorithm>
#include <cstdint>
#include <optional>
#include <unordered_map>
#include <vector>

#include "arith.hpp"
#include "bitset.hpp"
#include "errors.hpp"
#include "group.hpp"
#include "subgroup.hpp"

namespace signil {

inline constexpr std::size_t kMaxJoinOps = 200000;

struct SubgroupLattice {
  std::vector<Bitset> members;               // sorted by (order, position)
  std::vector<std::vector<std::uint16_t>> gens;  // aligned with members
  std::vector<char> normal;                  // aligned with members
  std::size_t join_ops = 0;

  std::optional<std::size_t> index_of(const Bitset &S) const
  {
    for (std::size_t i = 0; i < members.size(); ++i)
      if (members[i] == S)
        return i;
    return std::nullopt;
  }
};

namespace detail {

inline void sort_lattice(const Group &G, SubgroupLattice &L)
{
  std::vector<std::size_t> idx(L.members.size());
  for (std::size_t i = 0; i < idx.size(); ++i)
    idx[i] = i;
  std::sort(idx.begin(), idx.end(), [&](std::size_t a, std::size_t b) {
    std::size_t ca = L.members[a].count(), cb = L.members[b].count();
    if (ca != cb)
      return ca < cb;
    return L.members[a].lex_before(L.members[b]);
  });
  SubgroupLattice out;
  out.join_ops = L.join_ops;
  for (auto i : idx) {
    out.members.push_back(std::move(L.members[i]));
    out.gens.push_back(std::move(L.gens[i]));
  }
  out.normal.resize(out.members.size());
  for (std::size_t i = 0; i < out.members.size(); ++i)
    out.normal[i] =
        is_normal_in(G, out.members[i], G.gens()) ? 1 : 0;
  L = std::move(out);
}

}  // namespace detail

// every subgroup, as joins of cyclic subgroups grown one generator at a time
inline SubgroupLattice all_subgroups(const Group &G,
                                     std::size_t max_join_ops = kMaxJoinOps)
{
  std::uint32_t n = G.order();

  // distinct cyclic subgroups, each tagged by a generator
  std::vector<std::pair<Bitset, std::uint16_t>> cyc;
  {
    std::unordered_map<Bitset, char, BitsetHash> seen;
    for (std::uint32_t x = 1; x < n; ++x) {
      Bitset c = cyclic_subgroup(G, static_cast<std::uint16_t>(x));
      if (!seen.contains(c)) {
        seen.emplace(c, 1);
        cyc.emplace_back(std::move(c), static_cast<std::uint16_t>(x));
      }
    }
  }

  SubgroupLattice L;
  std::unordered_map<Bitset, std::size_t, BitsetHash> index;
  auto add = [&](Bitset S, std::vector<std::uint16_t> g) {
    if (!index.contains(S)) {
      index.emplace(S, L.members.size());
      L.members.push_back(std::move(S));
      L.gens.push_back(std::move(g));
    }
  };
  add(trivial_subgroup(G), {0});
  for (const auto &[c, z] : cyc)
    add(c, {z});

  for (std::size_t i = 0; i < L.members.size(); ++i)
    for (const auto &[c, z] : cyc) {
      if (L.members[i].test(z) || c.subset_of(L.members[i]))
        continue;
      if (++L.join_ops > max_join_ops) {
        detail::sort_lattice(G, L);
        throw CapExceeded("subgroup join budget exhausted",
                          L.members.size());
      }
      ClosureBuilder cb(G);
      for (auto s : L.gens[i])
        cb.add_gen(s);
      cb.add_gen(z);
      std::vector<std::uint16_t> g = L.gens[i];
      g.push_back(z);
      add(cb.set(), std::move(g));
    }

  detail::sort_lattice(G, L);
  return L;
}

struct NormalSubgroups {
  std::vector<Bitset> members;  // sorted by (order, position), includes 1, G
  std::vector<std::vector<std::uint16_t>> gens;
};

// closures of unions of conjugacy classes, grown class by class
inline NormalSubgroups normal_subgroups(const Group &G)
{
  std::uint32_t n = G.order();
  std::vector<std::uint16_t> cls(n, 0);  // class id per element
  std::vector<std::uint16_t> cls_rep;
  {
    std::vector<char> done(n, 0);
    for (std::uint32_t x = 0; x < n; ++x)
      if (!done[x]) {
        std::uint16_t id = static_cast<std::uint16_t>(cls_rep.size());
        cls_rep.push_back(static_cast<std::uint16_t>(x));
        std::vector<std::uint16_t> work = {static_cast<std::uint16_t>(x)};
        done[x] = 1;
        cls[x] = id;
        for (std::size_t i = 0; i < work.size(); ++i)
          for (auto g : G.gens()) {
            std::uint16_t c = G.conj(work[i], g);
            if (!done[c]) {
              done[c] = 1;
              cls[c] = id;
              work.push_back(c);
            }
          }
      }
  }

  NormalSubgroups N;
  std::unordered_map<Bitset, std::size_t, BitsetHash> index;
  std::vector<std::vector<std::uint16_t>> gens_of;
  auto add = [&](Bitset S, std::vector<std::uint16_t> g) {
    if (!index.contains(S)) {
      index.emplace(S, N.members.size());
      N.members.push_back(std::move(S));
      gens_of.push_back(std::move(g));
    }
  };
  add(trivial_subgroup(G), {0});

  // adjoining one conjugacy class to a normal subgroup and closing up stays
  // normal, and every normal subgroup arises this way
  for (std::size_t i = 0; i < N.members.size(); ++i)
    for (std::size_t c = 1; c < cls_rep.size(); ++c) {
      if (N.members[i].test(cls_rep[c]))
        continue;
      ClosureBuilder cb(G);
      for (auto s : gens_of[i])
        cb.add_gen(s);
      cb.add_gen(cls_rep[c]);
      // close under conjugation as well
      std::vector<std::uint16_t> work = cb.gens();
      for (std::size_t w = 0; w < work.size(); ++w)
        for (auto g : G.gens()) {
          std::uint16_t x = G.conj(work[w], g);
          if (!cb.set().test(x)) {
            cb.add_gen(x);
            work.push_back(x);
          }
        }
      std::vector<std::uint16_t> ng = gens_of[i];
      ng.push_back(cls_rep[c]);
      add(cb.set(), std::move(ng));
    }

  std::vector<std::size_t> idx(N.members.size());
  for (std::size_t i = 0; i < idx.size(); ++i)
    idx[i] = i;
  std::sort(idx.begin(), idx.end(), [&](std::size_t a, std::size_t b) {
    std::size_t ca = N.members[a].count(), cb = N.members[b].count();
    if (ca != cb)
      return ca < cb;
    return N.members[a].lex_before(N.members[b]);
  });
  NormalSubgroups out;
  for (auto i : idx) {
    out.members.push_back(std::move(N.members[i]));
    out.gens.push_back(small_gens(G, out.members.back()));
  }
  return out;
}

// minimal members among the normal subgroups strictly above K; when K is
// maximal normal this is the whole group
inline std::vector<Bitset> minimal_normal_over(const Group &G,
                                               const NormalSubgroups &N,
                                               const Bitset &K)
{
  std::vector<const Bitset *> above;
  for (const auto &M : N.members)
    if (K.subset_of(M) && !(M == K))
      above.push_back(&M);
  std::vector<Bitset> out;
  for (auto M : above) {
    bool minimal = true;
    for (auto M2 : above)
      if (M2 != M && M2->subset_of(*M) && !(*M2 == *M)) {
        minimal = false;
        break;
      }
    if (minimal)
      out.push_back(*M);
  }
  return out;
}

struct ChiefFactor {
  Bitset lower;          // K
  Bitset upper;          // H, with H/K a chief factor
  Bitset centralizer;    // C_G(H/K)
  std::uint64_t factor_order = 0;
};

struct ChiefSeries {
  std::vector<ChiefFactor> factors;  // bottom up
};

inline ChiefSeries chief_series(const Group &G, const NormalSubgroups &N)
{
  ChiefSeries S;
  Bitset K = trivial_subgroup(G);
  Bitset top = full_subgroup(G);
  while (!(K == top)) {
    std::vector<Bitset> mins;
    for (const auto &M : N.members)
      if (K.subset_of(M) && !(M == K)) {
        bool minimal = true;
        for (const auto &M2 : N.members)
          if (K.subset_of(M2) && !(M2 == K) && !(M2 == M)
              && M2.subset_of(M)) {
            minimal = false;
            break;
          }
        if (minimal)
          mins.push_back(M);
      }
    if (mins.empty())
      fail(errc::internal_inconsistency, "no step above in chief series");
    // deterministic pick: smallest order, then lex
    const Bitset *pick = &mins[0];
    for (const auto &M : mins) {
      if (M.count() < pick->count()
          || (M.count() == pick->count() && M.lex_before(*pick)))
        pick = &M;
    }
    ChiefFactor f;
    f.lower = K;
    f.upper = *pick;
    f.factor_order = pick->count() / K.count();
    f.centralizer = centralizer_of_section(G, f.upper, f.lower);
    K = *pick;
    S.factors.push_back(std::move(f));
  }
  return S;
}

inline std::vector<std::size_t> maximal_subgroups(const SubgroupLattice &L)
{
  std::vector<std::size_t> out;
  if (L.members.empty())
    return out;
  std::size_t full = L.members.size() - 1;
  for (std::size_t i = 0; i < L.members.size(); ++i) {
    if (i == full)
      continue;
    bool maximal = true;
    for (std::size_t j = 0; j < L.members.size(); ++j)
      if (j != i && j != full && L.members[i].subset_of(L.members[j])
          && !(L.members[j] == L.members[i])) {
        maximal = false;
        break;
      }
    if (maximal)
      out.push_back(i);
  }
  return out;
}

// grow a p-subgroup inside its normalizer until the index is prime to p
inline Bitset sylow_subgroup(const Group &G, std::uint32_t p)
{
  std::uint64_t target = p_part(G.order(), p);
  Bitset P = trivial_subgroup(G);
  std::vector<std::uint16_t> pgens;
  while (P.count() < target) {
    Bitset Nm = normalizer(G, P);
    // an element of order p in N(P)/P pulls back to a p-element of N(P)\P
    std::uint16_t pick = 0xffff;
    for (auto x : Nm.elements()) {
      if (P.test(x))
        continue;
      std::uint32_t o = G.elt_order(x);
      std::uint64_t pp = p_part(o, p);
      if (pp > 1) {
        std::uint16_t y = G.pow(x, o / pp);  // p-element
        if (!P.test(y)) {
          pick = y;
          break;
        }
      }
    }
    if (pick == 0xffff)
      fail(errc::internal_inconsistency, "sylow growth stalled");
    ClosureBuilder cb(G);
    for (auto g : pgens)
      cb.add_gen(g);
    cb.add_gen(pick);
    pgens.push_back(pick);
    P = cb.set();
  }
  return P;
}

inline Bitset o_p(const Group &G, std::uint32_t p)
{
  return core_in(G, sylow_subgroup(G, p), G.gens());
}

// largest normal subgroup with order supported in the given primes
inline Bitset o_pi(const Group &G, const NormalSubgroups &N,
                   const std::vector<std::uint32_t> &primes)
{
  auto supported = [&](std::uint64_t n) {
    for (auto [p, e] : factor(n))
      if (std::find(primes.begin(), primes.end(), p) == primes.end())
        return false;
    return true;
  };
  const Bitset *best = nullptr;
  for (const auto &M : N.members)
    if (supported(M.count()) && (!best || M.count() > best->count()))
      best = &M;
  return *best;  // trivial subgroup always qualifies
}

inline Bitset frattini(const Group &G, const SubgroupLattice &L)
{
  Bitset out = full_subgroup(G);
  for (auto i : maximal_subgroups(L))
    out &= L.members[i];
  return out;
}

// normal closure of the commutators of generator pairs
inline Bitset derived_subgroup(const Group &G)
{
  std::vector<std::uint16_t> comms;
  Bitset seen(G.order());
  for (auto a : G.gens())
    for (auto b : G.gens()) {
      std::uint16_t c = G.comm(a, b);
      if (!seen.test(c)) {
        seen.set(c);
        comms.push_back(c);
      }
    }
  return normal_closure(G, comms);
}

inline bool is_nilpotent_group(const Group &G)
{
  // all Sylow subgroups normal
  for (auto p : prime_divisors(G.order())) {
    Bitset P = sylow_subgroup(G, p);
    if (!is_normal_in(G, P, G.gens()))
      return false;
  }
  return true;
}

inline bool is_soluble_group(const Group &G)
{
  Bitset D = full_subgroup(G);
  while (true) {
    if (D.count() == 1)
      return true;
    auto [H, inc] = materialize(G, D);
    Bitset Dh = derived_subgroup(H);
    if (Dh.count() == D.count())
      return false;
    Bitset next(G.order());
    for (auto x : Dh.elements())
      next.set(inc(x));
    D = std::move(next);
  }
}

// join of the O_p(G): the largest normal nilpotent subgroup
inline Bitset fitting(const Group &G)
{
  std::vector<std::uint16_t> gens;
  for (auto p : prime_divisors(G.order())) {
    Bitset P = o_p(G, p);
    for (auto e : small_gens(G, P))
      gens.push_back(e);
  }
  return subgroup_generated(G, gens);
}

inline Bitset hypercentre(const Group &G)
{
  Bitset Z = trivial_subgroup(G);
  while (true) {
    auto [Q, proj] = quotient(G, Z);
    Bitset zq = centre(Q);
    if (zq.count() == 1)
      return Z;
    Bitset next(G.order());
    for (std::uint32_t g = 0; g < G.order(); ++g)
      if (zq.test(proj(static_cast<std::uint16_t>(g))))
        next.set(g);
    Z = std::move(next);
  }
}

}  // namespace signil
