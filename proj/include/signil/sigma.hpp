#pragma once

#include <algorithm>
#include <cstdint>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "signil/arith.hpp"
#include "signil/bitset.hpp"
#include "signil/errors.hpp"
#include "signil/group.hpp"
#include "signil/lattice.hpp"
#include "signil/partition.hpp"
#include "signil/subgroup.hpp"

namespace signil {

struct AnalysisCaps {
  std::uint32_t max_order = kMaxOrder;
  std::size_t max_join_ops = kMaxJoinOps;
  std::size_t max_hall_families = 10000;
  std::size_t max_subgroups = 0;  // 0 = unlimited
};

namespace detail {

// per-element classification against a partition: which block the element's
// order lives in, if any single one
inline constexpr std::int64_t kEltIdentity = -1000000;
inline constexpr std::int64_t kEltMixed = -1000001;

inline std::vector<std::int64_t> element_blocks(const Group &G,
                                                const PrimePartition &sigma)
{
  std::vector<std::int64_t> cls(G.order());
  for (std::uint32_t x = 0; x < G.order(); ++x) {
    auto bs = sigma_of(G.elt_order(static_cast<std::uint16_t>(x)), sigma);
    if (bs.empty())
      cls[x] = kEltIdentity;
    else if (bs.size() == 1)
      cls[x] = bs[0];
    else
      cls[x] = kEltMixed;
  }
  return cls;
}

// A group is sigma-nilpotent exactly when, for every block meeting its order,
// the set of elements primary for that block is closed under the product (it
// is then the normal Hall subgroup for the block, and the group is the direct
// product of those).
inline bool sigma_nilpotent_elements(const Group &G, const PrimePartition &sigma,
                                     const std::vector<std::int64_t> &cls,
                                     const std::vector<std::uint16_t> &elems,
                                     std::uint64_t order)
{
  auto blocks = sigma_of(order, sigma);
  if (blocks.size() <= 1)
    return true;
  for (BlockId b : blocks) {
    Bitset in(G.order());
    std::vector<std::uint16_t> part;
    for (auto x : elems)
      if (cls[x] == b || cls[x] == kEltIdentity) {
        in.set(x);
        part.push_back(x);
      }
    for (auto x : part)
      for (auto y : part)
        if (!in.test(G.mul(x, y)))
          return false;
    if (part.size() != sigma_block_part(order, sigma, b))
      fail(errc::internal_inconsistency,
           "closed primary part has wrong order for block " + sigma.label(b));
  }
  return true;
}

}  // namespace detail

inline bool sigma_nilpotent_group(const Group &G, const PrimePartition &sigma)
{
  if (sigma_primary_order(G.order(), sigma))
    return true;
  auto cls = detail::element_blocks(G, sigma);
  std::vector<std::uint16_t> all(G.order());
  for (std::uint32_t x = 0; x < G.order(); ++x)
    all[x] = static_cast<std::uint16_t>(x);
  return detail::sigma_nilpotent_elements(G, sigma, cls, all, G.order());
}

// classical nilpotency of a subgroup: the p-elements must be closed for
// every p dividing the order (they then form the normal Sylow subgroups)
inline bool is_nilpotent_subgroup(const Group &G, const Bitset &U)
{
  std::uint64_t n = U.count();
  auto f = factor(n);
  if (f.size() <= 1)
    return true;
  auto elems = U.elements();
  for (auto [p, e] : f) {
    Bitset in(G.order());
    std::vector<std::uint16_t> part;
    for (auto x : elems) {
      std::uint64_t o = G.elt_order(x);
      if (o == p_part(o, p)) {
        in.set(x);
        part.push_back(x);
      }
    }
    for (auto a : part)
      for (auto b : part)
        if (!in.test(G.mul(a, b)))
          return false;
  }
  return true;
}

struct HallMember {
  BlockId block;
  Bitset subgroup;
  std::vector<std::uint16_t> gens;
  bool normal = false;
};

struct HallSigmaSet {
  std::vector<HallMember> members;  // one per block of sigma(G), block order
};

// Shared computation context for one (group, partition) pair.  Lattice,
// normal subgroups, chief series and the various sigma-objects are computed
// lazily and memoized; subgroup arguments are element sets over G.
class SigmaAnalysis {
public:
  SigmaAnalysis(const Group &G, PrimePartition sigma, AnalysisCaps caps = {})
      : _g(&G), _sigma(std::move(sigma)), _caps(caps)
  {
    if (G.order() > _caps.max_order)
      throw CapExceeded("order " + std::to_string(G.order()) +
                            " exceeds analysis cap " +
                            std::to_string(_caps.max_order),
                        G.order());
  }

  const Group &group() const { return *_g; }
  const PrimePartition &sigma() const { return _sigma; }
  const AnalysisCaps &caps() const { return _caps; }

  const SubgroupLattice &lattice()
  {
    if (!_lat) {
      _lat = all_subgroups(*_g, _caps.max_join_ops);
      if (_caps.max_subgroups && _lat->members.size() > _caps.max_subgroups)
        throw CapExceeded("subgroup lattice has "
                              + std::to_string(_lat->members.size())
                              + " members, cap "
                              + std::to_string(_caps.max_subgroups),
                          _lat->members.size());
    }
    return *_lat;
  }

  // install a lattice computed elsewhere (e.g. transferred from a parent
  // group through an inclusion or projection)
  void adopt_lattice(SubgroupLattice l) { _lat = std::move(l); }
  bool has_lattice() const { return _lat.has_value(); }

  const NormalSubgroups &normals()
  {
    if (!_norm)
      _norm = normal_subgroups(*_g);
    return *_norm;
  }

  const ChiefSeries &chief()
  {
    if (!_chief)
      _chief = chief_series(*_g, normals());
    return *_chief;
  }

  std::size_t group_index()
  {
    return lattice().members.size() - 1;  // sorted ascending, G last
  }

  bool is_sigma_nilpotent(const Bitset &U)
  {
    auto it = _nilmemo.find(U);
    if (it != _nilmemo.end())
      return it->second;
    std::uint64_t n = U.count();
    bool res;
    if (sigma_primary_order(n, _sigma)) {
      res = true;
    } else {
      res = detail::sigma_nilpotent_elements(*_g, _sigma, element_classes(),
                                             U.elements(), n);
    }
    _nilmemo.emplace(U, res);
    return res;
  }

  bool sigma_nilpotent() { return is_sigma_nilpotent(full_subgroup(*_g)); }

  bool is_sigma_central(const ChiefFactor &f) const
  {
    std::uint64_t ix = _g->order() / f.centralizer.count();
    return sigma_primary_order(f.factor_order * ix, _sigma);
  }

  bool sigma_soluble()
  {
    if (!_soluble) {
      bool ok = true;
      for (const auto &f : chief().factors)
        if (!sigma_primary_order(f.factor_order, _sigma)) {
          ok = false;
          break;
        }
      _soluble = ok;
    }
    return *_soluble;
  }

  const Bitset &sigma_fitting()
  {
    if (!_fsig) {
      ClosureBuilder cb(*_g);
      const auto &ns = normals();
      for (std::size_t i = 0; i < ns.members.size(); ++i)
        if (is_sigma_nilpotent(ns.members[i]))
          for (auto g : ns.gens[i])
            cb.add_gen(g);
      Bitset F = cb.set();
      if (!is_sigma_nilpotent(F))
        fail(errc::internal_inconsistency,
             "product of the normal sigma-nilpotent subgroups is not "
             "sigma-nilpotent");
      _fsig = std::move(F);
    }
    return *_fsig;
  }

  // ascending series: over each term, adjoin every minimal normal subgroup of
  // the quotient whose factor is sigma-central, until nothing qualifies
  const Bitset &sigma_hypercentre()
  {
    if (!_zsig) {
      Bitset Z = trivial_subgroup(*_g);
      while (Z.count() < _g->order()) {
        auto [Q, proj] = quotient(*_g, Z);
        auto qn = normal_subgroups(Q);
        auto mins = minimal_normal_over(Q, qn, trivial_subgroup(Q));
        ClosureBuilder grow(Q);
        bool any = false;
        for (const auto &M : mins) {
          Bitset C = centralizer(Q, M);
          std::uint64_t ix = Q.order() / C.count();
          if (sigma_primary_order(M.count() * ix, _sigma)) {
            any = true;
            for (auto g : small_gens(Q, M))
              grow.add_gen(g);
          }
        }
        if (!any)
          break;
        const Bitset &Mbar = grow.set();
        Bitset Znew(_g->order());
        for (std::uint32_t x = 0; x < _g->order(); ++x)
          if (Mbar.test(proj.image[x]))
            Znew.set(x);
        Z = std::move(Znew);
      }
      _zsig = std::move(Z);
    }
    return *_zsig;
  }

  const Bitset &sigma_residual() { return residual_of(full_subgroup(*_g)); }

  // U^{N_sigma}: the smallest normal subgroup of U with sigma-nilpotent
  // quotient, as a subset of G
  const Bitset &residual_of(const Bitset &U)
  {
    auto it = _residual.find(U);
    if (it != _residual.end())
      return it->second;
    Bitset R;
    if (U.count() == _g->order()) {
      R = residual_core(*_g, normals(), _sigma);
    } else {
      auto [H, inc] = materialize(*_g, U);
      auto hn = normal_subgroups(H);
      Bitset Rh = residual_core(H, hn, _sigma);
      R = Bitset(_g->order());
      for (auto x : Rh.elements())
        R.set(inc.image[x]);
    }
    return _residual.emplace(U, std::move(R)).first->second;
  }

  const std::optional<HallSigmaSet> &hall_sigma_set()
  {
    if (!_hall_done) {
      _hall_done = true;
      HallSigmaSet hs;
      bool complete = true;
      for (BlockId b : sigma_of(_g->order(), _sigma)) {
        std::uint64_t target = sigma_block_part(_g->order(), _sigma, b);
        ClosureBuilder cb(*_g);
        for (auto [p, e] : factor(_g->order()))
          if (_sigma.block_of(p) == b)
            for (auto x : small_gens(*_g, sylow_subgroup(*_g, p)))
              cb.add_gen(x);
        Bitset got = cb.set();
        if (got.count() != target) {
          bool found = false;
          for (const auto &M : lattice().members)
            if (M.count() == target) {
              got = M;
              found = true;
              break;
            }
          if (!found) {
            complete = false;
            break;
          }
        }
        HallMember m;
        m.block = b;
        m.subgroup = std::move(got);
        m.gens = small_gens(*_g, m.subgroup);
        m.normal = is_normal_in(*_g, m.subgroup, _g->gens());
        hs.members.push_back(std::move(m));
      }
      if (complete)
        _hall = std::move(hs);
    }
    return _hall;
  }

  // all subgroups of the given order, in lattice order
  std::vector<std::size_t> subgroups_of_order(std::uint64_t target)
  {
    std::vector<std::size_t> out;
    const auto &L = lattice();
    for (std::size_t i = 0; i < L.members.size(); ++i)
      if (L.members[i].count() == target)
        out.push_back(i);
    return out;
  }

  bool is_sigma_subnormal_in(std::size_t ai, std::size_t yi)
  {
    const auto &L = lattice();
    if (ai == yi)
      return true;
    if (!L.members[ai].subset_of(L.members[yi]))
      fail(errc::precondition_violated, "not a nested subgroup pair");
    std::uint64_t key = ai * L.members.size() + yi;
    auto it = _subn.find(key);
    if (it != _subn.end())
      return it->second;
    bool res = false;
    if (is_sigma_nilpotent(L.members[yi])) {
      res = true;  // in a sigma-nilpotent group every subgroup qualifies
    } else {
      for (std::size_t zi = L.members.size(); zi-- > 0 && !res;) {
        if (zi == yi || !L.members[ai].subset_of(L.members[zi]) ||
            !L.members[zi].subset_of(L.members[yi]))
          continue;
        if (!step_ok(zi, yi))
          continue;
        res = is_sigma_subnormal_in(ai, zi);
      }
    }
    _subn.emplace(key, res);
    return res;
  }

  bool is_sigma_subnormal(const Bitset &A)
  {
    auto ai = lattice().index_of(A);
    if (!ai)
      fail(errc::precondition_violated, "set is not a subgroup of the lattice");
    return is_sigma_subnormal_in(*ai, group_index());
  }

  bool is_sigma_carter(std::size_t hi)
  {
    const auto &L = lattice();
    if (_carter_memo.empty())
      _carter_memo.assign(L.members.size(), -1);
    if (_carter_memo[hi] >= 0)
      return _carter_memo[hi] != 0;
    bool res = is_sigma_nilpotent(L.members[hi]);
    if (res) {
      std::uint64_t h = L.members[hi].count();
      for (std::size_t yi = 0; yi < L.members.size() && res; ++yi) {
        if (!L.members[hi].subset_of(L.members[yi]))
          continue;
        const Bitset &R = residual_of(L.members[yi]);
        Bitset inter = R & L.members[hi];
        if (R.count() * h / inter.count() != L.members[yi].count())
          res = false;
      }
    }
    _carter_memo[hi] = res ? 1 : 0;
    return res;
  }

  const std::vector<std::size_t> &sigma_carter_subgroups()
  {
    if (!_carters) {
      std::vector<std::size_t> out;
      for (std::size_t i = 0; i < lattice().members.size(); ++i)
        if (is_sigma_carter(i))
          out.push_back(i);
      _carters = std::move(out);
    }
    return *_carters;
  }

  std::vector<std::size_t> maximal_sigma_nilpotent()
  {
    const auto &L = lattice();
    std::vector<std::size_t> out;
    for (std::size_t i = 0; i < L.members.size(); ++i) {
      if (!is_sigma_nilpotent(L.members[i]))
        continue;
      bool maximal = true;
      for (std::size_t j = 0; j < L.members.size() && maximal; ++j)
        if (j != i && L.members[j].count() > L.members[i].count() &&
            L.members[i].subset_of(L.members[j]) &&
            is_sigma_nilpotent(L.members[j]))
          maximal = false;
      if (maximal)
        out.push_back(i);
    }
    return out;
  }

  const std::vector<std::int64_t> &element_classes()
  {
    if (_cls.empty())
      _cls = detail::element_blocks(*_g, _sigma);
    return _cls;
  }

  bool nilpotent_member(std::size_t i)
  {
    const auto &L = lattice();
    if (_nilp_memo.empty())
      _nilp_memo.assign(L.members.size(), -1);
    if (_nilp_memo[i] < 0)
      _nilp_memo[i] = is_nilpotent_subgroup(*_g, L.members[i]) ? 1 : 0;
    return _nilp_memo[i] != 0;
  }

private:
  static Bitset residual_core(const Group &g, const NormalSubgroups &ns,
                              const PrimePartition &sigma)
  {
    Bitset R = full_subgroup(g);
    for (const auto &N : ns.members) {
      std::uint64_t q = g.order() / N.count();
      bool nil_quotient;
      if (sigma_primary_order(q, sigma)) {
        nil_quotient = true;
      } else {
        auto [Q, proj] = quotient(g, N);
        nil_quotient = sigma_nilpotent_group(Q, sigma);
      }
      if (nil_quotient)
        R &= N;
    }
    auto [Q, proj] = quotient(g, R);
    if (!sigma_nilpotent_group(Q, sigma))
      fail(errc::internal_inconsistency,
           "quotient by the residual is not sigma-nilpotent");
    return R;
  }

  bool step_ok(std::size_t zi, std::size_t yi)
  {
    std::uint64_t key = zi * _lat->members.size() + yi;
    auto it = _step.find(key);
    if (it != _step.end())
      return it->second;
    const auto &L = *_lat;
    bool ok = is_normal_in(*_g, L.members[zi], L.gens[yi]);
    if (!ok) {
      Bitset c = core_in(*_g, L.members[zi], L.gens[yi]);
      ok = sigma_primary_order(L.members[yi].count() / c.count(), _sigma);
    }
    _step.emplace(key, ok);
    return ok;
  }

  const Group *_g;
  PrimePartition _sigma;
  AnalysisCaps _caps;
  std::optional<SubgroupLattice> _lat;
  std::optional<NormalSubgroups> _norm;
  std::optional<ChiefSeries> _chief;
  std::optional<bool> _soluble;
  std::optional<Bitset> _fsig;
  std::optional<Bitset> _zsig;
  std::optional<HallSigmaSet> _hall;
  bool _hall_done = false;
  std::optional<std::vector<std::size_t>> _carters;
  std::vector<std::int64_t> _cls;
  std::unordered_map<Bitset, bool, BitsetHash> _nilmemo;
  std::unordered_map<Bitset, Bitset, BitsetHash> _residual;
  std::unordered_map<std::uint64_t, bool> _subn;
  std::unordered_map<std::uint64_t, bool> _step;
  std::vector<signed char> _carter_memo;
  std::vector<signed char> _nilp_memo;
};

}  // namespace signil
