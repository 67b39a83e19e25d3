#pragma once

#include <algorithm>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "signil/sigma.hpp"

namespace signil {

enum class SubnormalVariant { classic, sigma };

inline const char *variant_name(SubnormalVariant v)
{
  return v == SubnormalVariant::classic ? "classic" : "sigma";
}

struct Witness {
  std::string flag;  // "semi" or "weakly_semi"
  Bitset subgroup;
  Bitset normalizer;
  std::string reason;
};

struct ClassificationReport {
  bool sigma_nilpotent = false;
  bool semi = false;
  bool weakly_semi = false;
  SubnormalVariant variant = SubnormalVariant::classic;
  std::optional<bool> weakly_semi_other;  // present iff the variants disagree
  std::vector<Witness> witnesses;
};

// Semi: the normalizer of every non-normal sigma-primary subgroup must be
// sigma-nilpotent.  Weakly semi: the same over non-subnormal subgroups, where
// "subnormal" is the classical notion or its sigma relaxation depending on
// the variant.  Checking sigma-primary subgroups only is an exact reduction
// of the definition over sigma-nilpotent subgroups.
inline ClassificationReport classify_sigma(
    SigmaAnalysis &ctx, SubnormalVariant variant = SubnormalVariant::classic)
{
  ClassificationReport rep;
  rep.variant = variant;
  rep.sigma_nilpotent = ctx.sigma_nilpotent();
  const auto &L = ctx.lattice();
  const Group &G = ctx.group();
  std::size_t gi = ctx.group_index();

  bool semi = true, weak_classic = true, weak_sigma = true;
  std::optional<Witness> semi_w, wc_w, ws_w;

  for (std::size_t i = 0; i < L.members.size(); ++i) {
    if (!semi && !weak_classic && !weak_sigma)
      break;
    if (i == gi || L.normal[i])
      continue;
    if (!sigma_primary_order(L.members[i].count(), ctx.sigma()))
      continue;
    Bitset N = normalizer(G, L.members[i]);
    if (ctx.is_sigma_nilpotent(N))
      continue;
    if (semi) {
      semi = false;
      semi_w = Witness{"semi", L.members[i], N,
                       "non-normal sigma-primary subgroup with a normalizer "
                       "that is not sigma-nilpotent"};
    }
    if (weak_classic && !is_subnormal(G, L.members[i])) {
      weak_classic = false;
      wc_w = Witness{"weakly_semi", L.members[i], N,
                     "non-subnormal sigma-primary subgroup with a normalizer "
                     "that is not sigma-nilpotent"};
    }
    if (weak_sigma && !ctx.is_sigma_subnormal_in(i, gi)) {
      weak_sigma = false;
      ws_w = Witness{"weakly_semi", L.members[i], N,
                     "non-sigma-subnormal sigma-primary subgroup with a "
                     "normalizer that is not sigma-nilpotent"};
    }
  }

  if (rep.sigma_nilpotent && (!semi || !weak_classic || !weak_sigma))
    fail(errc::internal_inconsistency,
         "sigma-nilpotent group classified with a failing flag");
  if (semi && (!weak_classic || !weak_sigma))
    fail(errc::internal_inconsistency,
         "semi-sigma-nilpotent group failed the weak classification");

  rep.semi = semi;
  bool main_weak = variant == SubnormalVariant::classic ? weak_classic
                                                        : weak_sigma;
  bool other_weak = variant == SubnormalVariant::classic ? weak_sigma
                                                         : weak_classic;
  rep.weakly_semi = main_weak;
  if (main_weak != other_weak)
    rep.weakly_semi_other = other_weak;
  if (semi_w)
    rep.witnesses.push_back(std::move(*semi_w));
  auto &main_w = variant == SubnormalVariant::classic ? wc_w : ws_w;
  if (main_w)
    rep.witnesses.push_back(std::move(*main_w));
  return rep;
}

struct SchmidtStructure {
  Bitset sylow_p;  // the normal Sylow subgroup
  Bitset sylow_q;  // a cyclic non-normal Sylow subgroup
  std::uint32_t p = 0;
  std::uint32_t q = 0;
  std::uint64_t q_order = 0;  // |sylow_q|
};

// A Schmidt group is a non-nilpotent group all of whose proper subgroups are
// nilpotent.  When the definition holds, the classical structure (normal
// Sylow p equal to the derived subgroup, cyclic Sylow q = <x> with x^q
// central and in the Frattini subgroup) is guaranteed, so any deviation is an
// internal error rather than a negative answer.
inline std::optional<SchmidtStructure> schmidt_structure(SigmaAnalysis &ctx,
                                                         std::size_t ai)
{
  const auto &L = ctx.lattice();
  const Group &G = ctx.group();
  const Bitset &A = L.members[ai];
  if (ctx.nilpotent_member(ai))
    return std::nullopt;
  for (std::size_t j = 0; j < L.members.size(); ++j)
    if (j != ai && L.members[j].subset_of(A) && !ctx.nilpotent_member(j))
      return std::nullopt;

  auto f = factor(A.count());
  if (f.size() != 2)
    fail(errc::internal_inconsistency,
         "Schmidt subgroup whose order is not {p,q}-supported");
  SchmidtStructure s;
  auto elems = A.elements();
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
    bool closed = true;
    for (std::size_t i = 0; i < part.size() && closed; ++i)
      for (auto b : part)
        if (!in.test(G.mul(part[i], b))) {
          closed = false;
          break;
        }
    if (closed) {
      if (s.p)
        fail(errc::internal_inconsistency,
             "Schmidt subgroup with two normal Sylow subgroups");
      s.p = p;
      s.sylow_p = std::move(in);
    } else {
      s.q = p;
    }
  }
  if (!s.p || !s.q)
    fail(errc::internal_inconsistency,
         "Schmidt subgroup without a normal Sylow subgroup");
  if (s.sylow_p.count() != p_part(A.count(), s.p))
    fail(errc::internal_inconsistency, "normal Sylow part has wrong order");
  s.q_order = p_part(A.count(), s.q);

  std::uint16_t x = 0;
  bool found = false;
  for (auto e : elems)
    if (G.elt_order(e) == s.q_order) {
      x = e;
      found = true;
      break;
    }
  if (!found)
    fail(errc::internal_inconsistency,
         "Schmidt subgroup without a cyclic Sylow complement");
  s.sylow_q = cyclic_subgroup(G, x);

  if (!is_normal_in(G, s.sylow_p, L.gens[ai]) ||
      is_normal_in(G, s.sylow_q, L.gens[ai]))
    fail(errc::internal_inconsistency, "Schmidt Sylow normality is off");

  std::vector<std::uint16_t> comms;
  for (auto a : L.gens[ai])
    for (auto b : L.gens[ai]) {
      std::uint16_t c = G.comm(a, b);
      if (c)
        comms.push_back(c);
    }
  Bitset derived = normal_closure_in(G, L.gens[ai], comms);
  if (!(derived == s.sylow_p))
    fail(errc::internal_inconsistency,
         "derived subgroup of a Schmidt subgroup is not its normal Sylow");

  std::uint16_t z = G.pow(x, s.q);
  for (auto g : L.gens[ai])
    if (G.mul(z, g) != G.mul(g, z))
      fail(errc::internal_inconsistency,
           "q-th power of the Schmidt generator is not central");
  Bitset phi = A;
  for (std::size_t j = 0; j < L.members.size(); ++j) {
    if (j == ai || !L.members[j].subset_of(A))
      continue;
    bool maximal = true;
    for (std::size_t k = 0; k < L.members.size() && maximal; ++k)
      if (k != j && k != ai && L.members[j].subset_of(L.members[k]) &&
          L.members[k].subset_of(A) && !(L.members[k] == L.members[j]))
        maximal = false;
    if (maximal)
      phi &= L.members[j];
  }
  if (!phi.test(z))
    fail(errc::internal_inconsistency,
         "q-th power of the Schmidt generator avoids the Frattini subgroup");
  return s;
}

inline bool is_schmidt(SigmaAnalysis &ctx, std::size_t ai)
{
  return schmidt_structure(ctx, ai).has_value();
}

// minimal non-sigma-nilpotent subgroups
inline std::vector<std::size_t> critical_subgroups(SigmaAnalysis &ctx)
{
  const auto &L = ctx.lattice();
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < L.members.size(); ++i) {
    if (ctx.is_sigma_nilpotent(L.members[i]))
      continue;
    bool minimal = true;
    for (std::size_t j = 0; j < L.members.size() && minimal; ++j)
      if (j != i && L.members[j].subset_of(L.members[i]) &&
          !ctx.is_sigma_nilpotent(L.members[j]))
        minimal = false;
    if (minimal)
      out.push_back(i);
  }
  return out;
}

enum class Verdict { pass, fail, vacuous, skipped, capped };

inline const char *verdict_name(Verdict v)
{
  switch (v) {
  case Verdict::pass: return "pass";
  case Verdict::fail: return "fail";
  case Verdict::vacuous: return "vacuous";
  case Verdict::skipped: return "skipped";
  case Verdict::capped: return "inconclusive_capped";
  }
  return "?";
}

struct ClauseWitness {
  std::string label;
  Bitset set;
};

struct ClauseResult {
  std::string id;
  Verdict verdict = Verdict::pass;
  std::string note;
  std::vector<ClauseWitness> witnesses;
};

struct HallFamily {
  enum class Status { found, no_hall, no_family, capped } status =
      Status::no_hall;
  std::vector<BlockId> normal_blocks;
  std::vector<std::size_t> normal_idx;  // lattice indices, block order
  std::vector<BlockId> nonnormal_blocks;
  std::vector<std::size_t> nonnormal_idx;
  std::string note;
  std::size_t tried = 0;
};

// Ordered complete Hall sigma-set whose non-normal members generate their
// direct product: normal members are forced (a normal Hall subgroup for a
// block is the unique one), the rest is a backtracking search over candidate
// subgroups of the right order, elementwise commutation checked on
// generators, bounded by the family budget.
inline HallFamily find_hall_family(SigmaAnalysis &ctx, bool need_commuting)
{
  HallFamily fam;
  const auto &L = ctx.lattice();
  const Group &G = ctx.group();
  std::vector<std::vector<std::size_t>> cand_sets;
  for (BlockId b : sigma_of(G.order(), ctx.sigma())) {
    std::uint64_t target = sigma_block_part(G.order(), ctx.sigma(), b);
    auto cands = ctx.subgroups_of_order(target);
    if (cands.empty()) {
      fam.status = HallFamily::Status::no_hall;
      fam.note = "no Hall subgroup for block " + ctx.sigma().label(b);
      return fam;
    }
    std::optional<std::size_t> nrm;
    for (auto c : cands)
      if (L.normal[c]) {
        nrm = c;
        break;
      }
    if (nrm) {
      fam.normal_blocks.push_back(b);
      fam.normal_idx.push_back(*nrm);
    } else {
      fam.nonnormal_blocks.push_back(b);
      cand_sets.push_back(std::move(cands));
    }
  }
  std::vector<std::size_t> chosen(cand_sets.size());
  std::size_t budget = ctx.caps().max_hall_families;
  bool capped = false;
  auto commutes = [&](std::size_t a, std::size_t b) {
    for (auto x : L.gens[a])
      for (auto y : L.gens[b])
        if (G.mul(x, y) != G.mul(y, x))
          return false;
    return true;
  };
  auto search = [&](auto &&self, std::size_t k) -> bool {
    if (k == cand_sets.size())
      return true;
    for (auto c : cand_sets[k]) {
      if (++fam.tried > budget) {
        capped = true;
        return false;
      }
      bool ok = true;
      if (need_commuting)
        for (std::size_t j = 0; j < k && ok; ++j)
          ok = commutes(chosen[j], c);
      if (!ok)
        continue;
      chosen[k] = c;
      if (self(self, k + 1))
        return true;
      if (capped)
        return false;
    }
    return false;
  };
  if (search(search, 0)) {
    fam.nonnormal_idx = std::move(chosen);
    fam.status = HallFamily::Status::found;
  } else if (capped) {
    fam.status = HallFamily::Status::capped;
    fam.note = "family budget of " + std::to_string(budget) + " exhausted";
  } else {
    fam.status = HallFamily::Status::no_family;
    fam.note = "no pairwise commuting choice of non-normal Hall members";
  }
  return fam;
}

struct TheoremReport {
  char theorem = 'A';
  bool hypothesis_holds = false;
  std::string hypothesis_reason;
  std::vector<ClauseWitness> hypothesis_witnesses;
  std::optional<HallFamily> family;
  std::vector<ClauseResult> clauses;
  ClassificationReport classification;
};

namespace detail {

inline SubgroupLattice lattice_of_subgroup(const Group &parent,
                                           const SubgroupLattice &L,
                                           const Bitset &S, const Group &child,
                                           const Homomorphism &inc)
{
  std::vector<std::uint16_t> back(parent.order(), 0);
  for (std::uint32_t i = 0; i < child.order(); ++i)
    back[inc.image[i]] = static_cast<std::uint16_t>(i);
  SubgroupLattice out;
  for (std::size_t i = 0; i < L.members.size(); ++i) {
    if (!L.members[i].subset_of(S))
      continue;
    Bitset m(child.order());
    for (auto x : L.members[i].elements())
      m.set(back[x]);
    std::vector<std::uint16_t> g2;
    for (auto x : L.gens[i])
      g2.push_back(back[x]);
    out.members.push_back(std::move(m));
    out.gens.push_back(std::move(g2));
    out.normal.push_back(0);
  }
  sort_lattice(child, out);
  return out;
}

inline SubgroupLattice lattice_of_quotient(const SubgroupLattice &L,
                                           const Bitset &N, const Group &Q,
                                           const Homomorphism &proj)
{
  SubgroupLattice out;
  for (std::size_t i = 0; i < L.members.size(); ++i) {
    if (!N.subset_of(L.members[i]))
      continue;
    Bitset m(Q.order());
    for (auto x : L.members[i].elements())
      m.set(proj.image[x]);
    std::vector<std::uint16_t> g2;
    for (auto x : L.gens[i])
      g2.push_back(proj.image[x]);
    out.members.push_back(std::move(m));
    out.gens.push_back(std::move(g2));
    out.normal.push_back(0);
  }
  sort_lattice(Q, out);
  return out;
}

}  // namespace detail

inline TheoremReport verify_theorem_A(SigmaAnalysis &ctx)
{
  TheoremReport rep;
  rep.theorem = 'A';
  rep.classification = classify_sigma(ctx, SubnormalVariant::classic);
  if (!rep.classification.weakly_semi) {
    rep.hypothesis_holds = false;
    rep.hypothesis_reason = "group is not weakly semi-sigma-nilpotent";
    for (const auto &w : rep.classification.witnesses)
      if (w.flag == "weakly_semi") {
        rep.hypothesis_witnesses.push_back({"subgroup", w.subgroup});
        rep.hypothesis_witnesses.push_back({"normalizer", w.normalizer});
      }
    return rep;
  }
  rep.hypothesis_holds = true;

  const Group &G = ctx.group();
  const auto &L = ctx.lattice();
  bool nilp = rep.classification.sigma_nilpotent;

  HallFamily fam = find_hall_family(ctx, true);
  rep.family = fam;
  {
    ClauseResult c;
    c.id = "A.i";
    switch (fam.status) {
    case HallFamily::Status::found:
      if (!fam.normal_idx.empty() || fam.nonnormal_idx.empty()) {
        c.verdict = Verdict::pass;
        c.note = "r=" + std::to_string(fam.normal_idx.size()) +
                 ", t=" + std::to_string(fam.normal_idx.size() +
                                         fam.nonnormal_idx.size());
        if (fam.normal_idx.empty())
          c.note += " (trivial sigma support)";
      } else {
        c.verdict = Verdict::fail;
        c.note = "no normal Hall member";
      }
      break;
    case HallFamily::Status::no_hall:
    case HallFamily::Status::no_family:
      c.verdict = Verdict::fail;
      c.note = fam.note;
      break;
    case HallFamily::Status::capped:
      c.verdict = Verdict::capped;
      c.note = fam.note;
      break;
    }
    rep.clauses.push_back(std::move(c));
  }
  bool have_family = fam.status == HallFamily::Status::found &&
                     rep.clauses.back().verdict == Verdict::pass;

  {
    ClauseResult c;
    c.id = "A.ii";
    if (nilp) {
      c.verdict = Verdict::vacuous;
      c.note = "group is sigma-nilpotent";
    } else if (!have_family) {
      c.verdict = Verdict::skipped;
      c.note = "no ordered Hall family from clause (i)";
    } else if (fam.nonnormal_idx.empty()) {
      c.verdict = Verdict::vacuous;
      c.note = "all Hall members are normal";
    } else {
      c.verdict = Verdict::pass;
      for (auto hi : fam.nonnormal_idx) {
        Bitset N = normalizer(G, L.members[hi]);
        auto ni = L.index_of(N);
        if (!ni)
          fail(errc::internal_inconsistency, "normalizer missing from lattice");
        if (!ctx.is_sigma_carter(*ni)) {
          c.verdict = Verdict::fail;
          c.note = "normalizer of a non-normal Hall member is not a "
                   "sigma-Carter subgroup";
          c.witnesses.push_back({"hall_member", L.members[hi]});
          c.witnesses.push_back({"normalizer", N});
          break;
        }
      }
    }
    rep.clauses.push_back(std::move(c));
  }

  {
    ClauseResult c;
    c.id = "A.iii";
    const Bitset &F = ctx.sigma_fitting();
    bool maximal = true;
    for (std::size_t j = 0; j < L.members.size() && maximal; ++j)
      if (F.subset_of(L.members[j]) && L.members[j].count() > F.count() &&
          ctx.is_sigma_nilpotent(L.members[j]))
        maximal = false;
    if (!maximal) {
      c.verdict = Verdict::fail;
      c.note = "F_sigma is not a maximal sigma-nilpotent subgroup";
      c.witnesses.push_back({"f_sigma", F});
    } else if (!have_family) {
      c.verdict = Verdict::skipped;
      c.note = "maximality holds; product form needs clause (i)";
    } else {
      ClosureBuilder cb(G);
      for (auto hi : fam.normal_idx)
        for (auto g : L.gens[hi])
          cb.add_gen(g);
      for (auto g : small_gens(G, ctx.sigma_hypercentre()))
        cb.add_gen(g);
      if (cb.set() == F) {
        c.verdict = Verdict::pass;
      } else {
        c.verdict = Verdict::fail;
        c.note = "F_sigma is not F_0sigma Z_sigma";
        c.witnesses.push_back({"f_sigma", F});
        c.witnesses.push_back({"f_0sigma_z_sigma", cb.set()});
      }
    }
    rep.clauses.push_back(std::move(c));
  }

  {
    ClauseResult c;
    c.id = "A.iv";
    const Bitset &F = ctx.sigma_fitting();
    const Bitset &Z = ctx.sigma_hypercentre();
    bool any = false;
    c.verdict = Verdict::pass;
    for (auto vi : ctx.maximal_sigma_nilpotent()) {
      const Bitset &V = L.members[vi];
      Bitset inter = F & V;
      if (F.count() * V.count() / inter.count() != G.order())
        continue;
      any = true;
      Bitset core = core_in(G, V, G.gens());
      if (!(core == Z)) {
        c.verdict = Verdict::fail;
        c.note = "core of a qualifying maximal sigma-nilpotent subgroup "
                 "differs from Z_sigma";
        c.witnesses.push_back({"V", V});
        c.witnesses.push_back({"core", core});
        break;
      }
    }
    if (c.verdict == Verdict::pass && !any) {
      c.verdict = Verdict::vacuous;
      c.note = "no maximal sigma-nilpotent V with F_sigma V = G";
    }
    rep.clauses.push_back(std::move(c));
  }

  {
    ClauseResult c;
    c.id = "A.v";
    Bitset F = fitting(G);
    auto [Q, proj] = quotient(G, F);
    if (sigma_nilpotent_group(Q, ctx.sigma())) {
      c.verdict = Verdict::pass;
    } else {
      c.verdict = Verdict::fail;
      c.note = "G/F(G) is not sigma-nilpotent";
      c.witnesses.push_back({"fitting", F});
    }
    rep.clauses.push_back(std::move(c));
  }
  return rep;
}

// Theorem B hypothesis: semi-sigma-nilpotent, a complete Hall sigma-set
// exists, and for each block without a normal Hall member some candidate
// member has all its Schmidt subgroups with cyclic Sylow of prime order.
// The condition is per-block, so candidates are scanned independently.
inline TheoremReport check_theorem_B_hypothesis(SigmaAnalysis &ctx)
{
  TheoremReport rep;
  rep.theorem = 'B';
  rep.classification = classify_sigma(ctx, SubnormalVariant::classic);
  if (!rep.classification.semi) {
    rep.hypothesis_holds = false;
    rep.hypothesis_reason = "group is not semi-sigma-nilpotent";
    for (const auto &w : rep.classification.witnesses)
      if (w.flag == "semi") {
        rep.hypothesis_witnesses.push_back({"subgroup", w.subgroup});
        rep.hypothesis_witnesses.push_back({"normalizer", w.normalizer});
      }
    return rep;
  }
  const auto &L = ctx.lattice();
  const Group &G = ctx.group();
  HallFamily fam;
  std::optional<ClauseWitness> bad_schmidt;
  std::optional<ClauseWitness> bad_sylow;
  for (BlockId b : sigma_of(G.order(), ctx.sigma())) {
    std::uint64_t target = sigma_block_part(G.order(), ctx.sigma(), b);
    auto cands = ctx.subgroups_of_order(target);
    if (cands.empty()) {
      rep.hypothesis_holds = false;
      rep.hypothesis_reason =
          "no Hall subgroup for block " + ctx.sigma().label(b);
      return rep;
    }
    std::optional<std::size_t> nrm;
    for (auto c : cands)
      if (L.normal[c]) {
        nrm = c;
        break;
      }
    if (nrm) {
      fam.normal_blocks.push_back(b);
      fam.normal_idx.push_back(*nrm);
      continue;
    }
    std::optional<std::size_t> pick;
    for (auto c : cands) {
      bool ok = true;
      for (std::size_t j = 0; j < L.members.size() && ok; ++j) {
        if (!L.members[j].subset_of(L.members[c]))
          continue;
        auto s = schmidt_structure(ctx, j);
        if (s && s->q_order != s->q) {
          ok = false;
          if (!bad_schmidt) {
            bad_schmidt = ClauseWitness{"schmidt_subgroup", L.members[j]};
            bad_sylow = ClauseWitness{"cyclic_sylow", s->sylow_q};
          }
        }
      }
      if (ok) {
        pick = c;
        break;
      }
    }
    if (!pick) {
      rep.hypothesis_holds = false;
      rep.hypothesis_reason =
          "every Hall member for block " + ctx.sigma().label(b) +
          " contains a Schmidt subgroup whose cyclic Sylow has non-prime "
          "order";
      if (bad_schmidt)
        rep.hypothesis_witnesses.push_back(*bad_schmidt);
      if (bad_sylow)
        rep.hypothesis_witnesses.push_back(*bad_sylow);
      return rep;
    }
    fam.nonnormal_blocks.push_back(b);
    fam.nonnormal_idx.push_back(*pick);
  }
  fam.status = HallFamily::Status::found;
  rep.family = std::move(fam);
  rep.hypothesis_holds = true;
  return rep;
}

inline TheoremReport verify_theorem_B(SigmaAnalysis &ctx)
{
  TheoremReport rep = check_theorem_B_hypothesis(ctx);
  if (!rep.hypothesis_holds)
    return rep;
  const Group &G = ctx.group();
  const auto &L = ctx.lattice();
  const Bitset &F = ctx.sigma_fitting();
  const Bitset &Z = ctx.sigma_hypercentre();

  {
    ClauseResult c;
    c.id = "B.i";
    auto [Q, proj] = quotient(G, F);
    if (is_abelian_subgroup(Q, full_subgroup(Q))) {
      c.verdict = Verdict::pass;
    } else {
      c.verdict = Verdict::fail;
      c.note = "G/F_sigma is not abelian";
    }
    rep.clauses.push_back(std::move(c));
  }

  {
    ClauseResult c;
    c.id = "B.ii";
    bool any = false;
    c.verdict = Verdict::pass;
    for (auto vi : ctx.maximal_sigma_nilpotent()) {
      if (L.normal[vi])
        continue;
      any = true;
      const Bitset &U = L.members[vi];
      if (!ctx.is_sigma_carter(vi)) {
        c.verdict = Verdict::fail;
        c.note = "maximal sigma-nilpotent non-normal subgroup is not "
                 "sigma-Carter";
        c.witnesses.push_back({"U", U});
        break;
      }
      Bitset core = core_in(G, U, G.gens());
      if (!(core == Z)) {
        c.verdict = Verdict::fail;
        c.note = "core of a maximal sigma-nilpotent non-normal subgroup "
                 "differs from Z_sigma";
        c.witnesses.push_back({"U", U});
        c.witnesses.push_back({"core", core});
        break;
      }
    }
    if (c.verdict == Verdict::pass && !any) {
      c.verdict = Verdict::vacuous;
      c.note = "every maximal sigma-nilpotent subgroup is normal";
    }
    rep.clauses.push_back(std::move(c));
  }

  {
    ClauseResult c;
    c.id = "B.iii";
    bool normals_nilpotent = true;
    for (auto hi : rep.family->normal_idx)
      if (!ctx.nilpotent_member(hi)) {
        normals_nilpotent = false;
        break;
      }
    if (!normals_nilpotent) {
      c.verdict = Verdict::vacuous;
      c.note = "some normal Hall member is not nilpotent";
    } else {
      auto [Q, proj] = quotient(G, F);
      bool cyclic = false;
      for (std::uint32_t x = 0; x < Q.order() && !cyclic; ++x)
        cyclic = Q.elt_order(static_cast<std::uint16_t>(x)) == Q.order();
      if (cyclic) {
        c.verdict = Verdict::pass;
      } else {
        c.verdict = Verdict::fail;
        c.note = "G/F_sigma is not cyclic";
      }
    }
    rep.clauses.push_back(std::move(c));
  }

  {
    ClauseResult c;
    c.id = "B.iv";
    c.verdict = Verdict::pass;
    std::size_t gi = ctx.group_index();
    for (std::size_t i = 0; i < L.members.size() && c.verdict == Verdict::pass;
         ++i) {
      if (i == gi)
        continue;  // the group itself is the hypothesis
      auto [H, inc] = materialize(G, L.members[i]);
      SigmaAnalysis sub(H, ctx.sigma(), ctx.caps());
      sub.adopt_lattice(
          detail::lattice_of_subgroup(G, L, L.members[i], H, inc));
      auto subrep = classify_sigma(sub, SubnormalVariant::classic);
      if (!subrep.semi) {
        c.verdict = Verdict::fail;
        c.note = "subgroup is not semi-sigma-nilpotent";
        c.witnesses.push_back({"subgroup", L.members[i]});
      }
    }
    const auto &ns = ctx.normals();
    for (std::size_t i = 0;
         i < ns.members.size() && c.verdict == Verdict::pass; ++i) {
      if (ns.members[i].count() == 1 || ns.members[i].count() == G.order())
        continue;  // G itself and the trivial quotient are covered
      auto [Q, proj] = quotient(G, ns.members[i]);
      SigmaAnalysis quo(Q, ctx.sigma(), ctx.caps());
      quo.adopt_lattice(detail::lattice_of_quotient(L, ns.members[i], Q, proj));
      auto quorep = classify_sigma(quo, SubnormalVariant::classic);
      if (!quorep.semi) {
        c.verdict = Verdict::fail;
        c.note = "quotient is not semi-sigma-nilpotent";
        c.witnesses.push_back({"kernel", ns.members[i]});
      }
    }
    rep.clauses.push_back(std::move(c));
  }
  return rep;
}

}  // namespace signil
