#pragma once

#include <string>
#include <unordered_set>
#include <vector>

#include "json.hpp"

#include "signil/classify.hpp"
#include "signil/sigma.hpp"
#include "signil/version.hpp"

namespace signil {

using ordered_json = nlohmann::ordered_json;

namespace detail {

inline ordered_json element_array(const Bitset &S)
{
  ordered_json a = ordered_json::array();
  for (auto e : S.elements())
    a.push_back(e);
  return a;
}

}  // namespace detail

struct CarterClass {
  std::size_t order = 0;
  std::size_t conjugates = 0;
  Bitset representative;
};

// conjugacy classes of the sigma-Carter subgroups, one orbit per class
inline std::vector<CarterClass> carter_classes(SigmaAnalysis &ctx)
{
  const Group &G = ctx.group();
  const auto &L = ctx.lattice();
  std::vector<CarterClass> out;
  std::unordered_set<Bitset, BitsetHash> seen;
  for (std::size_t idx : ctx.sigma_carter_subgroups()) {
    const Bitset &S = L.members[idx];
    if (seen.count(S))
      continue;
    CarterClass cls;
    cls.order = S.count();
    cls.representative = S;
    std::vector<Bitset> work{S};
    seen.insert(S);
    ++cls.conjugates;
    while (!work.empty()) {
      Bitset cur = std::move(work.back());
      work.pop_back();
      for (auto g : G.gens()) {
        Bitset c = conjugate_subgroup(G, cur, g);
        if (seen.insert(c).second) {
          ++cls.conjugates;
          work.push_back(std::move(c));
        }
      }
    }
    out.push_back(std::move(cls));
  }
  return out;
}

inline ordered_json group_json(const Group &G)
{
  ordered_json g;
  g["name"] = G.name();
  g["order"] = G.order();
  ordered_json prov;
  prov["construction"] = G.provenance().construction;
  prov["associativity"] = G.provenance().assoc_check;
  g["provenance"] = prov;
  return g;
}

inline ordered_json witnesses_json(const std::vector<Witness> &ws,
                                   bool include_elements)
{
  ordered_json arr = ordered_json::array();
  for (const auto &w : ws) {
    ordered_json j;
    j["flag"] = w.flag;
    j["reason"] = w.reason;
    j["subgroup_order"] = w.subgroup.count();
    j["normalizer_order"] = w.normalizer.count();
    if (include_elements) {
      j["subgroup"] = detail::element_array(w.subgroup);
      j["normalizer"] = detail::element_array(w.normalizer);
    }
    arr.push_back(std::move(j));
  }
  return arr;
}

inline ordered_json clause_witnesses_json(
    const std::vector<ClauseWitness> &ws)
{
  ordered_json arr = ordered_json::array();
  for (const auto &w : ws) {
    ordered_json j;
    j["label"] = w.label;
    j["order"] = w.set.count();
    j["elements"] = detail::element_array(w.set);
    arr.push_back(std::move(j));
  }
  return arr;
}

inline ordered_json clauses_json(const std::vector<ClauseResult> &clauses)
{
  ordered_json arr = ordered_json::array();
  for (const auto &c : clauses) {
    ordered_json j;
    j["id"] = c.id;
    j["verdict"] = verdict_name(c.verdict);
    if (!c.note.empty())
      j["note"] = c.note;
    if (!c.witnesses.empty())
      j["witnesses"] = clause_witnesses_json(c.witnesses);
    arr.push_back(std::move(j));
  }
  return arr;
}

inline ordered_json flags_json(const ClassificationReport &cls)
{
  ordered_json f;
  f["sigma_nilpotent"] = cls.sigma_nilpotent;
  f["semi_sigma_nilpotent"] = cls.semi;
  f["weakly_semi_sigma_nilpotent"] = cls.weakly_semi;
  f["subnormal_variant"] = variant_name(cls.variant);
  if (cls.weakly_semi_other)
    f["weakly_semi_other_variant"] = *cls.weakly_semi_other;
  return f;
}

inline ordered_json build_analyze_doc(SigmaAnalysis &ctx,
                                      const ClassificationReport &cls,
                                      bool include_elements)
{
  ordered_json doc;
  doc["tool_version"] = kToolVersion;
  doc["group"] = group_json(ctx.group());
  doc["sigma"] = ctx.sigma().canonical();
  doc["flags"] = flags_json(cls);

  ordered_json sub;
  sub["f_sigma_order"] = ctx.sigma_fitting().count();
  sub["z_sigma_order"] = ctx.sigma_hypercentre().count();
  sub["residual_order"] = ctx.sigma_residual().count();
  const auto &hall = ctx.hall_sigma_set();
  if (hall) {
    ordered_json arr = ordered_json::array();
    for (const auto &m : hall->members) {
      ordered_json h;
      h["block"] = ctx.sigma().label(m.block);
      h["order"] = m.subgroup.count();
      h["normal"] = m.normal;
      arr.push_back(std::move(h));
    }
    sub["hall"] = arr;
  } else {
    sub["hall"] = nullptr;
  }
  ordered_json carr = ordered_json::array();
  for (const auto &c : carter_classes(ctx)) {
    ordered_json j;
    j["order"] = c.order;
    j["conjugates"] = c.conjugates;
    if (include_elements)
      j["representative"] = detail::element_array(c.representative);
    carr.push_back(std::move(j));
  }
  sub["carter"] = carr;
  doc["subgroups"] = sub;

  doc["witnesses"] = witnesses_json(cls.witnesses, include_elements);
  doc["clauses"] = ordered_json::array();
  doc["timing_ms"] = 0;
  return doc;
}

inline ordered_json hall_family_json(SigmaAnalysis &ctx, const HallFamily &fam)
{
  const auto &L = ctx.lattice();
  ordered_json j;
  const char *status = fam.status == HallFamily::Status::found  ? "found"
                       : fam.status == HallFamily::Status::no_hall
                           ? "no_hall_subgroup"
                       : fam.status == HallFamily::Status::no_family
                           ? "no_commuting_family"
                           : "inconclusive_capped";
  j["status"] = status;
  ordered_json arr = ordered_json::array();
  for (std::size_t i = 0; i < fam.normal_idx.size(); ++i) {
    ordered_json m;
    m["block"] = ctx.sigma().label(fam.normal_blocks[i]);
    m["order"] = L.members[fam.normal_idx[i]].count();
    m["normal"] = true;
    arr.push_back(std::move(m));
  }
  for (std::size_t i = 0; i < fam.nonnormal_idx.size(); ++i) {
    ordered_json m;
    m["block"] = ctx.sigma().label(fam.nonnormal_blocks[i]);
    m["order"] = L.members[fam.nonnormal_idx[i]].count();
    m["normal"] = false;
    arr.push_back(std::move(m));
  }
  j["members"] = arr;
  if (!fam.note.empty())
    j["note"] = fam.note;
  return j;
}

inline ordered_json build_verify_doc(SigmaAnalysis &ctx,
                                     const TheoremReport &rep)
{
  ordered_json doc;
  doc["tool_version"] = kToolVersion;
  doc["group"] = group_json(ctx.group());
  doc["sigma"] = ctx.sigma().canonical();
  doc["theorem"] = std::string(1, rep.theorem);
  ordered_json hyp;
  hyp["holds"] = rep.hypothesis_holds;
  hyp["reason"] = rep.hypothesis_reason;
  hyp["witnesses"] = clause_witnesses_json(rep.hypothesis_witnesses);
  doc["hypothesis"] = hyp;
  if (rep.family)
    doc["hall_family"] = hall_family_json(ctx, *rep.family);
  else
    doc["hall_family"] = nullptr;
  doc["flags"] = flags_json(rep.classification);
  doc["clauses"] = clauses_json(rep.clauses);
  doc["timing_ms"] = 0;
  return doc;
}

inline ordered_json error_json(const Error &e)
{
  ordered_json j;
  j["code"] = errc_name(e.code());
  j["message"] = e.what();
  return j;
}

}  // namespace signil
