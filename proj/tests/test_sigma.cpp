#include <catch2/catch_amalgamated.hpp>

#include <map>
#include <set>
#include <stdexcept>

#include "signil/dsl.hpp"
#include "signil/sigma.hpp"
#include "signil/sigma_spec.hpp"
#include "support/corpus.hpp"

using namespace signil;

namespace {

const Group &corpus_group(const std::string &name)
{
  for (const auto &g : testsupport::corpus_groups())
    if (g.name() == name)
      return g;
  throw std::runtime_error("missing corpus group " + name);
}

std::map<std::string, std::pair<std::uint64_t, bool>>
hall_shape(SigmaAnalysis &ctx)
{
  std::map<std::string, std::pair<std::uint64_t, bool>> out;
  const auto &h = ctx.hall_sigma_set();
  REQUIRE(h.has_value());
  for (const auto &m : h->members)
    out[ctx.sigma().label(m.block)] = {m.subgroup.count(), m.normal};
  return out;
}

}  // namespace

TEST_CASE("cyclic six under the finest partition")
{
  Group g = cyclic(6);
  SigmaAnalysis ctx(g, PrimePartition::sigma1());
  CHECK(ctx.sigma_nilpotent());
  CHECK(ctx.sigma_soluble());
  CHECK(ctx.sigma_fitting().count() == 6);
  CHECK(ctx.sigma_hypercentre().count() == 6);
  CHECK(ctx.sigma_residual().count() == 1);

  auto hs = hall_shape(ctx);
  REQUIRE(hs.size() == 2);
  CHECK(hs["{2}"] == std::pair<std::uint64_t, bool>{2, true});
  CHECK(hs["{3}"] == std::pair<std::uint64_t, bool>{3, true});

  const auto &carters = ctx.sigma_carter_subgroups();
  REQUIRE(carters.size() == 1);
  CHECK(ctx.lattice().members[carters[0]].count() == 6);
}

TEST_CASE("symmetric four under the finest partition")
{
  Group g = symmetric(4);
  SigmaAnalysis ctx(g, PrimePartition::sigma1());
  CHECK_FALSE(ctx.sigma_nilpotent());
  CHECK(ctx.sigma_soluble());
  CHECK(ctx.sigma_fitting().count() == 4);
  CHECK(ctx.sigma_hypercentre().count() == 1);
  CHECK(ctx.sigma_residual().count() == 12);

  auto hs = hall_shape(ctx);
  REQUIRE(hs.size() == 2);
  CHECK(hs["{2}"] == std::pair<std::uint64_t, bool>{8, false});
  CHECK(hs["{3}"] == std::pair<std::uint64_t, bool>{3, false});

  // the classical Carter subgroups of S4 are its Sylow 2-subgroups
  const auto &carters = ctx.sigma_carter_subgroups();
  CHECK(carters.size() == 3);
  for (auto i : carters)
    CHECK(ctx.lattice().members[i].count() == 8);
}

TEST_CASE("alternating five")
{
  Group g = alternating(5);

  SigmaAnalysis fine(g, PrimePartition::sigma1());
  CHECK_FALSE(fine.sigma_soluble());
  CHECK_FALSE(fine.sigma_nilpotent());
  // a complete Hall set for the finest partition only needs the Sylows
  CHECK(fine.hall_sigma_set().has_value());
  CHECK(fine.sigma_fitting().count() == 1);
  CHECK(fine.sigma_residual().count() == 60);

  SigmaAnalysis coarse(g, parse_sigma_spec("pi:3,5"));
  CHECK_FALSE(coarse.sigma_soluble());
  // there is no subgroup of order 15, hence no complete Hall set
  CHECK_FALSE(coarse.hall_sigma_set().has_value());
  CHECK_FALSE(coarse.sigma_nilpotent());
}

TEST_CASE("quaternion times symmetric three")
{
  const Group &g = corpus_group("q8xs3");
  SigmaAnalysis ctx(g, PrimePartition::sigma1());
  CHECK_FALSE(ctx.sigma_nilpotent());
  CHECK(ctx.sigma_soluble());
  CHECK(ctx.sigma_fitting().count() == 24);
  CHECK(ctx.sigma_hypercentre().count() == 8);
  CHECK(ctx.sigma_residual().count() == 3);

  const auto &carters = ctx.sigma_carter_subgroups();
  CHECK(carters.size() == 3);
  for (auto i : carters)
    CHECK(ctx.lattice().members[i].count() == 16);

  auto maxnil = ctx.maximal_sigma_nilpotent();
  std::multiset<std::uint64_t> orders;
  for (auto i : maxnil)
    orders.insert(ctx.lattice().members[i].count());
  CHECK(orders == std::multiset<std::uint64_t>{16, 16, 16, 24});
}

TEST_CASE("the order 2024 fixture")
{
  const Group &g = corpus_group("bxr");
  REQUIRE(g.order() == 2024);

  SigmaAnalysis ctx(g, parse_sigma_spec("blocks:{23}{11};rest:coblock"));
  CHECK_FALSE(ctx.sigma_nilpotent());
  CHECK(ctx.sigma_soluble());
  CHECK(ctx.sigma_fitting().count() == 184);
  CHECK(ctx.sigma_hypercentre().count() == 8);
  CHECK(ctx.sigma_residual().count() == 23);

  auto hs = hall_shape(ctx);
  REQUIRE(hs.size() == 3);
  CHECK(hs["{23}"] == std::pair<std::uint64_t, bool>{23, true});
  CHECK(hs["{11}"] == std::pair<std::uint64_t, bool>{11, false});
  CHECK(hs["rest"] == std::pair<std::uint64_t, bool>{8, true});

  const auto &carters = ctx.sigma_carter_subgroups();
  CHECK(carters.size() == 23);
  for (auto i : carters)
    CHECK(ctx.lattice().members[i].count() == 88);

  // under pi:2 the group splits into its normal Hall pieces
  SigmaAnalysis two(g, parse_sigma_spec("pi:2"));
  CHECK(two.sigma_nilpotent());
  CHECK(two.sigma_fitting().count() == 2024);
  CHECK(two.sigma_hypercentre().count() == 2024);
  CHECK(two.sigma_residual().count() == 1);

  // but it is not nilpotent in the classical sense
  SigmaAnalysis fine(g, PrimePartition::sigma1());
  CHECK_FALSE(fine.sigma_nilpotent());
}

TEST_CASE("the order 5313 fixture")
{
  const Group &g = corpus_group("bxc");
  REQUIRE(g.order() == 5313);

  SigmaAnalysis ctx(g, parse_sigma_spec("blocks:{23}{11};rest:coblock"));
  CHECK_FALSE(ctx.sigma_nilpotent());
  CHECK(ctx.sigma_soluble());
  CHECK(ctx.sigma_fitting().count() == 483);
  CHECK(ctx.sigma_hypercentre().count() == 21);
  CHECK(ctx.sigma_residual().count() == 23);

  // sigma-subnormality of selected members
  for (auto i : ctx.subgroups_of_order(3))
    CHECK(ctx.is_sigma_subnormal(ctx.lattice().members[i]));
  auto elevens = ctx.subgroups_of_order(11);
  REQUIRE(elevens.size() == 23);
  for (auto i : elevens)
    CHECK_FALSE(ctx.is_sigma_subnormal(ctx.lattice().members[i]));
  // C11 x C7 avoids F_sigma, and every chain upward crosses a section
  // spanning two blocks
  auto sevens = ctx.subgroups_of_order(77);
  REQUIRE(!sevens.empty());
  for (auto i : sevens)
    CHECK_FALSE(ctx.is_sigma_subnormal(ctx.lattice().members[i]));
  // everything inside the sigma-nilpotent F_sigma is sigma-subnormal
  for (auto n : {7, 21, 161, 483})
    for (auto i : ctx.subgroups_of_order(n)) {
      INFO("order " << n);
      CHECK(ctx.is_sigma_subnormal(ctx.lattice().members[i]));
    }
}

TEST_CASE("the order 360 fixture")
{
  const Group &g = corpus_group("g360");
  REQUIRE(g.order() == 360);

  SigmaAnalysis ctx(g, parse_sigma_spec("blocks:{5}{3};rest:coblock"));
  CHECK_FALSE(ctx.sigma_nilpotent());
  CHECK(ctx.sigma_soluble());
  CHECK(ctx.sigma_fitting().count() == 45);
  CHECK(ctx.sigma_hypercentre().count() == 5);
  CHECK(ctx.sigma_residual().count() == 9);
}

TEST_CASE("analysis caps")
{
  Group g = symmetric(4);
  AnalysisCaps caps;
  caps.max_order = 10;
  CHECK_THROWS_AS(SigmaAnalysis(g, PrimePartition::sigma1(), caps),
                  CapExceeded);

  AnalysisCaps few;
  few.max_subgroups = 5;
  SigmaAnalysis ctx(g, PrimePartition::sigma1(), few);
  CHECK_THROWS_AS(ctx.lattice(), CapExceeded);

  AnalysisCaps ops;
  ops.max_join_ops = 5;
  SigmaAnalysis ctx2(g, PrimePartition::sigma1(), ops);
  CHECK_THROWS_AS(ctx2.lattice(), CapExceeded);
}
