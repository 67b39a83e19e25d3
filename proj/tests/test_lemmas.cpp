#include <catch2/catch_amalgamated.hpp>

#include "support/battery.hpp"
#include "support/corpus.hpp"

using namespace signil;

namespace {

void expect_clean(const std::vector<std::string> &fails)
{
  for (const auto &f : fails)
    FAIL_CHECK(f);
  CHECK(fails.empty());
}

}  // namespace

TEST_CASE("lemma invariants hold on every corpus group")
{
  for (const auto &g : testsupport::corpus_groups()) {
    auto L = all_subgroups(g);
    for (const auto &mode : testsupport::sigma_modes()) {
      INFO(g.name() << " / " << mode);
      expect_clean(testsupport::lemma_battery(g, L, mode));
    }
  }
}

TEST_CASE("sigma-nilpotency is closed under direct products")
{
  auto small = testsupport::corpus_upto(60);
  for (const auto &mode : testsupport::sigma_modes())
    expect_clean(testsupport::product_closure_battery(small, mode));
}

TEST_CASE("the finest partition degenerates to the classical theory")
{
  for (const Group *g : testsupport::corpus_upto(200)) {
    auto L = all_subgroups(*g);
    INFO(g->name());
    expect_clean(testsupport::degeneration_battery(*g, L));
  }
}

TEST_CASE("theorem A holds corpus wide")
{
  for (const auto &g : testsupport::corpus_groups()) {
    auto L = all_subgroups(g);
    for (const auto &mode : testsupport::sigma_modes()) {
      INFO(g.name() << " / " << mode);
      expect_clean(testsupport::theorem_A_battery(g, L, mode));
    }
  }
}

TEST_CASE("theorem B holds corpus wide")
{
  for (const auto &g : testsupport::corpus_groups()) {
    auto L = all_subgroups(g);
    for (const auto &mode : testsupport::sigma_modes()) {
      INFO(g.name() << " / " << mode);
      expect_clean(testsupport::theorem_B_battery(g, L, mode));
    }
  }
}

TEST_CASE("schmidt subgroups have the classical shape")
{
  for (const auto &g : testsupport::corpus_groups()) {
    auto L = all_subgroups(g);
    INFO(g.name());
    expect_clean(testsupport::schmidt_battery(g, L));
  }
}
