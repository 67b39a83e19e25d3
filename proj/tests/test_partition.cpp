#include <catch2/catch_amalgamated.hpp>

#include "signil/partition.hpp"
#include "signil/sigma_spec.hpp"

using namespace signil;

TEST_CASE("sigma spec parsing and canonical form")
{
  CHECK(parse_sigma_spec("singletons").canonical() == "singletons");
  CHECK(parse_sigma_spec("pi:2").canonical() == "blocks:{2};rest:coblock");
  CHECK(parse_sigma_spec("pi:2,3").canonical()
        == "blocks:{2,3};rest:coblock");
  CHECK(parse_sigma_spec("pi:3,2").canonical()
        == "blocks:{2,3};rest:coblock");
  CHECK(parse_sigma_spec("pi1:2,3").canonical()
        == "blocks:{2}{3};rest:coblock");
  CHECK(parse_sigma_spec("blocks:{23}{11};rest:coblock").canonical()
        == "blocks:{23}{11};rest:coblock");
  CHECK(parse_sigma_spec("blocks:{2,3}{5};rest:singletons").canonical()
        == "blocks:{2,3}{5};rest:singletons");
  CHECK(parse_sigma_spec(" blocks: { 5 } { 3 } ; rest: coblock ")
            .canonical()
        == "blocks:{5}{3};rest:coblock");

  // the canonical form parses back to an equal partition
  for (const char *spec :
       {"singletons", "pi:2,3", "pi1:5,7", "blocks:{23}{11};rest:coblock"}) {
    PrimePartition p = parse_sigma_spec(spec);
    CHECK(parse_sigma_spec(p.canonical()) == p);
  }
}

TEST_CASE("sigma spec rejection")
{
  CHECK_THROWS_AS(parse_sigma_spec(""), Error);
  CHECK_THROWS_AS(parse_sigma_spec("nonsense"), Error);
  CHECK_THROWS_AS(parse_sigma_spec("pi:"), Error);
  CHECK_THROWS_AS(parse_sigma_spec("pi:4"), Error);          // not prime
  CHECK_THROWS_AS(parse_sigma_spec("pi:2,,3"), Error);
  CHECK_THROWS_AS(parse_sigma_spec("blocks:{2}"), Error);    // missing rest
  CHECK_THROWS_AS(parse_sigma_spec("blocks:{2};rest:what"), Error);
  CHECK_THROWS_AS(parse_sigma_spec("singletons junk"), Error);

  try {
    parse_sigma_spec("blocks:{2,3}{3,5};rest:coblock");
    FAIL("overlap accepted");
  } catch (const Error &e) {
    CHECK(e.code() == errc::overlap_error);
  }
}

TEST_CASE("block membership")
{
  PrimePartition s1 = parse_sigma_spec("singletons");
  CHECK(s1.block_of(2) == singleton_block(2));
  CHECK(s1.block_of(97) == singleton_block(97));
  CHECK(singleton_prime(singleton_block(97)) == 97);

  PrimePartition ex = parse_sigma_spec("blocks:{23}{11};rest:coblock");
  CHECK(ex.block_of(23) == 0);
  CHECK(ex.block_of(11) == 1);
  CHECK(ex.block_of(2) == kCoblock);
  CHECK(ex.block_of(7) == kCoblock);

  PrimePartition p1 = parse_sigma_spec("pi1:2,3");
  CHECK(p1.block_of(2) == 0);
  CHECK(p1.block_of(3) == 1);
  CHECK(p1.block_of(5) == kCoblock);

  // explicit blocks before remainder singletons before the coblock
  CHECK(block_less(0, singleton_block(2)));
  CHECK(block_less(singleton_block(2), kCoblock));
  CHECK(block_less(singleton_block(2), singleton_block(3)));
  CHECK(!block_less(kCoblock, 0));
}

TEST_CASE("sigma support of an order")
{
  PrimePartition s1 = parse_sigma_spec("singletons");
  auto blocks = sigma_of(360, s1);
  REQUIRE(blocks.size() == 3);
  CHECK(blocks[0] == singleton_block(2));
  CHECK(blocks[1] == singleton_block(3));
  CHECK(blocks[2] == singleton_block(5));
  CHECK(sigma_of(1, s1).empty());

  PrimePartition ex = parse_sigma_spec("blocks:{23}{11};rest:coblock");
  auto eb = sigma_of(2024, ex);  // 2^3 * 11 * 23
  REQUIRE(eb.size() == 3);
  CHECK(eb[0] == 0);
  CHECK(eb[1] == 1);
  CHECK(eb[2] == kCoblock);

  CHECK(sigma_primary_order(8, parse_sigma_spec("pi:2")));
  CHECK(sigma_primary_order(35, parse_sigma_spec("pi:2")));  // coblock
  CHECK_FALSE(sigma_primary_order(12, parse_sigma_spec("pi:2")));
  CHECK(sigma_primary_order(1, s1));
  CHECK(sigma_primary_order(128, s1));
  CHECK_FALSE(sigma_primary_order(6, s1));

  CHECK(sigma_block_part(2024, ex, 0) == 23);
  CHECK(sigma_block_part(2024, ex, 1) == 11);
  CHECK(sigma_block_part(2024, ex, kCoblock) == 8);
  CHECK(sigma_block_part(360, ex, kCoblock) == 360);
  CHECK(sigma_block_part(360, ex, 0) == 1);
}

TEST_CASE("arithmetic helpers")
{
  CHECK(p_part(360, 2) == 8);
  CHECK(p_part(360, 3) == 9);
  CHECK(p_part(360, 7) == 1);
  auto f = factor(2024);
  REQUIRE(f.size() == 3);
  CHECK(f[0] == std::pair<std::uint32_t, int>{2, 3});
  CHECK(f[1] == std::pair<std::uint32_t, int>{11, 1});
  CHECK(f[2] == std::pair<std::uint32_t, int>{23, 1});
  CHECK(is_prime(2));
  CHECK(is_prime(8191));
  CHECK_FALSE(is_prime(1));
  CHECK_FALSE(is_prime(8191 * 2));
}
