#include <catch2/catch_amalgamated.hpp>

#include <cstdio>
#include <unistd.h>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "signil/cayley_io.hpp"
#include "signil/dsl.hpp"
#include "signil/group.hpp"
#include "support/corpus.hpp"

using namespace signil;

namespace {

struct TempDir {
  std::filesystem::path path;
  TempDir()
  {
    path = std::filesystem::temp_directory_path()
           / ("signil-test-" + std::to_string(::getpid()));
    std::filesystem::create_directories(path);
  }
  ~TempDir() { std::filesystem::remove_all(path); }
};

void put(const std::filesystem::path &p, const std::string &text)
{
  std::ofstream out(p);
  out << text;
}

}  // namespace

TEST_CASE("dsl parses the builtin constructors")
{
  CHECK(elaborate(*parse_gdsl("C(6)"), ".").order() == 6);
  CHECK(elaborate(*parse_gdsl("D(8)"), ".").order() == 8);
  CHECK(elaborate(*parse_gdsl("Q8"), ".").order() == 8);
  CHECK(elaborate(*parse_gdsl("GQ(16)"), ".").order() == 16);
  CHECK(elaborate(*parse_gdsl("S(4)"), ".").order() == 24);
  CHECK(elaborate(*parse_gdsl("A(5)"), ".").order() == 60);
  CHECK(elaborate(*parse_gdsl("C(2) x C(3)"), ".").order() == 6);
  CHECK(elaborate(*parse_gdsl("C(2) x C(2) x C(2)"), ".").order() == 8);
  CHECK(elaborate(*parse_gdsl("perm(4; (0 1 2 3); (0 2))"), ".").order() == 8);
  CHECK(elaborate(*parse_gdsl("perm(5; (0 1)(2 3 4))"), ".").order() == 6);
  CHECK(elaborate(*parse_gdsl("sd(C(5), C(4), [g1: 0 2 4 1 3])"), ".").order()
        == 20);
  CHECK(elaborate(*parse_gdsl("# leading comment\nC(4) # trailing"), ".")
            .order()
        == 4);
}

TEST_CASE("dsl reports positions on bad input")
{
  auto bad = [](const std::string &text) {
    try {
      parse_gdsl(text);
      FAIL("no error for: " << text);
    } catch (const SyntaxError &e) {
      return std::pair<std::size_t, std::size_t>{e.line(), e.column()};
    }
    return std::pair<std::size_t, std::size_t>{0, 0};
  };

  CHECK(bad("C(6").second > 0);
  CHECK(bad("C()").second > 0);
  CHECK(bad("C(2) x\n  Z9").first == 2);
  CHECK(bad("perm(4; )").second > 0);
  CHECK(bad("C(99999999)").second > 0);
  CHECK(bad("sd(C(5), C(4))").second > 0);

  // repeated point inside a cycle
  CHECK_THROWS_AS(parse_gdsl("perm(4; (0 1 0))"), SyntaxError);
  // point out of the declared degree
  CHECK_THROWS_AS(parse_gdsl("perm(3; (0 5))"), SyntaxError);

  // semantic problems surface at elaboration time
  CHECK_THROWS_AS(elaborate(*parse_gdsl("C(0)"), "."), Error);
  try {
    elaborate(*parse_gdsl("sd(C(5), C(4), [g2: 0 2 4 1 3])"), ".");
    FAIL("bad generator reference accepted");
  } catch (const Error &e) {
    CHECK(e.code() == errc::semantic_error);
    CHECK(std::string(e.what()).find("g2") != std::string::npos);
  }
  // image list of the wrong length
  CHECK_THROWS_AS(elaborate(*parse_gdsl("sd(C(5), C(4), [g1: 0 2 4 1])"), "."),
                  Error);
  // action must be an automorphism
  CHECK_THROWS_AS(elaborate(*parse_gdsl("sd(C(5), C(4), [g1: 0 2 1 4 3])"), "."),
                  Error);
}

TEST_CASE("dsl round-trips through its pretty printer")
{
  for (const auto &file : testsupport::corpus_files()) {
    std::filesystem::path path(file);
    if (path.extension() != ".gdsl")
      continue;
    std::ifstream in(path);
    std::stringstream buf;
    buf << in.rdbuf();
    AstPtr ast = parse_gdsl(buf.str());
    std::string printed = pretty_gdsl(*ast);
    INFO(path.filename().string() << " -> " << printed);
    AstPtr again = parse_gdsl(printed);
    CHECK(*again == *ast);
    CHECK(pretty_gdsl(*again) == printed);
  }
}

TEST_CASE("pretty printer canonicalizes cycles")
{
  AstPtr a = parse_gdsl("perm(4; (2 3)(0 1))");
  CHECK(pretty_gdsl(*a) == "perm(4; (0 1)(2 3))");
  AstPtr b = parse_gdsl("perm(3; (1 2 0))");
  CHECK(pretty_gdsl(*b) == "perm(3; (0 1 2))");
}

TEST_CASE("cayley files")
{
  TempDir tmp;
  Group c6 = cyclic(6);
  auto p = tmp.path / "c6.cayley";
  write_cayley_file(p.string(), c6);
  Group back = read_cayley_file(p.string());
  CHECK(back.order() == 6);
  CHECK(back.name() == "c6");
  for (std::uint16_t a = 0; a < 6; ++a)
    for (std::uint16_t b = 0; b < 6; ++b)
      CHECK(back.mul(a, b) == c6.mul(a, b));

  auto expect_code = [&](const std::string &text, errc code) {
    auto f = tmp.path / "bad.cayley";
    put(f, text);
    try {
      read_cayley_file(f.string());
      FAIL("accepted: " << text);
    } catch (const Error &e) {
      CHECK(e.code() == code);
    }
  };
  expect_code("", errc::malformed_table);
  expect_code("2\n0 1\n1 x\n", errc::malformed_table);
  expect_code("2\n0 1\n", errc::malformed_table);
  expect_code("2\n0 1\n1 5\n", errc::malformed_table);
  expect_code("2\n1 0\n0 1\n", errc::malformed_table);
  // '#' comments are allowed anywhere
  put(tmp.path / "ok.cayley", "# two element group\n2\n0 1 # row\n1 0\n");
  CHECK(read_cayley_file((tmp.path / "ok.cayley").string()).order() == 2);

  CHECK_THROWS_AS(read_cayley_file((tmp.path / "missing.cayley").string()),
                  Error);
}

TEST_CASE("group files resolve table references relative to themselves")
{
  TempDir tmp;
  write_cayley_file((tmp.path / "k4.cayley").string(),
                    direct_product(cyclic(2), cyclic(2)));
  put(tmp.path / "combo.gdsl", "table(\"k4.cayley\") x C(3)\n");
  Group g = load_group_file((tmp.path / "combo.gdsl").string());
  CHECK(g.order() == 12);
  CHECK(g.name() == "combo");

  put(tmp.path / "plain.gdsl", "D(10)\n");
  CHECK(load_group_file((tmp.path / "plain.gdsl").string()).name() == "plain");

  put(tmp.path / "note.txt", "C(2)\n");
  try {
    load_group_file((tmp.path / "note.txt").string());
    FAIL("unsupported extension accepted");
  } catch (const Error &e) {
    CHECK(e.code() == errc::io_error);
  }
}

TEST_CASE("corpus groups elaborate and obey declared caps")
{
  const auto &groups = testsupport::corpus_groups();
  CHECK(groups.size() == testsupport::corpus_files().size());
  for (const auto &g : groups) {
    CHECK(g.order() >= 1);
    CHECK(g.order() <= kMaxOrder);
  }
}
