// Acceptance gate: one line per criterion, nonzero exit if any fails.
#include <chrono>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <sys/wait.h>
#include <unistd.h>
#include <vector>

#include "signil/cayley_io.hpp"
#include "signil/classify.hpp"
#include "signil/dsl.hpp"
#include "signil/sigma_spec.hpp"
#include "support/battery.hpp"
#include "support/corpus.hpp"
#include "support/oracles.hpp"

#ifndef SIGNIL_CLI_PATH
#error "SIGNIL_CLI_PATH must point at the signil executable"
#endif

using namespace signil;
using Clock = std::chrono::steady_clock;

namespace {

int failures = 0;

void report(int n, bool ok, const std::string &detail)
{
  std::cout << "criterion " << n << ": " << (ok ? "PASS" : "FAIL");
  if (!detail.empty())
    std::cout << " (" << detail << ")";
  std::cout << std::endl;
  if (!ok)
    ++failures;
}

double seconds_since(Clock::time_point t0)
{
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

const Group &corpus_group(const std::string &name)
{
  for (const auto &g : testsupport::corpus_groups())
    if (g.name() == name)
      return g;
  throw std::runtime_error("missing corpus group " + name);
}

const std::string kEx13 = "blocks:{23}{11};rest:coblock";

struct CliResult {
  int exit_code = -1;
  std::string out;
};

CliResult run_cli(const std::string &args)
{
  std::string cmd = std::string(SIGNIL_CLI_PATH) + " " + args + " 2>/dev/null";
  CliResult r;
  FILE *p = ::popen(cmd.c_str(), "r");
  if (!p)
    throw std::runtime_error("cannot run " + cmd);
  char buf[4096];
  std::size_t got;
  while ((got = ::fread(buf, 1, sizeof buf, p)) > 0)
    r.out.append(buf, got);
  int status = ::pclose(p);
  r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

std::string strip_timing(const std::string &text)
{
  std::istringstream in(text);
  std::string line, out;
  while (std::getline(in, line))
    if (line.find("\"timing_ms\"") == std::string::npos)
      out += line + "\n";
  return out;
}

void criterion1()
{
  std::string detail;
  bool ok = true;
  {
    auto t0 = Clock::now();
    const Group &g = corpus_group("bxr");
    SigmaAnalysis ctx(g, parse_sigma_spec(kEx13));
    auto rep = classify_sigma(ctx);
    ok = ok && !rep.sigma_nilpotent && rep.semi;
    double s = seconds_since(t0);
    ok = ok && s <= 120.0;
    detail += "bxr " + std::to_string(s).substr(0, 5) + "s";
  }
  {
    auto t0 = Clock::now();
    const Group &g = corpus_group("bxc");
    SigmaAnalysis ctx(g, parse_sigma_spec(kEx13));
    auto rep = classify_sigma(ctx);
    bool witness_ok = false;
    for (const auto &w : rep.witnesses)
      if (w.flag == "semi")
        witness_ok = w.subgroup.count() > 1 &&
                     !is_normal_in(g, w.subgroup, g.gens()) &&
                     !ctx.is_sigma_nilpotent(w.normalizer);
    ok = ok && !rep.semi && witness_ok;
    double s = seconds_since(t0);
    ok = ok && s <= 120.0;
    detail += ", bxc " + std::to_string(s).substr(0, 5) + "s";
  }
  {
    auto t0 = Clock::now();
    const Group &g = corpus_group("g360");
    SigmaAnalysis ctx(g, parse_sigma_spec("blocks:{5}{3};rest:coblock"));
    auto rep = classify_sigma(ctx);
    ok = ok && rep.weakly_semi && !rep.semi;
    double s = seconds_since(t0);
    ok = ok && s <= 120.0;
    detail += ", g360 " + std::to_string(s).substr(0, 5) + "s";
  }
  report(1, ok, detail);
}

void criterion2()
{
  std::size_t verified = 0, vacuous = 0, fails = 0;
  for (const auto &g : testsupport::corpus_groups()) {
    auto L = all_subgroups(g);
    for (const auto &mode : testsupport::sigma_modes()) {
      SigmaAnalysis ctx(g, parse_sigma_spec(mode));
      ctx.adopt_lattice(L);
      auto rep = verify_theorem_A(ctx);
      if (!rep.hypothesis_holds)
        continue;
      ++verified;
      for (const auto &c : rep.clauses) {
        if (c.verdict == Verdict::vacuous)
          ++vacuous;
        else if (c.verdict != Verdict::pass)
          ++fails;
      }
      if (rep.clauses.size() != 5)
        ++fails;
    }
  }
  report(2, fails == 0 && verified > 0,
         std::to_string(verified) + " group/mode pairs, " +
             std::to_string(vacuous) + " vacuous clauses, " +
             std::to_string(fails) + " failures");
}

void criterion3()
{
  std::size_t verified = 0, fails = 0;
  bool bxr_ok = false;
  for (const auto &g : testsupport::corpus_groups()) {
    auto L = all_subgroups(g);
    for (const auto &mode : testsupport::sigma_modes()) {
      SigmaAnalysis ctx(g, parse_sigma_spec(mode));
      ctx.adopt_lattice(L);
      auto rep = verify_theorem_B(ctx);
      if (!rep.hypothesis_holds)
        continue;
      ++verified;
      for (const auto &c : rep.clauses)
        if (c.verdict != Verdict::pass && c.verdict != Verdict::vacuous)
          ++fails;
      if (rep.clauses.size() != 4)
        ++fails;
      if (g.name() == "bxr" && mode == kEx13 && rep.clauses.size() == 4)
        bxr_ok = rep.clauses[0].verdict == Verdict::pass &&
                 rep.clauses[2].verdict == Verdict::pass;
    }
  }
  report(3, fails == 0 && verified > 0 && bxr_ok,
         std::to_string(verified) + " hypotheses held, " +
             std::to_string(fails) +
             " failures, bxr quotient clauses " +
             (bxr_ok ? "pass" : "fail"));
}

void criterion4()
{
  std::size_t checked = 0, fails = 0;
  for (const Group *g : testsupport::corpus_upto(200)) {
    auto L = all_subgroups(*g);
    auto bad = testsupport::degeneration_battery(*g, L);
    ++checked;
    fails += bad.size();
    for (const auto &m : bad)
      std::cerr << "  degeneration: " << m << "\n";
  }
  report(4, fails == 0,
         std::to_string(checked) + " groups, " + std::to_string(fails) +
             " mismatches");
}

void criterion5()
{
  auto t0 = Clock::now();
  std::size_t fails = 0, pairs = 0;
  for (const auto &g : testsupport::corpus_groups()) {
    auto L = all_subgroups(g);
    for (const auto &mode : testsupport::sigma_modes()) {
      auto bad = testsupport::lemma_battery(g, L, mode);
      ++pairs;
      fails += bad.size();
      for (const auto &m : bad)
        std::cerr << "  lemma: " << m << "\n";
    }
  }
  double s = seconds_since(t0);
  report(5, fails == 0 && s <= 600.0,
         std::to_string(pairs) + " group/mode pairs, " +
             std::to_string(fails) + " failures, " +
             std::to_string(s).substr(0, 6) + "s");
}

void criterion6()
{
  std::size_t fails = 0;
  for (const Group *g : testsupport::corpus_upto(360)) {
    auto L = all_subgroups(*g);
    for (const auto &mode : testsupport::sigma_modes()) {
      PrimePartition s = parse_sigma_spec(mode);
      for (auto variant :
           {SubnormalVariant::classic, SubnormalVariant::sigma}) {
        SigmaAnalysis ctx(*g, s);
        ctx.adopt_lattice(L);
        auto reduced = classify_sigma(ctx, variant);
        auto full = oracle::classify_full(ctx, variant);
        if (reduced.semi != full.semi ||
            reduced.weakly_semi != full.weakly_semi) {
          ++fails;
          std::cerr << "  classify oracle: " << g->name() << " / " << mode
                    << " / " << variant_name(variant) << "\n";
        }
      }
    }
  }
  for (const Group *g : testsupport::corpus_upto(200)) {
    for (const auto &mode : testsupport::sigma_modes()) {
      PrimePartition s = parse_sigma_spec(mode);
      SigmaAnalysis ctx(*g, s);
      if (!(ctx.sigma_hypercentre() == oracle::hypercentre_brute(*g, s))) {
        ++fails;
        std::cerr << "  hypercentre oracle: " << g->name() << " / " << mode
                  << "\n";
      }
    }
  }
  for (const Group *g : testsupport::corpus_upto(100)) {
    auto L = all_subgroups(*g);
    std::map<std::pair<std::size_t, std::size_t>, int> memo;
    for (std::size_t yi = 0; yi < L.members.size(); ++yi)
      for (std::size_t si = 0; si < L.members.size(); ++si) {
        if (!L.members[si].subset_of(L.members[yi]))
          continue;
        bool lib = is_subnormal_in(*g, L.members[si], L.members[yi],
                                   small_gens(*g, L.members[yi]));
        if (lib != oracle::subnormal_exhaustive(*g, L, si, yi, memo)) {
          ++fails;
          std::cerr << "  subnormal oracle: " << g->name() << " (" << si
                    << ", " << yi << ")\n";
        }
      }
  }
  report(6, fails == 0, std::to_string(fails) + " oracle disagreements");
}

void criterion7()
{
  std::size_t fails = 0;
  for (const char *name : {"s3", "sl23", "f21", "f20"}) {
    const Group &g = corpus_group(name);
    auto L = all_subgroups(g);
    SigmaAnalysis ctx(g, PrimePartition::sigma1());
    ctx.adopt_lattice(L);
    if (critical_subgroups(ctx).empty()) {
      ++fails;
      std::cerr << "  schmidt: no critical subgroups in " << name << "\n";
    }
    auto bad = testsupport::schmidt_battery(g, L);
    fails += bad.size();
    for (const auto &m : bad)
      std::cerr << "  schmidt: " << m << "\n";
  }
  std::size_t criticals = 0;
  for (const auto &g : testsupport::corpus_groups()) {
    auto L = all_subgroups(g);
    for (const auto &mode : testsupport::sigma_modes()) {
      SigmaAnalysis ctx(g, parse_sigma_spec(mode));
      ctx.adopt_lattice(L);
      for (auto i : critical_subgroups(ctx)) {
        ++criticals;
        if (!schmidt_structure(ctx, i).has_value()) {
          ++fails;
          std::cerr << "  schmidt: critical subgroup of " << g.name()
                    << " under " << mode << " is not Schmidt\n";
        }
      }
    }
  }
  report(7, fails == 0,
         std::to_string(criticals) + " critical subgroups checked, " +
             std::to_string(fails) + " failures");
}

void criterion8()
{
  std::string corpus = testsupport::corpus_dir();
  std::size_t fails = 0;
  auto expect = [&](const std::string &args, int code,
                    const std::string &what) {
    auto r = run_cli(args);
    if (r.exit_code != code) {
      ++fails;
      std::cerr << "  cli: " << what << ": expected exit " << code << ", got "
                << r.exit_code << "\n";
    }
    return r;
  };

  std::string analyze = "analyze --group " + corpus +
                        "/bxr.gdsl --sigma \"" + kEx13 + "\" --json -";
  auto first = expect(analyze, 0, "analyze bxr");
  auto second = expect(analyze, 0, "analyze bxr again");
  if (strip_timing(first.out) != strip_timing(second.out)) {
    ++fails;
    std::cerr << "  cli: analyze output is not deterministic\n";
  }
  if (first.out.find("\"timing_ms\"") == std::string::npos) {
    ++fails;
    std::cerr << "  cli: analyze output lacks timing_ms\n";
  }

  std::string verify = "verify --theorem A --group " + corpus +
                       "/bxr.gdsl --sigma \"" + kEx13 + "\" --json -";
  auto v1 = expect(verify, 0, "verify A bxr");
  auto v2 = expect(verify, 0, "verify A bxr again");
  if (strip_timing(v1.out) != strip_timing(v2.out)) {
    ++fails;
    std::cerr << "  cli: verify output is not deterministic\n";
  }

  expect("verify --theorem B --group " + corpus +
             "/w1197.gdsl --sigma pi:3,19",
         0, "verify B with failed hypothesis");
  expect("analyze --group " + corpus + "/missing.gdsl --sigma singletons", 2,
         "missing group file");
  expect("analyze --group " + corpus + "/s4.gdsl --sigma pi:9", 2,
         "bad sigma spec");
  expect("analyze --group " + corpus +
             "/s4.gdsl --sigma singletons --max-subgroups 3",
         3, "subgroup cap");

  namespace fs = std::filesystem;
  fs::path tmp = fs::temp_directory_path() /
                 ("signil-acceptance-" + std::to_string(::getpid()));
  fs::create_directories(tmp);
  {
    std::ofstream ok(tmp / "fine.gdsl");
    ok << "C(6)\n";
    std::ofstream bad(tmp / "broken.gdsl");
    bad << "C(\n";
  }
  expect("scan --dir " + tmp.string() + " --sigma singletons", 2,
         "scan with a broken entry");
  fs::remove_all(tmp);

  // parser round-trip over every fixture file
  for (const auto &file : testsupport::corpus_files()) {
    std::filesystem::path p(file);
    try {
      if (p.extension() == ".gdsl") {
        std::ifstream in(p);
        std::stringstream buf;
        buf << in.rdbuf();
        AstPtr ast = parse_gdsl(buf.str());
        if (!(*parse_gdsl(pretty_gdsl(*ast)) == *ast)) {
          ++fails;
          std::cerr << "  round-trip: " << p.filename().string() << "\n";
        }
      } else {
        Group g = read_cayley_file(p.string());
        std::ostringstream out;
        write_cayley_stream(out, g);
        std::istringstream back(out.str());
        Group h = read_cayley_stream(back, g.name());
        bool same = g.order() == h.order();
        for (std::uint16_t a = 0; same && a < g.order(); ++a)
          for (std::uint16_t b = 0; same && b < g.order(); ++b)
            same = g.mul(a, b) == h.mul(a, b);
        if (!same) {
          ++fails;
          std::cerr << "  round-trip: " << p.filename().string() << "\n";
        }
      }
    } catch (const Error &e) {
      ++fails;
      std::cerr << "  round-trip: " << p.filename().string() << ": "
                << e.what() << "\n";
    }
  }

  report(8, fails == 0, std::to_string(fails) + " contract violations");
}

}  // namespace

int main()
{
  try {
    criterion1();
    criterion2();
    criterion3();
    criterion4();
    criterion5();
    criterion6();
    criterion7();
    criterion8();
  } catch (const std::exception &e) {
    std::cerr << "acceptance aborted: " << e.what() << "\n";
    return 1;
  }
  return failures == 0 ? 0 : 1;
}
