#include <algorithm>
#include <atomic>
#include <chrono>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <string>
#include <thread>
#include <vector>

#include <CLI11.hpp>

#include "signil/classify.hpp"
#include "signil/dsl.hpp"
#include "signil/report_json.hpp"
#include "signil/sigma_spec.hpp"

namespace fs = std::filesystem;
using namespace signil;

namespace {

using Clock = std::chrono::steady_clock;

long elapsed_ms(Clock::time_point t0)
{
  return std::chrono::duration_cast<std::chrono::milliseconds>(Clock::now()
                                                               - t0)
      .count();
}

void emit(const ordered_json &doc, const std::string &json_path,
          const std::string &summary)
{
  if (json_path == "-") {
    std::cout << doc.dump(2) << "\n";
    return;
  }
  if (!json_path.empty()) {
    std::ofstream out(json_path);
    if (!out)
      fail(errc::io_error, "cannot write '" + json_path + "'");
    out << doc.dump(2) << "\n";
  }
  std::cout << summary;
}

std::string flag_lines(const ClassificationReport &cls)
{
  std::string s;
  s += "  sigma_nilpotent: ";
  s += cls.sigma_nilpotent ? "true" : "false";
  s += "\n  semi_sigma_nilpotent: ";
  s += cls.semi ? "true" : "false";
  s += "\n  weakly_semi_sigma_nilpotent: ";
  s += cls.weakly_semi ? "true" : "false";
  s += " (";
  s += variant_name(cls.variant);
  s += " subnormality)\n";
  if (cls.weakly_semi_other) {
    s += "  weakly_semi under the other variant: ";
    s += *cls.weakly_semi_other ? "true" : "false";
    s += "\n";
  }
  return s;
}

struct AnalyzeOpts {
  std::string group, sigma, json;
  bool witnesses = false;
  std::string variant = "classic";
  std::uint32_t max_order = kMaxOrder;
  std::size_t max_subgroups = 0;
};

int run_analyze(const AnalyzeOpts &o)
{
  auto t0 = Clock::now();
  Group G = load_group_file(o.group);
  PrimePartition sigma = parse_sigma_spec(o.sigma);
  AnalysisCaps caps;
  caps.max_order = o.max_order;
  caps.max_subgroups = o.max_subgroups;
  SigmaAnalysis ctx(G, sigma, caps);
  SubnormalVariant var = o.variant == "sigma" ? SubnormalVariant::sigma
                                              : SubnormalVariant::classic;
  ClassificationReport cls = classify_sigma(ctx, var);
  ordered_json doc = build_analyze_doc(ctx, cls, o.witnesses);
  doc["timing_ms"] = elapsed_ms(t0);

  std::string summary = "group " + G.name() + " (order "
                        + std::to_string(G.order()) + "), sigma "
                        + sigma.canonical() + "\n";
  summary += flag_lines(cls);
  const auto &sub = doc["subgroups"];
  summary += "  F_sigma " + sub["f_sigma_order"].dump() + ", Z_sigma "
             + sub["z_sigma_order"].dump() + ", residual "
             + sub["residual_order"].dump() + "\n";
  emit(doc, o.json, summary);
  return 0;
}

struct VerifyOpts {
  std::string theorem, group, sigma, json;
};

int run_verify(const VerifyOpts &o)
{
  auto t0 = Clock::now();
  Group G = load_group_file(o.group);
  PrimePartition sigma = parse_sigma_spec(o.sigma);
  SigmaAnalysis ctx(G, sigma);
  TheoremReport rep = o.theorem == "A" ? verify_theorem_A(ctx)
                                       : verify_theorem_B(ctx);
  ordered_json doc = build_verify_doc(ctx, rep);
  doc["timing_ms"] = elapsed_ms(t0);

  std::string summary = "theorem " + o.theorem + " on " + G.name()
                        + " (order " + std::to_string(G.order()) + "), sigma "
                        + sigma.canonical() + "\n";
  summary += "  hypothesis: ";
  summary += rep.hypothesis_holds ? "holds" : "does not hold";
  if (!rep.hypothesis_reason.empty())
    summary += " (" + rep.hypothesis_reason + ")";
  summary += "\n";
  bool any_fail = false, any_capped = false;
  for (const auto &c : rep.clauses) {
    summary += "  " + c.id + " " + verdict_name(c.verdict);
    if (!c.note.empty())
      summary += "  " + c.note;
    summary += "\n";
    any_fail |= c.verdict == Verdict::fail;
    any_capped |= c.verdict == Verdict::capped;
  }
  emit(doc, o.json, summary);
  return any_fail ? 1 : any_capped ? 3 : 0;
}

struct ScanOpts {
  std::string dir, sigma, report;
};

int run_scan(const ScanOpts &o)
{
  PrimePartition sigma = parse_sigma_spec(o.sigma);
  std::vector<std::string> files;
  if (!fs::is_directory(o.dir))
    fail(errc::io_error, "'" + o.dir + "' is not a directory");
  for (const auto &ent : fs::directory_iterator(o.dir)) {
    if (!ent.is_regular_file())
      continue;
    auto ext = ent.path().extension().string();
    if (ext == ".gdsl" || ext == ".cayley")
      files.push_back(ent.path().string());
  }
  std::sort(files.begin(), files.end());

  std::vector<ordered_json> entries(files.size());
  std::atomic<bool> any_error{false}, any_capped{false};
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (;;) {
      std::size_t i = next.fetch_add(1);
      if (i >= files.size())
        return;
      ordered_json ent;
      ent["path"] = files[i];
      try {
        auto t0 = Clock::now();
        Group G = load_group_file(files[i]);
        SigmaAnalysis ctx(G, sigma);
        ClassificationReport cls = classify_sigma(ctx);
        ordered_json doc = build_analyze_doc(ctx, cls, false);
        doc["timing_ms"] = elapsed_ms(t0);
        ent["ok"] = true;
        ent["report"] = std::move(doc);
      } catch (const CapExceeded &e) {
        any_capped = true;
        ent["ok"] = false;
        ent["error"] = error_json(e);
      } catch (const Error &e) {
        any_error = true;
        ent["ok"] = false;
        ent["error"] = error_json(e);
      }
      entries[i] = std::move(ent);
    }
  };
  unsigned nt = std::max(1u, std::thread::hardware_concurrency());
  nt = std::min<unsigned>(nt, 8);
  nt = std::min<std::size_t>(nt, files.size() ? files.size() : 1);
  std::vector<std::thread> pool;
  for (unsigned t = 1; t < nt; ++t)
    pool.emplace_back(worker);
  worker();
  for (auto &t : pool)
    t.join();

  ordered_json doc;
  doc["tool_version"] = kToolVersion;
  doc["sigma"] = sigma.canonical();
  doc["entries"] = ordered_json::array();
  std::size_t ok = 0;
  for (auto &e : entries) {
    ok += e["ok"].get<bool>() ? 1 : 0;
    doc["entries"].push_back(std::move(e));
  }
  std::string summary = "scanned " + std::to_string(files.size())
                        + " group files, " + std::to_string(ok) + " ok\n";
  emit(doc, o.report, summary);
  return any_error ? 2 : any_capped ? 3 : 0;
}

}  // namespace

int main(int argc, char **argv)
{
  CLI::App app{"sigma-structure analysis of finite groups"};
  app.require_subcommand(1);

  AnalyzeOpts an;
  auto *analyze = app.add_subcommand("analyze", "classify one group");
  analyze->add_option("--group", an.group, "group file (.gdsl or .cayley)")
      ->required();
  analyze->add_option("--sigma", an.sigma, "prime partition spec")->required();
  analyze->add_option("--json", an.json, "write the JSON report here");
  analyze->add_flag("--witnesses", an.witnesses,
                    "include element lists in witnesses");
  analyze
      ->add_option("--subnormal-variant", an.variant,
                   "subnormality notion for the weak classification")
      ->check(CLI::IsMember({"classic", "sigma"}));
  analyze->add_option("--max-order", an.max_order, "group order cap");
  analyze->add_option("--max-subgroups", an.max_subgroups,
                      "subgroup lattice size cap (0 = unlimited)");

  VerifyOpts ve;
  auto *verify = app.add_subcommand("verify", "check a structure theorem");
  verify->add_option("--theorem", ve.theorem, "A or B")
      ->required()
      ->check(CLI::IsMember({"A", "B"}));
  verify->add_option("--group", ve.group, "group file")->required();
  verify->add_option("--sigma", ve.sigma, "prime partition spec")->required();
  verify->add_option("--json", ve.json, "write the JSON report here");

  ScanOpts sc;
  auto *scan = app.add_subcommand("scan", "analyze every group in a directory");
  scan->add_option("--dir", sc.dir, "directory of group files")->required();
  scan->add_option("--sigma", sc.sigma, "prime partition spec")->required();
  scan->add_option("--report", sc.report, "write the JSON report here");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError &e) {
    return app.exit(e);
  }

  try {
    if (*analyze)
      return run_analyze(an);
    if (*verify)
      return run_verify(ve);
    return run_scan(sc);
  } catch (const CapExceeded &e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  } catch (const Error &e) {
    if (e.code() == errc::internal_inconsistency)
      std::cerr << "internal inconsistency: " << e.what() << "\n";
    else
      std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}
