#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "coverforge/catalog.hpp"
#include "coverforge/invariants.hpp"
#include "coverforge/oracle.hpp"
#include "coverforge/serialize.hpp"

namespace {

using namespace coverforge;

constexpr int kExitOk = 0;
constexpr int kExitDistinguished = 1;
constexpr int kExitParseError = 2;
constexpr int kExitInconsistent = 3;

int max_cover_degree() {
  if (const char* env = std::getenv("COVERFORGE_MAX_P")) {
    try {
      return std::max(2, std::stoi(env));
    } catch (const std::exception&) {
      return 6;
    }
  }
  return 6;
}

void check_p(int p) {
  if (p < 2) throw BraidError("cover degree p must be >= 2");
  int cap = max_cover_degree();
  if (p > cap)
    throw BraidError("cover degree " + std::to_string(p) + " exceeds cap " +
                     std::to_string(cap) + " (set COVERFORGE_MAX_P to raise)");
}

// "2" or "2..5"
std::vector<int> parse_p_range(const std::string& text) {
  size_t dots = text.find("..");
  int lo, hi;
  if (dots == std::string::npos) {
    lo = hi = std::stoi(text);
  } else {
    lo = std::stoi(text.substr(0, dots));
    hi = std::stoi(text.substr(dots + 2));
  }
  if (hi < lo) throw BraidError("empty p range");
  std::vector<int> out;
  for (int p = lo; p <= hi; ++p) {
    check_p(p);
    out.push_back(p);
  }
  return out;
}

std::vector<int> parse_params(const std::string& text) {
  std::vector<int> out;
  std::string cur;
  std::istringstream in(text);
  while (std::getline(in, cur, ',')) out.push_back(std::stoi(cur));
  return out;
}

struct AnalyzeArgs {
  std::string braid;
  int strands = 2;
  int p = 2;
  std::string format = "text";
  std::string export_dot;
  std::string export_json;
  std::string qp_cert;
};

int run_analyze(const AnalyzeArgs& a) {
  check_p(a.p);
  BraidWord word = parse_braid(a.braid, a.strands);
  std::optional<QuasipositivityCertificate> cert;
  if (!a.qp_cert.empty()) {
    std::ifstream in(a.qp_cert);
    if (!in) throw BraidError("cannot open certificate file " + a.qp_cert);
    cert = certificate_from_json(Json::parse(in), a.strands);
  }
  InvariantReport report = analyze(word, a.p, cert);
  if (!a.export_dot.empty()) {
    std::ofstream out(a.export_dot);
    out << export_diagram(build_diagram(word, a.p), DiagramFormat::dot);
  }
  if (!a.export_json.empty()) {
    std::ofstream out(a.export_json);
    out << export_diagram(build_diagram(word, a.p), DiagramFormat::json) << "\n";
  }
  if (a.format == "json")
    std::cout << to_json(report).dump(2) << "\n";
  else
    std::cout << report_text(report);
  return kExitOk;
}

struct CompareArgs {
  std::string braid1, braid2;
  int strands1 = 2, strands2 = 2;
  int p = 2;
  std::string format = "text";
};

int run_compare(const CompareArgs& a) {
  check_p(a.p);
  BraidWord b1 = parse_braid(a.braid1, a.strands1);
  BraidWord b2 = parse_braid(a.braid2, a.strands2);
  ComparisonVerdict v = compare_braids(b1, b2, a.p);
  if (a.format == "json")
    std::cout << to_json(v).dump(2) << "\n";
  else
    std::cout << verdict_text(v);
  return v.conclusion == Conclusion::invariants_distinguish ? kExitDistinguished
                                                            : kExitOk;
}

int run_catalog_list() {
  for (const auto& e : builtin_entries())
    std::cout << e.name << "  [" << format_braid(e.word) << " in B"
              << e.word.strands() << "]  -- " << e.provenance << "\n";
  for (const auto& pr : builtin_pairs())
    std::cout << pr.name << "  [" << format_braid(pr.left) << " | "
              << format_braid(pr.right) << " in B" << pr.left.strands()
              << "]  -- " << pr.provenance << "\n";
  std::cout << "families: bm(u,v,w) flype(m) ngot torus(n,k) lens(k) base(n) uot\n";
  return kExitOk;
}

int run_catalog_run(const std::string& p_range, const std::string& family,
                    const std::string& params) {
  CatalogRunOptions opts;
  opts.ps = parse_p_range(p_range);
  opts.family = family;
  if (!params.empty()) opts.params = parse_params(params);
  auto checks = run_catalog(opts);
  int failures = 0;
  for (const auto& c : checks) {
    std::cout << (c.pass ? "PASS" : "FAIL") << "  " << c.name;
    if (!c.detail.empty()) std::cout << "  " << c.detail;
    std::cout << "\n";
    if (!c.pass) ++failures;
  }
  std::cout << checks.size() - failures << "/" << checks.size() << " checks passed\n";
  return failures == 0 ? kExitOk : kExitDistinguished;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "coverforge: invariants of cyclic branched covers of transverse braid "
      "closures"};
  app.require_subcommand(1);

  AnalyzeArgs aa;
  CLI::App* analyze_cmd =
      app.add_subcommand("analyze", "analyze one braid's p-fold branched cover");
  analyze_cmd->add_option("--braid", aa.braid, "braid word, e.g. \"s1 s2 -s1\"")->required();
  analyze_cmd->add_option("--strands", aa.strands, "strand count")->required();
  analyze_cmd->add_option("--p", aa.p, "cover degree")->required();
  analyze_cmd->add_option("--format", aa.format, "text|json")
      ->check(CLI::IsMember({"text", "json"}));
  analyze_cmd->add_option("--export-dot", aa.export_dot, "write linking graph DOT file");
  analyze_cmd->add_option("--export-json", aa.export_json, "write surgery diagram JSON file");
  analyze_cmd->add_option("--qp-cert", aa.qp_cert, "quasipositivity certificate JSON file");

  CompareArgs ca;
  CLI::App* compare_cmd =
      app.add_subcommand("compare", "compare two braids' branched covers");
  compare_cmd->add_option("--braid1", ca.braid1)->required();
  compare_cmd->add_option("--strands1", ca.strands1)->required();
  compare_cmd->add_option("--braid2", ca.braid2)->required();
  compare_cmd->add_option("--strands2", ca.strands2)->required();
  compare_cmd->add_option("--p", ca.p, "cover degree")->required();
  compare_cmd->add_option("--format", ca.format, "text|json")
      ->check(CLI::IsMember({"text", "json"}));

  CLI::App* catalog_cmd = app.add_subcommand("catalog", "built-in example catalog");
  catalog_cmd->require_subcommand(1);
  CLI::App* list_cmd = catalog_cmd->add_subcommand("list", "list entries");
  CLI::App* run_cmd = catalog_cmd->add_subcommand("run", "run catalog checks");
  std::string p_range = "2", family, params;
  run_cmd->add_option("--p", p_range, "cover degree or range, e.g. 2 or 2..5");
  run_cmd->add_option("--family", family, "bm|flype|ngot|torus|lens|base|uot");
  run_cmd->add_option("--params", params, "comma-separated family parameters");

  CLI11_PARSE(app, argc, argv);

  try {
    if (*analyze_cmd) return run_analyze(aa);
    if (*compare_cmd) return run_compare(ca);
    if (*list_cmd) return run_catalog_list();
    if (*run_cmd) return run_catalog_run(p_range, family, params);
  } catch (const ClassificationError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInconsistent;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitParseError;
  }
  return kExitParseError;
}
