#include <cstdio>
#include <exception>
#include <iostream>
#include <string>
#include <thread>
#include <vector>

#include "CLI11.hpp"
#include "equipop/equipop.hpp"
#include "json.hpp"

namespace {

using namespace equipop;

unsigned default_threads() {
  const unsigned hc = std::thread::hardware_concurrency();
  return hc == 0 ? 1 : hc;
}

int cmd_enumerate(int n, const std::string& format) {
  if (format == "count") {
    std::cout << schroder_count(n).get_str() << "\n";
    return 0;
  }
  const auto perms = enumerate_separable(n);
  if (format == "lines") {
    for (const auto& p : perms) std::cout << display_string(p) << "\n";
    return 0;
  }
  nlohmann::json arr = nlohmann::json::array();
  for (const auto& p : perms) arr.push_back(display_string(p));
  std::cout << arr.dump(2) << "\n";
  return 0;
}

int cmd_tree(const std::string& text) {
  std::cout << to_string(decompose(parse_permutation(text))) << "\n";
  return 0;
}

int cmd_signature(const std::string& text) {
  std::cout << to_string(signature(decompose(parse_permutation(text)))) << "\n";
  return 0;
}

int cmd_wedge(const std::string& text) {
  std::cout << display_string(wedge(parse_partition(text)).second) << "\n";
  return 0;
}

int cmd_popularity(const std::string& text, int max_length, const std::string& format,
                   const CensusOptions& opts) {
  const Permutation sigma = parse_permutation(text);
  const int k = sigma.size();
  const TruncatedSeries series = popularity_series(sigma, max_length, opts);
  if (format == "series") {
    std::cout << to_string(series) << "\n";
    return 0;
  }
  if (format == "csv") {
    std::cout << "pattern";
    for (int n = k; n <= max_length; ++n) std::cout << "," << n;
    std::cout << "\n" << display_string(sigma);
    for (int n = k; n <= max_length; ++n)
      std::cout << "," << to_fraction_string(series.coeff(n));
    std::cout << "\n";
    return 0;
  }
  for (int n = k; n <= max_length; ++n)
    std::cout << (n > k ? "," : "") << to_fraction_string(series.coeff(n));
  std::cout << "\n";
  return 0;
}

int cmd_classes(int k, int max_length, const CensusOptions& opts) {
  const ClassReport report = equipopularity_classes(k, max_length, opts);
  std::cout << to_json(report).dump(2) << "\n";
  return report.matches ? 0 : 1;
}

int cmd_verify(const std::string& suite, int order, const CensusOptions& opts) {
  const auto results = run_suite(suite, order, opts);
  std::size_t passed = 0;
  for (const auto& r : results) {
    std::cout << (r.pass ? "PASS  " : "FAIL  ") << r.name;
    if (!r.detail.empty()) std::cout << "  [" << r.detail << "]";
    std::cout << "\n";
    if (r.pass) ++passed;
  }
  std::cout << passed << "/" << results.size() << " checks passed\n";
  return passed == results.size() ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"separable-permutation pattern census and classification toolkit"};
  app.require_subcommand(1);

  equipop::CensusOptions opts;
  opts.threads = static_cast<int>(default_threads());

  int n = 1;
  std::string format_enum = "lines";
  auto* enumerate = app.add_subcommand("enumerate", "list separable permutations of length n");
  enumerate->add_option("n", n, "permutation length")->required()->check(CLI::PositiveNumber);
  enumerate->add_option("--format", format_enum, "lines, json, or count")
      ->check(CLI::IsMember({"lines", "json", "count"}));

  std::string perm_text;
  auto* tree = app.add_subcommand("tree", "print the decomposition tree of a permutation");
  tree->add_option("permutation", perm_text, "one-line permutation, e.g. 3142 or 10,2,...")
      ->required();

  std::string sig_text;
  auto* sig = app.add_subcommand("signature", "print the arity partition of a permutation");
  sig->add_option("permutation", sig_text, "one-line permutation")->required();

  std::string part_text;
  auto* wedge_cmd = app.add_subcommand("wedge", "print the wedge permutation of a partition");
  wedge_cmd->add_option("partition", part_text, "comma-separated parts, e.g. 2,1")->required();

  std::string pop_text;
  int pop_max = 10;
  std::string pop_format = "plain";
  auto* pop = app.add_subcommand("popularity", "total occurrence counts over separable hosts");
  pop->add_option("pattern", pop_text, "separable pattern")->required();
  pop->add_option("--max-length", pop_max, "largest host length (default 10)");
  pop->add_option("--format", pop_format, "plain, series, or csv")
      ->check(CLI::IsMember({"plain", "series", "csv"}));
  pop->add_option("--threads", opts.threads, "census worker threads");
  pop->add_option("--budget", opts.budget, "largest window count allowed");

  int cls_k = 3;
  int cls_max = -1;
  auto* cls = app.add_subcommand("classes", "group patterns of one length by popularity");
  cls->add_option("--pattern-length", cls_k, "pattern length k")->required();
  cls->add_option("--max-length", cls_max, "largest host length (default k+4)");
  cls->add_option("--threads", opts.threads, "census worker threads");
  cls->add_option("--budget", opts.budget, "largest window count allowed");

  std::string suite = "all";
  int order = 10;
  auto* verify = app.add_subcommand("verify", "run an identity-check suite");
  verify->add_option("--suite", suite,
                     "schroder, bivariate, qgegenbauer, factorization, wedge, "
                     "classification, or all")
      ->check(CLI::IsMember({"schroder", "bivariate", "qgegenbauer", "factorization", "wedge",
                             "classification", "all"}));
  verify->add_option("--order", order, "series truncation order (default 10)");
  verify->add_option("--threads", opts.threads, "census worker threads");
  verify->add_option("--budget", opts.budget, "largest window count allowed");

  try {
    app.parse(argc, argv);
    if (*enumerate) return cmd_enumerate(n, format_enum);
    if (*tree) return cmd_tree(perm_text);
    if (*sig) return cmd_signature(sig_text);
    if (*wedge_cmd) return cmd_wedge(part_text);
    if (*pop) return cmd_popularity(pop_text, pop_max, pop_format, opts);
    if (*cls) return cmd_classes(cls_k, cls_max < 0 ? cls_k + 4 : cls_max, opts);
    if (*verify) return cmd_verify(suite, order, opts);
    return 2;
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  } catch (const equipop::parse_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const equipop::budget_exceeded& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}
