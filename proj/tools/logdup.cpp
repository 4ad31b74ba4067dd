#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "logdup/evaluation.hpp"
#include "logdup/report.hpp"
#include "logdup/scan.hpp"

namespace {

using namespace logdup;

struct ScanFlags {
  std::vector<std::string> roots;
  std::optional<std::string> config_file;
  std::optional<std::string> patterns;
  std::optional<std::string> format;
  std::optional<std::size_t> stop_words;
  std::optional<double> clone_threshold;
  std::optional<int> clone_min_lines;
  std::optional<std::string> logger_pattern;
  std::vector<std::string> include;
  std::vector<std::string> exclude;
  bool with_clone_analysis = false;
  bool include_tests = false;
  bool verbose = false;

  CLI::Option* clone_flag = nullptr;
  CLI::Option* tests_flag = nullptr;
  CLI::Option* verbose_flag = nullptr;
  CLI::Option* include_opt = nullptr;
  CLI::Option* exclude_opt = nullptr;

  void attach(CLI::App& app) {
    app.add_option("root", roots, "Source directories or files")->required();
    app.add_option("--config", config_file, "key = value settings file; flags override it");
    app.add_option("--patterns", patterns, "Comma list of ic, ie, lm, dp");
    app.add_option("--format", format, "text or json")
        ->check(CLI::IsMember({"text", "json"}));
    app.add_option("--stopwords", stop_words, "Stop-word cap");
    clone_flag = app.add_flag("--with-clone-analysis", with_clone_analysis,
                              "Correlate duplicate sets with code clones");
    app.add_option("--clone-threshold", clone_threshold, "Clone similarity threshold (percent)");
    app.add_option("--clone-min-lines", clone_min_lines, "Minimum normalized lines of a clone");
    tests_flag = app.add_flag("--include-tests", include_tests, "Scan test sources too");
    verbose_flag = app.add_flag("--verbose,-v", verbose, "List suppressed and informational items");
    include_opt = app.add_option("--include", include, "Only scan paths matching these globs");
    exclude_opt = app.add_option("--exclude", exclude, "Skip paths matching these globs");
    app.add_option("--logger-pattern", logger_pattern, "Regex for logger receiver names");
  }

  ScanConfig resolve() const {
    ScanConfig config;
    if (config_file) apply_config_file(*config_file, config);
    for (const auto& r : roots) config.roots.emplace_back(r);
    if (patterns) config.patterns = parse_pattern_list(*patterns);
    if (format) config.format = *format == "json" ? OutputFormat::Json : OutputFormat::Text;
    if (stop_words) config.stop_word_cap = *stop_words;
    if (clone_flag->count() > 0) config.with_clone_analysis = with_clone_analysis;
    if (clone_threshold) config.clone.threshold = *clone_threshold;
    if (clone_min_lines) config.clone.min_lines = *clone_min_lines;
    if (tests_flag->count() > 0) config.include_tests = include_tests;
    if (verbose_flag->count() > 0) config.verbose = verbose;
    if (include_opt->count() > 0) config.include_globs = include;
    if (exclude_opt->count() > 0) config.exclude_globs = exclude;
    if (logger_pattern) config.logger.receiver_pattern = *logger_pattern;
    config.threads = default_thread_count();
    return config;
  }
};

std::string percent_or_na(const std::optional<double>& v) {
  if (!v) return "N/A";
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.2f%%", *v);
  return buf;
}

int run_scan_command(const ScanFlags& flags) {
  const ScanConfig config = flags.resolve();
  const ScanOutput scan = run_pipeline(config);
  const Report report = build_report(scan, config);
  std::cout << emit(report, config.format, config.verbose);
  return exit_code_for(report);
}

int run_eval_command(const ScanFlags& flags, const std::string& truth_file,
                     const std::string& pattern_name, bool baseline, std::uint64_t seed,
                     std::size_t iterations, const std::optional<std::string>& write_truth) {
  ScanConfig config = flags.resolve();
  const auto pattern = parse_smell_pattern(pattern_name);
  if (!pattern) throw ScanError("unknown pattern '" + pattern_name + "'");
  const ScanOutput scan = run_pipeline(config);

  if (write_truth) {
    std::vector<SmellInstance> all = scan.findings;
    const auto entries = truth_from_findings(scan.sets, scan.statements, all);
    std::ofstream out(*write_truth, std::ios::binary);
    if (!out) throw ScanError("cannot write " + *write_truth);
    out << format_ground_truth(entries);
  }

  std::ifstream in(truth_file, std::ios::binary);
  if (!in) throw ScanError("cannot read truth file " + truth_file);
  const auto entries = parse_ground_truth(in);
  const GroundTruth truth = resolve_ground_truth(entries, scan.sets, scan.statements);
  const Score s = score(scan.findings, truth, *pattern);
  std::cout << "pattern " << to_string(*pattern) << "  candidates " << truth.candidates
            << "  detected " << s.detected << "  correct " << s.correct << "  truth " << s.truth
            << "  precision " << percent_or_na(s.precision) << "  recall "
            << percent_or_na(s.recall) << '\n';
  if (baseline) {
    const BaselineResult b = random_baseline(truth, *pattern, iterations, seed);
    std::cout << "baseline  iterations " << b.iterations << "  seed " << seed
              << "  positive rate " << percent_or_na(100.0 * b.positive_rate)
              << "  precision " << percent_or_na(b.mean_precision) << "  recall "
              << percent_or_na(b.mean_recall) << '\n';
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Detects duplicate logging code smells in Java sources", "logdup"};
  app.set_version_flag("--version", std::string(kToolVersion));
  app.require_subcommand(1);

  ScanFlags scan_flags;
  CLI::App* scan_cmd = app.add_subcommand("scan", "Scan sources and report findings");
  scan_flags.attach(*scan_cmd);

  ScanFlags eval_flags;
  std::string truth_file;
  std::string pattern_name;
  bool baseline = false;
  std::uint64_t seed = 0;
  std::size_t iterations = 30;
  std::optional<std::string> write_truth;
  CLI::App* eval_cmd = app.add_subcommand("eval", "Score findings against a ground truth");
  eval_flags.attach(*eval_cmd);
  eval_cmd->add_option("--truth", truth_file, "Ground-truth file")->required();
  eval_cmd->add_option("--pattern", pattern_name, "Pattern to score")->required();
  eval_cmd->add_flag("--baseline", baseline, "Also run the random baseline");
  eval_cmd->add_option("--seed", seed, "Baseline seed");
  eval_cmd->add_option("--iterations", iterations, "Baseline iterations")
      ->check(CLI::PositiveNumber);
  eval_cmd->add_option("--write-truth", write_truth,
                       "Write the scan's duplicate sets, labelled with findings, to a file");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (*scan_cmd) return run_scan_command(scan_flags);
    return run_eval_command(eval_flags, truth_file, pattern_name, baseline, seed, iterations,
                            write_truth);
  } catch (const std::exception& e) {
    std::cerr << "logdup: " << e.what() << '\n';
    return 2;
  }
}
