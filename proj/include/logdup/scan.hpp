#pragma once

#include <filesystem>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "logdup/clone_analysis.hpp"
#include "logdup/duplicate_index.hpp"
#include "logdup/inheritance.hpp"
#include "logdup/log_extraction.hpp"
#include "logdup/smell_detectors.hpp"
#include "logdup/source_model.hpp"

namespace logdup {

inline constexpr std::string_view kToolName = "logdup";
inline constexpr std::string_view kToolVersion = "1.0.0";

class ScanError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

enum class OutputFormat : std::uint8_t { Text, Json };

struct ScanConfig {
  std::vector<std::filesystem::path> roots;
  // fnmatch patterns matched against the root-relative path; `*` also
  // crosses directory separators.
  std::vector<std::string> include_globs;
  std::vector<std::string> exclude_globs;
  bool include_tests = false;
  LoggerConfig logger;
  std::set<SmellPattern> patterns = {SmellPattern::IC, SmellPattern::IE, SmellPattern::LM,
                                     SmellPattern::DP};
  std::size_t stop_word_cap = 50;
  bool with_clone_analysis = false;
  CloneOptions clone;
  OutputFormat format = OutputFormat::Text;
  bool verbose = false;
  unsigned threads = 1;
};

// Applies `key = value` lines (keys match the long flag names: patterns,
// format, stopwords, with-clone-analysis, clone-threshold, clone-min-lines,
// include-tests, verbose, include, exclude, logger-pattern). '#' starts a
// comment. Throws ScanError on unknown keys or bad values.
void apply_config_text(std::string_view text, ScanConfig& config);
void apply_config_file(const std::filesystem::path& path, ScanConfig& config);

std::set<SmellPattern> parse_pattern_list(std::string_view list);

// LOGDUP_THREADS when set to a positive integer, otherwise the hardware
// concurrency.
unsigned default_thread_count();

bool is_test_path(std::string_view relative_path);

struct SourceFile {
  std::filesystem::path absolute;
  std::string relative;  // generic form, used as the unit's file path
};

// Sorted, filtered list of .java files under the configured roots.
std::vector<SourceFile> discover_sources(const ScanConfig& config);

// A hash of the analysis-relevant settings; thread count, output format
// and root locations are not part of it.
std::string config_fingerprint(const ScanConfig& config);

struct FileDiagnostic {
  std::string file;
  int line = 0;
  std::string message;
};

struct ScanOutput {
  Corpus corpus;
  std::vector<FileDiagnostic> diagnostics;
  std::vector<LoggingStatement> statements;
  std::vector<DuplicateSet> sets;
  CorpusStats stats;
  std::set<std::string> stop_words;
  InheritanceGraph graph;
  std::vector<SmellInstance> findings;    // unsuppressed, sorted
  std::vector<SmellInstance> suppressed;  // sorted
  std::vector<LevelInconsistency> level_inconsistencies;
  std::optional<CloneScan> clones;
  std::optional<CloneCorrelationResult> clone_correlation;
  std::optional<StripResult> clone_strip;
};

ScanOutput run_pipeline(const ScanConfig& config);

// Same pipeline over in-memory sources, keyed by relative path.
ScanOutput run_pipeline(const ScanConfig& config,
                        std::vector<std::pair<std::string, std::string>> sources);

}  // namespace logdup
