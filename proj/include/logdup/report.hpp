#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "logdup/scan.hpp"

namespace logdup {

struct ReportMember {
  std::string file;
  int line = 0;
  std::string level;
  std::string type;    // qualified enclosing type
  std::string method;  // signature
  std::string exception_usage;
  std::vector<std::string> caught_types;
  std::vector<std::string> common_words;  // LM only

  bool operator==(const ReportMember&) const = default;
};

struct ReportFinding {
  std::string pattern;
  std::uint32_t dup_set = 0;
  std::string message;
  std::optional<std::string> justification;  // IE.1, IE.2, IE.3
  std::string detail;
  std::vector<ReportMember> members;

  bool operator==(const ReportFinding&) const = default;
};

struct ReportLevelInconsistency {
  std::uint32_t dup_set = 0;
  std::string message;
  std::vector<std::string> levels;
  std::vector<ReportMember> members;

  bool operator==(const ReportLevelInconsistency&) const = default;
};

struct ReportDuplicateSet {
  std::uint32_t id = 0;
  std::string message;
  std::vector<ReportMember> members;

  bool operator==(const ReportDuplicateSet&) const = default;
};

struct ReportCloneSet {
  std::uint32_t dup_set = 0;
  std::string classification;
  std::optional<double> similarity;

  bool operator==(const ReportCloneSet&) const = default;
};

struct ReportCloneAnalysis {
  double threshold = 70.0;
  int min_lines = 10;
  std::size_t clone_classes = 0;
  std::size_t dup_sets = 0;
  std::size_t clone_sets = 0;
  std::size_t micro_clone_sets = 0;
  double clone_set_percent = 0.0;
  double average_similarity = 0.0;
  std::size_t clone_sets_without_logs = 0;
  std::size_t reduced = 0;
  double percent_reduced = 0.0;
  std::vector<ReportCloneSet> sets;

  bool operator==(const ReportCloneAnalysis&) const = default;
};

struct ReportDiagnostic {
  std::string file;
  int line = 0;
  std::string message;

  bool operator==(const ReportDiagnostic&) const = default;
};

struct Report {
  std::string tool = std::string(kToolName);
  std::string version = std::string(kToolVersion);
  std::string config_hash;
  std::vector<std::string> patterns;
  std::size_t stop_word_cap = 50;
  bool include_tests = false;

  std::size_t files = 0;
  std::size_t nol = 0;
  std::size_t nodl = 0;
  std::size_t nods = 0;
  double nodl_percent = 0.0;

  // Unsuppressed findings of every pattern, sorted by (pattern, file, line).
  std::vector<ReportFinding> findings;
  std::vector<ReportFinding> suppressed;
  std::vector<ReportLevelInconsistency> level_inconsistencies;
  std::vector<ReportDuplicateSet> duplicate_sets;
  std::optional<ReportCloneAnalysis> clone_analysis;
  std::vector<ReportDiagnostic> diagnostics;

  std::size_t count(std::string_view pattern) const;
  bool operator==(const Report&) const = default;
};

Report build_report(const ScanOutput& scan, const ScanConfig& config);

std::string emit_json(const Report& report);
std::string emit_text(const Report& report, bool verbose);
std::string emit(const Report& report, OutputFormat format, bool verbose = false);

// Inverse of emit_json. Throws std::runtime_error on malformed input.
Report parse_report_json(std::string_view json);

// 0 when no unsuppressed findings, 1 otherwise.
int exit_code_for(const Report& report);

}  // namespace logdup
