#pragma once

#include <cstdint>
#include <istream>
#include <map>
#include <optional>
#include <set>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "logdup/duplicate_index.hpp"
#include "logdup/log_extraction.hpp"
#include "logdup/smell_detectors.hpp"

namespace logdup {

class EvaluationError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct SourceLocation {
  std::string file;
  int line = 0;

  auto operator<=>(const SourceLocation&) const = default;
};

// One line per duplicate set:
//   <patterns>\t<static text>\t<file:line>,<file:line>,...
// <patterns> is a comma list such as "ic,dp" or "-" for none. Tabs,
// newlines and backslashes inside the text are written as \t, \n and \\.
// Empty lines and lines starting with '#' are ignored.
struct TruthEntry {
  std::set<SmellPattern> patterns;
  std::string static_text;
  std::vector<SourceLocation> locations;
};

std::vector<TruthEntry> parse_ground_truth(std::istream& in);
std::string format_ground_truth(std::span<const TruthEntry> entries);

std::string escape_truth_text(std::string_view text);
std::string unescape_truth_text(std::string_view text);

struct GroundTruth {
  std::size_t candidates = 0;  // duplicate sets of the scan
  std::map<std::uint32_t, std::set<SmellPattern>> labels;

  std::size_t positives(SmellPattern pattern) const;
  bool is_positive(std::uint32_t set, SmellPattern pattern) const;
};

// Each entry must match exactly one set with the same text whose members
// cover every listed location within `line_tolerance` lines. Unmatched
// entries throw EvaluationError. Sets without an entry are negatives.
GroundTruth resolve_ground_truth(std::span<const TruthEntry> entries,
                                 std::span<const DuplicateSet> sets,
                                 std::span<const LoggingStatement> statements,
                                 int line_tolerance = 2);

// Entries describing a scan, labelled with the detected patterns.
std::vector<TruthEntry> truth_from_findings(std::span<const DuplicateSet> sets,
                                            std::span<const LoggingStatement> statements,
                                            std::span<const SmellInstance> findings);

struct Score {
  std::size_t detected = 0;
  std::size_t correct = 0;
  std::size_t truth = 0;
  std::optional<double> precision;  // percent; empty when detected == 0
  std::optional<double> recall;     // percent; empty when truth == 0
};

Score score_counts(std::size_t detected, std::size_t correct, std::size_t truth);

// Per duplicate set: a set is detected when some unsuppressed instance of
// `pattern` belongs to it.
Score score(std::span<const SmellInstance> detected, const GroundTruth& truth,
            SmellPattern pattern);

struct BaselineResult {
  std::size_t iterations = 0;
  double positive_rate = 0.0;
  std::optional<double> mean_precision;  // over iterations with predictions
  std::optional<double> mean_recall;
};

// Each iteration labels every candidate set positive with probability equal
// to the truth's positive rate.
BaselineResult random_baseline(const GroundTruth& truth, SmellPattern pattern,
                               std::size_t iterations = 30, std::uint64_t seed = 0);

}  // namespace logdup
