#pragma once

#include <cstdint>
#include <optional>
#include <set>
#include <span>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "logdup/duplicate_index.hpp"
#include "logdup/inheritance.hpp"
#include "logdup/log_extraction.hpp"
#include "logdup/source_model.hpp"

namespace logdup {

enum class SmellPattern : std::uint8_t { IC, IE, LM, DP };

std::string_view to_string(SmellPattern pattern);
std::optional<SmellPattern> parse_smell_pattern(std::string_view name);  // "ic", "IC", ...

enum class JustifiableCase : std::uint8_t { IE1, IE2, IE3 };

std::string_view to_string(JustifiableCase c);

struct IcEvidence {
  BlockId try_block;
  // Caught types of each member's catch block, parallel to members.
  std::vector<std::vector<std::string>> caught_types;
};

struct IeEvidence {
  std::vector<ExceptionUsage> usages;  // parallel to members
  std::vector<std::vector<std::string>> caught_types;
};

struct LmEvidence {
  std::vector<std::size_t> common_counts;              // parallel to members
  std::vector<std::vector<std::string>> common_words;  // sorted
  std::vector<std::vector<std::string>> name_words;
};

struct DpEvidence {
  std::vector<std::string> supertypes;  // linking parents / shared supertypes
  std::vector<MethodKey> methods;       // parallel to members
};

using SmellEvidence = std::variant<IcEvidence, IeEvidence, LmEvidence, DpEvidence>;

struct SmellInstance {
  SmellPattern pattern = SmellPattern::IC;
  std::uint32_t dup_set = 0;
  std::vector<std::uint32_t> members;  // statement ids, ascending
  SmellEvidence evidence;
  std::optional<JustifiableCase> suppressed_by;
};

// Same message logged at different levels. Informational only.
struct LevelInconsistency {
  std::uint32_t dup_set = 0;
  std::vector<LogLevel> levels;  // distinct, ascending
};

struct DetectionInput {
  const Corpus& corpus;
  std::span<const LoggingStatement> statements;
  std::span<const DuplicateSet> sets;
};

std::vector<SmellInstance> detect_ic(const DetectionInput& in);
// Returns problematic and suppressed instances; suppressed ones carry the
// justifiable case.
std::vector<SmellInstance> detect_ie(const DetectionInput& in);
std::vector<SmellInstance> detect_lm(const DetectionInput& in,
                                     const std::set<std::string>& stop_words);
std::vector<SmellInstance> detect_dp(const DetectionInput& in, const InheritanceGraph& graph);
std::vector<LevelInconsistency> detect_il(const DetectionInput& in);

// Stemmed words of a member's simple class name and method name.
std::set<std::string> class_method_words(const LoggingStatement& s);

// Stop words over every statement's message in the scan.
std::set<std::string> corpus_stop_words(std::span<const LoggingStatement> statements,
                                        std::size_t cap = 50);

// Exception types treated as generic by the IE.1 filter.
bool is_generic_exception(std::string_view type);

// Sort order of reported findings: pattern, then first member's location.
void sort_findings(std::vector<SmellInstance>& findings,
                   std::span<const LoggingStatement> statements);

}  // namespace logdup
