#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "logdup/duplicate_index.hpp"
#include "logdup/java_lexer.hpp"
#include "logdup/log_extraction.hpp"
#include "logdup/source_model.hpp"

namespace logdup {

inline constexpr std::string_view kIdentifierToken = "ID";
inline constexpr std::string_view kLiteralToken = "LIT";

struct NormalizedBlock {
  BlockId block_id;
  std::vector<std::string> lines;
};

// Identifiers become kIdentifierToken, literals kLiteralToken; keywords and
// punctuation are kept. A line ends after `{`, `}` and every `;` outside
// parentheses. Tokens inside any `excluded` span are dropped.
std::vector<std::string> normalize_tokens(std::span<const Token> tokens,
                                          std::span<const TokenSpan> excluded = {},
                                          std::size_t offset = 0);

NormalizedBlock normalize_block(const Corpus& corpus, BlockId block,
                                std::span<const TokenSpan> excluded = {});

// 100 * |LCS| / max(|a|, |b|); 100 for two empty blocks.
double block_similarity(std::span<const std::string> a, std::span<const std::string> b);
double block_similarity(const NormalizedBlock& a, const NormalizedBlock& b);

struct CloneOptions {
  double threshold = 70.0;
  int min_lines = 10;
  unsigned threads = 1;
};

struct CloneClass {
  std::vector<BlockId> member_blocks;  // ascending
  // Similarity of every member pair (first < second).
  std::map<std::pair<BlockId, BlockId>, double> pairwise_similarity;

  double similarity(BlockId a, BlockId b) const;
};

// Pairs with similarity >= threshold among blocks of >= min_lines normalized
// lines, grouped by transitive closure. `nested(a, b)` marks pairs where one
// block contains the other; those are never compared.
using NestingPredicate = std::function<bool(BlockId, BlockId)>;

std::vector<CloneClass> detect_clones(std::span<const NormalizedBlock> blocks,
                                      const CloneOptions& options,
                                      const NestingPredicate& nested = {});

enum class CloneRelation : std::uint8_t { CloneDetected, MicroClone, NonClone };

std::string_view to_string(CloneRelation relation);

struct CloneCorrelation {
  std::uint32_t dup_set_id = 0;
  CloneRelation classification = CloneRelation::NonClone;
  std::optional<double> similarity;
  std::optional<std::size_t> clone_class;  // index into the class list
};

struct CloneSummary {
  std::size_t dup_sets = 0;
  std::size_t clone_sets = 0;
  std::size_t micro_clone_sets = 0;
  double clone_set_percent = 0.0;
  double average_similarity = 0.0;  // over pairs of contributing classes
};

struct CloneCorrelationResult {
  std::vector<CloneCorrelation> correlations;  // one per set, same order
  CloneSummary summary;
};

struct CloneScan {
  std::vector<NormalizedBlock> blocks;  // every block, corpus order
  std::vector<CloneClass> classes;
};

// Normalizes every block of the corpus and detects clones among them.
CloneScan scan_clones(const Corpus& corpus, const CloneOptions& options);

CloneCorrelationResult correlate(const Corpus& corpus,
                                 std::span<const LoggingStatement> statements,
                                 std::span<const DuplicateSet> sets,
                                 const CloneScan& clones, const CloneOptions& options);

struct StripResult {
  std::size_t clone_sets = 0;
  std::size_t clone_sets_without_logs = 0;
  std::size_t reduced = 0;
  double percent_reduced = 0.0;
  std::vector<std::uint32_t> reduced_sets;
};

// Removes the duplicate logging statements from the blocks of contributing
// clone classes, detects clones again among those blocks and counts the
// formerly clone-detected sets that are no longer clone-detected.
StripResult strip_logs_and_recompute(const Corpus& corpus,
                                     std::span<const LoggingStatement> statements,
                                     std::span<const DuplicateSet> sets,
                                     const CloneScan& clones,
                                     const CloneCorrelationResult& correlation,
                                     const CloneOptions& options);

}  // namespace logdup
