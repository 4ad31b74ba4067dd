#pragma once

#include <cstdint>
#include <optional>
#include <set>
#include <span>
#include <string>
#include <vector>

#include "logdup/log_extraction.hpp"

namespace logdup {

struct DuplicateSet {
  std::uint32_t id = 0;  // position in the sorted set list
  std::string key;       // the shared static text
  std::vector<std::uint32_t> members;  // statement ids, ascending
  std::set<std::string> span_types;    // enclosing qualified type names
};

// A message carries text when something other than placeholders,
// whitespace and punctuation remains. Statements without text never group.
bool has_message_text(std::string_view static_text);

// Exact grouping by static text; singletons dropped; sets ordered by key.
std::vector<DuplicateSet> build_duplicate_sets(std::span<const LoggingStatement> statements);

struct CorpusStats {
  std::size_t nol = 0;   // logging statements
  std::size_t nodl = 0;  // statements that belong to a duplicate set
  std::size_t nods = 0;  // duplicate sets

  double nodl_percent() const {
    return nol == 0 ? 0.0 : 100.0 * static_cast<double>(nodl) / static_cast<double>(nol);
  }
  bool operator==(const CorpusStats&) const = default;
};

CorpusStats corpus_stats(std::span<const DuplicateSet> sets,
                         std::span<const LoggingStatement> statements);

// Set id per statement id (nullopt for statements outside every set).
std::vector<std::optional<std::uint32_t>> set_membership(
    std::span<const DuplicateSet> sets, std::size_t statement_count);

}  // namespace logdup
