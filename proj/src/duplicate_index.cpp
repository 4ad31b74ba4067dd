#include "logdup/duplicate_index.hpp"

#include <algorithm>
#include <cctype>
#include <map>

namespace logdup {

bool has_message_text(std::string_view text) {
  std::size_t pos = 0;
  while (pos < text.size()) {
    if (text.substr(pos, kPlaceholder.size()) == kPlaceholder) {
      pos += kPlaceholder.size();
      continue;
    }
    const unsigned char c = static_cast<unsigned char>(text[pos]);
    if (std::isalnum(c) || c >= 0x80) return true;
    ++pos;
  }
  return false;
}

std::vector<DuplicateSet> build_duplicate_sets(std::span<const LoggingStatement> statements) {
  std::map<std::string_view, std::vector<const LoggingStatement*>> by_text;
  for (const LoggingStatement& s : statements) {
    if (!has_message_text(s.static_text)) continue;
    by_text[s.static_text].push_back(&s);
  }
  std::vector<DuplicateSet> sets;
  for (auto& [text, members] : by_text) {
    if (members.size() < 2) continue;
    DuplicateSet set;
    set.id = static_cast<std::uint32_t>(sets.size());
    set.key = std::string(text);
    for (const LoggingStatement* s : members) {
      set.members.push_back(s->id);
      if (!s->enclosing_type.empty()) set.span_types.insert(s->enclosing_type);
    }
    std::sort(set.members.begin(), set.members.end());
    sets.push_back(std::move(set));
  }
  return sets;
}

CorpusStats corpus_stats(std::span<const DuplicateSet> sets,
                         std::span<const LoggingStatement> statements) {
  CorpusStats stats;
  stats.nol = statements.size();
  stats.nods = sets.size();
  for (const DuplicateSet& s : sets) stats.nodl += s.members.size();
  return stats;
}

std::vector<std::optional<std::uint32_t>> set_membership(std::span<const DuplicateSet> sets,
                                                         std::size_t statement_count) {
  std::vector<std::optional<std::uint32_t>> out(statement_count);
  for (const DuplicateSet& s : sets) {
    for (std::uint32_t m : s.members) {
      if (m < out.size()) out[m] = s.id;
    }
  }
  return out;
}

}  // namespace logdup
