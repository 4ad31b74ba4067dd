#include "logdup/clone_analysis.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <unordered_map>

#include "parallel.hpp"

namespace logdup {

std::vector<std::string> normalize_tokens(std::span<const Token> tokens,
                                          std::span<const TokenSpan> excluded,
                                          std::size_t offset) {
  std::vector<std::string> lines;
  std::string line;
  int paren_depth = 0;
  auto flush = [&] {
    if (!line.empty()) lines.push_back(std::move(line));
    line.clear();
  };
  for (std::size_t i = 0; i < tokens.size(); ++i) {
    const std::size_t index = offset + i;
    if (std::any_of(excluded.begin(), excluded.end(),
                    [&](const TokenSpan& s) { return s.contains(index); })) {
      continue;
    }
    const Token& t = tokens[i];
    std::string_view text = t.text;
    if (t.is_literal()) {
      text = kLiteralToken;
    } else if (t.is_identifier()) {
      text = kIdentifierToken;
    }
    if (!line.empty()) line.push_back(' ');
    line.append(text);
    if (t.is("(")) {
      ++paren_depth;
    } else if (t.is(")")) {
      paren_depth = std::max(0, paren_depth - 1);
    } else if (t.is("{") || t.is("}")) {
      paren_depth = 0;
      flush();
    } else if (t.is(";") && paren_depth == 0) {
      flush();
    }
  }
  flush();
  return lines;
}

NormalizedBlock normalize_block(const Corpus& corpus, BlockId block,
                                std::span<const TokenSpan> excluded) {
  const SourceUnit& unit = corpus.unit(block.unit);
  const TokenSpan span = corpus.block(block).span;
  std::span<const Token> tokens(unit.tokens);
  const std::size_t last = std::min(span.last, tokens.size() - 1);
  return {block, normalize_tokens(tokens.subspan(span.first, last - span.first + 1), excluded,
                                  span.first)};
}

namespace {

std::size_t lcs_length(std::span<const std::uint32_t> a, std::span<const std::uint32_t> b) {
  if (a.size() < b.size()) std::swap(a, b);
  std::vector<std::size_t> row(b.size() + 1, 0);
  for (std::uint32_t x : a) {
    std::size_t diag = 0;
    for (std::size_t j = 1; j <= b.size(); ++j) {
      const std::size_t up = row[j];
      row[j] = x == b[j - 1] ? diag + 1 : std::max(row[j], row[j - 1]);
      diag = up;
    }
  }
  return row[b.size()];
}

double similarity_of(std::span<const std::uint32_t> a, std::span<const std::uint32_t> b) {
  const std::size_t longest = std::max(a.size(), b.size());
  if (longest == 0) return 100.0;
  return 100.0 * static_cast<double>(lcs_length(a, b)) / static_cast<double>(longest);
}

// Maps each distinct line to an id so LCS compares integers.
class LineInterner {
 public:
  std::vector<std::uint32_t> intern(std::span<const std::string> lines) {
    std::vector<std::uint32_t> ids;
    ids.reserve(lines.size());
    for (const std::string& l : lines) {
      auto [it, inserted] = ids_.try_emplace(l, static_cast<std::uint32_t>(ids_.size()));
      ids.push_back(it->second);
    }
    return ids;
  }

 private:
  std::unordered_map<std::string, std::uint32_t> ids_;
};

struct UnionFind {
  explicit UnionFind(std::size_t n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  std::size_t find(std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  void unite(std::size_t a, std::size_t b) {
    a = find(a);
    b = find(b);
    if (a != b) parent[std::max(a, b)] = std::min(a, b);
  }
  std::vector<std::size_t> parent;
};

NestingPredicate corpus_nesting(const Corpus& corpus) {
  return [&corpus](BlockId a, BlockId b) {
    return a.unit == b.unit && (corpus.is_ancestor(a, b) || corpus.is_ancestor(b, a));
  };
}

bool member_in_block(const Corpus& corpus, const LoggingStatement& s, BlockId block) {
  if (!s.enclosing_block || s.enclosing_block->unit != block.unit) return false;
  return corpus.block(block).span.contains(s.call.first);
}

struct Witness {
  std::size_t clone_class;
  double similarity;
};

// Two different members inside two different, non-nested blocks of one
// class. The most similar such pair wins; ties go to the lower class index.
std::optional<Witness> clone_witness(const Corpus& corpus,
                                     std::span<const LoggingStatement> statements,
                                     const DuplicateSet& set,
                                     std::span<const CloneClass> classes,
                                     const NestingPredicate& nested) {
  std::optional<Witness> best;
  for (std::size_t c = 0; c < classes.size(); ++c) {
    const CloneClass& cls = classes[c];
    std::vector<std::vector<std::uint32_t>> contained(cls.member_blocks.size());
    for (std::size_t b = 0; b < cls.member_blocks.size(); ++b) {
      for (std::uint32_t id : set.members) {
        if (member_in_block(corpus, statements[id], cls.member_blocks[b])) {
          contained[b].push_back(id);
        }
      }
    }
    for (std::size_t i = 0; i < contained.size(); ++i) {
      if (contained[i].empty()) continue;
      for (std::size_t j = i + 1; j < contained.size(); ++j) {
        if (contained[j].empty()) continue;
        const BlockId a = cls.member_blocks[i];
        const BlockId b = cls.member_blocks[j];
        if (nested(a, b)) continue;
        const bool distinct_members =
            contained[i].size() > 1 || contained[j].size() > 1 || contained[i] != contained[j];
        if (!distinct_members) continue;
        const double sim = cls.similarity(a, b);
        if (!best || sim > best->similarity) best = Witness{c, sim};
      }
    }
  }
  return best;
}

const NormalizedBlock* find_block(std::span<const NormalizedBlock> blocks, BlockId id) {
  auto it = std::lower_bound(
      blocks.begin(), blocks.end(), id,
      [](const NormalizedBlock& b, BlockId key) { return b.block_id < key; });
  return it != blocks.end() && it->block_id == id ? &*it : nullptr;
}

}  // namespace

double block_similarity(std::span<const std::string> a, std::span<const std::string> b) {
  LineInterner interner;
  const auto ia = interner.intern(a);
  const auto ib = interner.intern(b);
  return similarity_of(ia, ib);
}

double block_similarity(const NormalizedBlock& a, const NormalizedBlock& b) {
  return block_similarity(a.lines, b.lines);
}

double CloneClass::similarity(BlockId a, BlockId b) const {
  if (b < a) std::swap(a, b);
  auto it = pairwise_similarity.find({a, b});
  return it == pairwise_similarity.end() ? 0.0 : it->second;
}

std::vector<CloneClass> detect_clones(std::span<const NormalizedBlock> blocks,
                                      const CloneOptions& options,
                                      const NestingPredicate& nested) {
  std::vector<std::size_t> eligible;
  for (std::size_t i = 0; i < blocks.size(); ++i) {
    if (static_cast<int>(blocks[i].lines.size()) >= options.min_lines) eligible.push_back(i);
  }
  std::sort(eligible.begin(), eligible.end(), [&](std::size_t a, std::size_t b) {
    return blocks[a].block_id < blocks[b].block_id;
  });

  LineInterner interner;
  std::vector<std::vector<std::uint32_t>> ids;
  ids.reserve(eligible.size());
  for (std::size_t i : eligible) ids.push_back(interner.intern(blocks[i].lines));

  auto compare = [&](std::size_t i, std::size_t j) -> std::optional<double> {
    if (nested && nested(blocks[eligible[i]].block_id, blocks[eligible[j]].block_id)) {
      return std::nullopt;
    }
    return similarity_of(ids[i], ids[j]);
  };

  // Row i holds the matching pairs (i, j > i).
  std::vector<std::vector<std::pair<std::size_t, double>>> edges(eligible.size());
  detail::parallel_for(eligible.size(), options.threads, [&](std::size_t i) {
    for (std::size_t j = i + 1; j < eligible.size(); ++j) {
      const std::size_t shorter = std::min(ids[i].size(), ids[j].size());
      const std::size_t longer = std::max(ids[i].size(), ids[j].size());
      if (100.0 * static_cast<double>(shorter) < options.threshold * static_cast<double>(longer)) {
        continue;
      }
      const auto sim = compare(i, j);
      if (sim && *sim >= options.threshold) edges[i].emplace_back(j, *sim);
    }
  });

  UnionFind uf(eligible.size());
  for (std::size_t i = 0; i < edges.size(); ++i) {
    for (const auto& [j, sim] : edges[i]) uf.unite(i, j);
  }
  std::map<std::size_t, std::vector<std::size_t>> groups;
  for (std::size_t i = 0; i < eligible.size(); ++i) groups[uf.find(i)].push_back(i);

  std::vector<CloneClass> classes;
  for (const auto& [root, members] : groups) {
    if (members.size() < 2) continue;
    CloneClass cls;
    for (std::size_t m : members) cls.member_blocks.push_back(blocks[eligible[m]].block_id);
    for (std::size_t x = 0; x < members.size(); ++x) {
      for (std::size_t y = x + 1; y < members.size(); ++y) {
        const auto sim = compare(members[x], members[y]);
        if (!sim) continue;
        cls.pairwise_similarity[{cls.member_blocks[x], cls.member_blocks[y]}] = *sim;
      }
    }
    classes.push_back(std::move(cls));
  }
  return classes;
}

std::string_view to_string(CloneRelation relation) {
  switch (relation) {
    case CloneRelation::CloneDetected: return "clone-detected";
    case CloneRelation::MicroClone: return "micro-clone";
    case CloneRelation::NonClone: return "non-clone";
  }
  return "?";
}

CloneScan scan_clones(const Corpus& corpus, const CloneOptions& options) {
  const std::vector<BlockId> ids = enumerate_blocks(corpus, 1);
  CloneScan scan;
  scan.blocks.resize(ids.size());
  detail::parallel_for(ids.size(), options.threads,
                       [&](std::size_t i) { scan.blocks[i] = normalize_block(corpus, ids[i]); });
  scan.classes = detect_clones(scan.blocks, options, corpus_nesting(corpus));
  return scan;
}

CloneCorrelationResult correlate(const Corpus& corpus,
                                 std::span<const LoggingStatement> statements,
                                 std::span<const DuplicateSet> sets,
                                 const CloneScan& clones, const CloneOptions& options) {
  const NestingPredicate nested = corpus_nesting(corpus);
  CloneCorrelationResult result;
  std::set<std::size_t> contributing;
  for (const DuplicateSet& set : sets) {
    CloneCorrelation c;
    c.dup_set_id = set.id;
    if (auto w = clone_witness(corpus, statements, set, clones.classes, nested)) {
      c.classification = CloneRelation::CloneDetected;
      c.similarity = w->similarity;
      c.clone_class = w->clone_class;
      contributing.insert(w->clone_class);
    } else {
      std::optional<double> best;
      for (std::size_t i = 0; i < set.members.size(); ++i) {
        const auto& a = statements[set.members[i]].enclosing_block;
        if (!a) continue;
        for (std::size_t j = i + 1; j < set.members.size(); ++j) {
          const auto& b = statements[set.members[j]].enclosing_block;
          if (!b || *a == *b) continue;
          const NormalizedBlock* na = find_block(clones.blocks, *a);
          const NormalizedBlock* nb = find_block(clones.blocks, *b);
          if (!na || !nb) continue;
          if (static_cast<int>(na->lines.size()) >= options.min_lines ||
              static_cast<int>(nb->lines.size()) >= options.min_lines) {
            continue;
          }
          const double sim = block_similarity(*na, *nb);
          if (sim >= options.threshold && (!best || sim > *best)) best = sim;
        }
      }
      if (best) {
        c.classification = CloneRelation::MicroClone;
        c.similarity = best;
      }
    }
    if (c.classification == CloneRelation::CloneDetected) ++result.summary.clone_sets;
    if (c.classification == CloneRelation::MicroClone) ++result.summary.micro_clone_sets;
    result.correlations.push_back(c);
  }
  result.summary.dup_sets = sets.size();
  if (!sets.empty()) {
    result.summary.clone_set_percent = 100.0 * static_cast<double>(result.summary.clone_sets) /
                                       static_cast<double>(sets.size());
  }
  double total = 0.0;
  std::size_t pairs = 0;
  for (std::size_t c : contributing) {
    for (const auto& [pair, sim] : clones.classes[c].pairwise_similarity) {
      total += sim;
      ++pairs;
    }
  }
  if (pairs > 0) result.summary.average_similarity = total / static_cast<double>(pairs);
  return result;
}

StripResult strip_logs_and_recompute(const Corpus& corpus,
                                     std::span<const LoggingStatement> statements,
                                     std::span<const DuplicateSet> sets,
                                     const CloneScan& clones,
                                     const CloneCorrelationResult& correlation,
                                     const CloneOptions& options) {
  StripResult result;
  std::set<BlockId> involved;
  for (const CloneCorrelation& c : correlation.correlations) {
    if (c.classification != CloneRelation::CloneDetected) continue;
    ++result.clone_sets;
    for (BlockId b : clones.classes[*c.clone_class].member_blocks) involved.insert(b);
  }
  if (result.clone_sets == 0) return result;

  std::map<std::uint32_t, std::vector<TokenSpan>> removed;
  for (const DuplicateSet& set : sets) {
    for (std::uint32_t id : set.members) {
      const LoggingStatement& s = statements[id];
      if (s.enclosing_block) removed[s.enclosing_block->unit].push_back(s.statement);
    }
  }
  std::vector<NormalizedBlock> stripped;
  for (BlockId b : involved) {
    auto it = removed.find(b.unit);
    stripped.push_back(it == removed.end() ? normalize_block(corpus, b)
                                           : normalize_block(corpus, b, it->second));
  }
  const NestingPredicate nested = corpus_nesting(corpus);
  const std::vector<CloneClass> classes = detect_clones(stripped, options, nested);

  for (const CloneCorrelation& c : correlation.correlations) {
    if (c.classification != CloneRelation::CloneDetected) continue;
    const DuplicateSet& set = sets[c.dup_set_id];
    if (clone_witness(corpus, statements, set, classes, nested)) {
      ++result.clone_sets_without_logs;
    } else {
      result.reduced_sets.push_back(set.id);
    }
  }
  result.reduced = result.reduced_sets.size();
  result.percent_reduced =
      100.0 * static_cast<double>(result.reduced) / static_cast<double>(result.clone_sets);
  return result;
}

}  // namespace logdup
