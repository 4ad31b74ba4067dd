#include "logdup/smell_detectors.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <numeric>

#include "logdup/text_analysis.hpp"

namespace logdup {

std::string_view to_string(SmellPattern pattern) {
  switch (pattern) {
    case SmellPattern::IC: return "IC";
    case SmellPattern::IE: return "IE";
    case SmellPattern::LM: return "LM";
    case SmellPattern::DP: return "DP";
  }
  return "?";
}

std::optional<SmellPattern> parse_smell_pattern(std::string_view name) {
  std::string upper(name);
  for (char& c : upper) c = static_cast<char>(std::toupper(static_cast<unsigned char>(c)));
  for (SmellPattern p : {SmellPattern::IC, SmellPattern::IE, SmellPattern::LM, SmellPattern::DP}) {
    if (to_string(p) == upper) return p;
  }
  return std::nullopt;
}

std::string_view to_string(JustifiableCase c) {
  switch (c) {
    case JustifiableCase::IE1: return "IE.1";
    case JustifiableCase::IE2: return "IE.2";
    case JustifiableCase::IE3: return "IE.3";
  }
  return "?";
}

bool is_generic_exception(std::string_view type) {
  return type == "Exception" || type == "Throwable" || type == "RuntimeException";
}

namespace {

std::vector<std::string> sorted_types(const LoggingStatement& s) {
  std::vector<std::string> types = s.in_catch_of;
  std::sort(types.begin(), types.end());
  return types;
}

bool all_generic(const std::vector<std::string>& types) {
  return !types.empty() && std::all_of(types.begin(), types.end(), is_generic_exception);
}

bool none_generic(const std::vector<std::string>& types) {
  return std::none_of(types.begin(), types.end(), is_generic_exception);
}

bool verbose_level(LogLevel level) {
  return level == LogLevel::Debug || level == LogLevel::Trace;
}

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

}  // namespace

std::vector<SmellInstance> detect_ic(const DetectionInput& in) {
  std::vector<SmellInstance> out;
  for (const DuplicateSet& set : in.sets) {
    // try block -> catch block -> members
    std::map<BlockId, std::map<BlockId, std::vector<std::uint32_t>>> by_try;
    for (std::uint32_t id : set.members) {
      const LoggingStatement& s = in.statements[id];
      if (!s.catch_block) continue;
      const CodeBlock& cb = in.corpus.block(*s.catch_block);
      if (cb.parent == kNoBlock) continue;
      by_try[BlockId{s.catch_block->unit, cb.parent}][*s.catch_block].push_back(id);
    }
    for (const auto& [try_block, catches] : by_try) {
      if (catches.size() < 2) continue;
      bool silent = true;
      bool disjoint = true;
      std::set<std::string> seen_types;
      for (const auto& [catch_block, members] : catches) {
        for (const std::string& t : in.corpus.block(catch_block).caught_exception_types) {
          if (!seen_types.insert(t).second) disjoint = false;
        }
        for (std::uint32_t id : members) {
          if (in.statements[id].exception_usage != ExceptionUsage::None) silent = false;
        }
      }
      if (!silent || !disjoint) continue;
      SmellInstance inst;
      inst.pattern = SmellPattern::IC;
      inst.dup_set = set.id;
      IcEvidence ev;
      ev.try_block = try_block;
      for (const auto& [catch_block, members] : catches) {
        inst.members.insert(inst.members.end(), members.begin(), members.end());
      }
      std::sort(inst.members.begin(), inst.members.end());
      for (std::uint32_t id : inst.members) ev.caught_types.push_back(in.statements[id].in_catch_of);
      inst.evidence = std::move(ev);
      out.push_back(std::move(inst));
    }
  }
  return out;
}

std::vector<SmellInstance> detect_ie(const DetectionInput& in) {
  std::vector<SmellInstance> out;
  for (const DuplicateSet& set : in.sets) {
    std::vector<std::uint32_t> catch_members;
    for (std::uint32_t id : set.members) {
      const LoggingStatement& s = in.statements[id];
      if (s.catch_block && s.exception_usage != ExceptionUsage::NotApplicable) {
        catch_members.push_back(id);
      }
    }
    std::set<std::uint32_t> problematic;
    std::map<JustifiableCase, std::set<std::uint32_t>> justified;
    for (std::size_t i = 0; i < catch_members.size(); ++i) {
      for (std::size_t j = i + 1; j < catch_members.size(); ++j) {
        const LoggingStatement& a = in.statements[catch_members[i]];
        const LoggingStatement& b = in.statements[catch_members[j]];
        if (a.exception_usage == b.exception_usage) continue;
        const LoggingStatement& richer = a.exception_usage > b.exception_usage ? a : b;
        const LoggingStatement& poorer = a.exception_usage > b.exception_usage ? b : a;
        const auto richer_types = sorted_types(richer);
        const auto poorer_types = sorted_types(poorer);
        std::optional<JustifiableCase> verdict;
        if (richer_types != poorer_types) {
          // Only the generic-with-more-detail vs specific split is compared
          // across different exception types.
          if (!(all_generic(richer_types) && none_generic(poorer_types))) continue;
          verdict = JustifiableCase::IE1;
        } else if (a.catch_block == b.catch_block && a.level != b.level &&
                   verbose_level(richer.level)) {
          verdict = JustifiableCase::IE2;
        } else if (poorer.catch_forwards_exception) {
          verdict = JustifiableCase::IE3;
        }
        if (verdict) {
          justified[*verdict].insert({a.id, b.id});
        } else {
          problematic.insert({a.id, b.id});
        }
      }
    }
    auto make = [&](const std::set<std::uint32_t>& members,
                    std::optional<JustifiableCase> tag) {
      SmellInstance inst;
      inst.pattern = SmellPattern::IE;
      inst.dup_set = set.id;
      inst.members.assign(members.begin(), members.end());
      inst.suppressed_by = tag;
      IeEvidence ev;
      for (std::uint32_t id : inst.members) {
        ev.usages.push_back(in.statements[id].exception_usage);
        ev.caught_types.push_back(in.statements[id].in_catch_of);
      }
      inst.evidence = std::move(ev);
      out.push_back(std::move(inst));
    };
    if (!problematic.empty()) make(problematic, std::nullopt);
    for (const auto& [tag, members] : justified) make(members, tag);
  }
  return out;
}

std::set<std::string> class_method_words(const LoggingStatement& s) {
  std::set<std::string> words;
  auto add = [&](std::string_view identifier) {
    for (const std::string& w : split_words(identifier)) words.insert(porter_stem(w));
  };
  add(s.enclosing_type_simple);
  if (!s.method_name.empty() && s.method_name.front() != '<') add(s.method_name);
  return words;
}

std::set<std::string> corpus_stop_words(std::span<const LoggingStatement> statements,
                                        std::size_t cap) {
  std::vector<std::vector<std::string>> messages;
  messages.reserve(statements.size());
  for (const LoggingStatement& s : statements) messages.push_back(message_words(s.static_text));
  return compute_stop_words(messages, cap);
}

std::vector<SmellInstance> detect_lm(const DetectionInput& in,
                                     const std::set<std::string>& stop_words) {
  std::vector<SmellInstance> out;
  for (const DuplicateSet& set : in.sets) {
    std::set<std::string> log_words;
    for (const std::string& w : message_words(set.key)) {
      if (!stop_words.count(w)) log_words.insert(w);
    }
    LmEvidence ev;
    std::vector<std::uint32_t> members;
    for (std::uint32_t id : set.members) {
      const std::set<std::string> name = class_method_words(in.statements[id]);
      if (name.empty()) continue;
      std::vector<std::string> common;
      std::set_intersection(name.begin(), name.end(), log_words.begin(), log_words.end(),
                            std::back_inserter(common));
      members.push_back(id);
      ev.common_counts.push_back(common.size());
      ev.common_words.push_back(std::move(common));
      ev.name_words.emplace_back(name.begin(), name.end());
    }
    if (members.size() < 2) continue;
    const bool consistent =
        std::all_of(ev.common_counts.begin(), ev.common_counts.end(),
                    [&](std::size_t c) { return c == ev.common_counts.front(); });
    if (consistent) continue;
    SmellInstance inst;
    inst.pattern = SmellPattern::LM;
    inst.dup_set = set.id;
    inst.members = std::move(members);
    inst.evidence = std::move(ev);
    out.push_back(std::move(inst));
  }
  return out;
}

std::vector<SmellInstance> detect_dp(const DetectionInput& in, const InheritanceGraph& graph) {
  std::vector<SmellInstance> out;
  for (const DuplicateSet& set : in.sets) {
    const auto& m = set.members;
    UnionFind uf(m.size());
    std::vector<std::set<std::string>> via(m.size());
    bool any = false;
    for (std::size_t i = 0; i < m.size(); ++i) {
      const LoggingStatement& a = in.statements[m[i]];
      if (a.enclosing_method.empty() || a.enclosing_type.empty()) continue;
      for (std::size_t j = i + 1; j < m.size(); ++j) {
        const LoggingStatement& b = in.statements[m[j]];
        if (b.enclosing_method.empty() || b.enclosing_type.empty()) continue;
        const OverrideLink* link = graph.link({a.enclosing_type, a.enclosing_method},
                                              {b.enclosing_type, b.enclosing_method});
        if (!link) continue;
        uf.unite(i, j);
        via[i].insert(link->via);
        via[j].insert(link->via);
        any = true;
      }
    }
    if (!any) continue;
    std::map<std::size_t, std::vector<std::size_t>> groups;
    for (std::size_t i = 0; i < m.size(); ++i) groups[uf.find(i)].push_back(i);
    for (const auto& [root, idx] : groups) {
      if (idx.size() < 2) continue;
      SmellInstance inst;
      inst.pattern = SmellPattern::DP;
      inst.dup_set = set.id;
      DpEvidence ev;
      std::set<std::string> supertypes;
      for (std::size_t i : idx) {
        const LoggingStatement& s = in.statements[m[i]];
        inst.members.push_back(m[i]);
        ev.methods.push_back({s.enclosing_type, s.enclosing_method});
        supertypes.insert(via[i].begin(), via[i].end());
      }
      ev.supertypes.assign(supertypes.begin(), supertypes.end());
      inst.evidence = std::move(ev);
      out.push_back(std::move(inst));
    }
  }
  return out;
}

std::vector<LevelInconsistency> detect_il(const DetectionInput& in) {
  std::vector<LevelInconsistency> out;
  for (const DuplicateSet& set : in.sets) {
    std::set<LogLevel> levels;
    for (std::uint32_t id : set.members) levels.insert(in.statements[id].level);
    if (levels.size() < 2) continue;
    out.push_back({set.id, {levels.begin(), levels.end()}});
  }
  return out;
}

void sort_findings(std::vector<SmellInstance>& findings,
                   std::span<const LoggingStatement> statements) {
  std::stable_sort(findings.begin(), findings.end(),
                   [&](const SmellInstance& a, const SmellInstance& b) {
                     if (a.pattern != b.pattern) return a.pattern < b.pattern;
                     // ids follow (file, line) order
                     if (a.members != b.members) return a.members < b.members;
                     return a.suppressed_by < b.suppressed_by;
                   });
  (void)statements;
}

}  // namespace logdup
