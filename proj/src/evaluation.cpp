#include "logdup/evaluation.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cstdlib>
#include <random>
#include <sstream>

namespace logdup {

namespace {

std::vector<std::string_view> split(std::string_view text, char sep) {
  std::vector<std::string_view> parts;
  std::size_t start = 0;
  while (true) {
    const std::size_t pos = text.find(sep, start);
    parts.push_back(text.substr(start, pos == std::string_view::npos ? pos : pos - start));
    if (pos == std::string_view::npos) break;
    start = pos + 1;
  }
  return parts;
}

SourceLocation parse_location(std::string_view text, int line_no) {
  const std::size_t colon = text.rfind(':');
  int line = 0;
  if (colon == std::string_view::npos || colon == 0) {
    throw EvaluationError("truth line " + std::to_string(line_no) + ": bad location '" +
                          std::string(text) + "'");
  }
  const auto digits = text.substr(colon + 1);
  const auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), line);
  if (ec != std::errc() || ptr != digits.data() + digits.size() || line <= 0) {
    throw EvaluationError("truth line " + std::to_string(line_no) + ": bad line number in '" +
                          std::string(text) + "'");
  }
  return {std::string(text.substr(0, colon)), line};
}

std::optional<double> percent(std::size_t num, std::size_t den) {
  if (den == 0) return std::nullopt;
  return 100.0 * static_cast<double>(num) / static_cast<double>(den);
}

}  // namespace

std::string escape_truth_text(std::string_view text) {
  std::string out;
  for (char c : text) {
    switch (c) {
      case '\\': out += "\\\\"; break;
      case '\t': out += "\\t"; break;
      case '\n': out += "\\n"; break;
      case '\r': out += "\\r"; break;
      default: out += c;
    }
  }
  return out;
}

std::string unescape_truth_text(std::string_view text) {
  std::string out;
  for (std::size_t i = 0; i < text.size(); ++i) {
    if (text[i] != '\\' || i + 1 == text.size()) {
      out += text[i];
      continue;
    }
    switch (text[++i]) {
      case 't': out += '\t'; break;
      case 'n': out += '\n'; break;
      case 'r': out += '\r'; break;
      case '\\': out += '\\'; break;
      default:
        out += '\\';
        out += text[i];
    }
  }
  return out;
}

std::vector<TruthEntry> parse_ground_truth(std::istream& in) {
  std::vector<TruthEntry> entries;
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty() || line.front() == '#') continue;
    const auto fields = split(line, '\t');
    if (fields.size() != 3) {
      throw EvaluationError("truth line " + std::to_string(line_no) +
                            ": expected 3 tab-separated fields");
    }
    TruthEntry entry;
    if (fields[0] != "-") {
      for (std::string_view name : split(fields[0], ',')) {
        const auto pattern = parse_smell_pattern(name);
        if (!pattern) {
          throw EvaluationError("truth line " + std::to_string(line_no) + ": unknown pattern '" +
                                std::string(name) + "'");
        }
        entry.patterns.insert(*pattern);
      }
    }
    entry.static_text = unescape_truth_text(fields[1]);
    for (std::string_view loc : split(fields[2], ',')) {
      entry.locations.push_back(parse_location(loc, line_no));
    }
    std::sort(entry.locations.begin(), entry.locations.end());
    entries.push_back(std::move(entry));
  }
  return entries;
}

std::string format_ground_truth(std::span<const TruthEntry> entries) {
  std::ostringstream out;
  for (const TruthEntry& e : entries) {
    if (e.patterns.empty()) {
      out << '-';
    } else {
      bool first = true;
      for (SmellPattern p : e.patterns) {
        if (!first) out << ',';
        first = false;
        std::string name(to_string(p));
        std::transform(name.begin(), name.end(), name.begin(),
                       [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
        out << name;
      }
    }
    out << '\t' << escape_truth_text(e.static_text) << '\t';
    for (std::size_t i = 0; i < e.locations.size(); ++i) {
      if (i > 0) out << ',';
      out << e.locations[i].file << ':' << e.locations[i].line;
    }
    out << '\n';
  }
  return out.str();
}

std::size_t GroundTruth::positives(SmellPattern pattern) const {
  return static_cast<std::size_t>(std::count_if(
      labels.begin(), labels.end(), [&](const auto& kv) { return kv.second.count(pattern) > 0; }));
}

bool GroundTruth::is_positive(std::uint32_t set, SmellPattern pattern) const {
  auto it = labels.find(set);
  return it != labels.end() && it->second.count(pattern) > 0;
}

GroundTruth resolve_ground_truth(std::span<const TruthEntry> entries,
                                 std::span<const DuplicateSet> sets,
                                 std::span<const LoggingStatement> statements,
                                 int line_tolerance) {
  GroundTruth truth;
  truth.candidates = sets.size();
  std::multimap<std::string_view, const DuplicateSet*> by_text;
  for (const DuplicateSet& s : sets) by_text.emplace(s.key, &s);

  for (const TruthEntry& e : entries) {
    std::vector<std::uint32_t> matches;
    auto [lo, hi] = by_text.equal_range(e.static_text);
    for (auto it = lo; it != hi; ++it) {
      const DuplicateSet& set = *it->second;
      const bool covered = std::all_of(
          e.locations.begin(), e.locations.end(), [&](const SourceLocation& loc) {
            return std::any_of(set.members.begin(), set.members.end(), [&](std::uint32_t id) {
              const LoggingStatement& s = statements[id];
              return s.file_path == loc.file && std::abs(s.line - loc.line) <= line_tolerance;
            });
          });
      if (covered) matches.push_back(set.id);
    }
    if (matches.size() != 1) {
      const std::string where =
          e.locations.empty() ? std::string("?")
                              : e.locations.front().file + ":" +
                                    std::to_string(e.locations.front().line);
      throw EvaluationError("truth entry \"" + escape_truth_text(e.static_text) + "\" at " +
                            where + " does not resolve to a duplicate set of this scan");
    }
    auto& labels = truth.labels[matches.front()];
    labels.insert(e.patterns.begin(), e.patterns.end());
  }
  return truth;
}

std::vector<TruthEntry> truth_from_findings(std::span<const DuplicateSet> sets,
                                            std::span<const LoggingStatement> statements,
                                            std::span<const SmellInstance> findings) {
  std::vector<TruthEntry> entries(sets.size());
  for (const DuplicateSet& set : sets) {
    TruthEntry& e = entries[set.id];
    e.static_text = set.key;
    for (std::uint32_t id : set.members) {
      e.locations.push_back({statements[id].file_path, statements[id].line});
    }
    std::sort(e.locations.begin(), e.locations.end());
  }
  for (const SmellInstance& f : findings) {
    if (!f.suppressed_by && f.dup_set < entries.size()) entries[f.dup_set].patterns.insert(f.pattern);
  }
  return entries;
}

Score score_counts(std::size_t detected, std::size_t correct, std::size_t truth) {
  if (correct > detected || correct > truth) {
    throw EvaluationError("correct count exceeds detected or truth count");
  }
  return {detected, correct, truth, percent(correct, detected), percent(correct, truth)};
}

Score score(std::span<const SmellInstance> detected, const GroundTruth& truth,
            SmellPattern pattern) {
  std::set<std::uint32_t> flagged;
  for (const SmellInstance& f : detected) {
    if (f.pattern != pattern || f.suppressed_by) continue;
    if (f.dup_set >= truth.candidates) {
      throw EvaluationError("finding refers to duplicate set " + std::to_string(f.dup_set) +
                            " outside the scanned corpus");
    }
    flagged.insert(f.dup_set);
  }
  std::size_t correct = 0;
  for (std::uint32_t id : flagged) correct += truth.is_positive(id, pattern) ? 1 : 0;
  return score_counts(flagged.size(), correct, truth.positives(pattern));
}

BaselineResult random_baseline(const GroundTruth& truth, SmellPattern pattern,
                               std::size_t iterations, std::uint64_t seed) {
  if (iterations == 0) throw EvaluationError("baseline needs at least one iteration");
  BaselineResult result;
  result.iterations = iterations;
  const std::size_t n = truth.candidates;
  const std::size_t positives = truth.positives(pattern);
  result.positive_rate = n == 0 ? 0.0 : static_cast<double>(positives) / static_cast<double>(n);

  std::vector<bool> is_positive(n);
  for (std::size_t i = 0; i < n; ++i) {
    is_positive[i] = truth.is_positive(static_cast<std::uint32_t>(i), pattern);
  }

  std::mt19937_64 rng(seed);
  std::bernoulli_distribution coin(result.positive_rate);
  double precision_sum = 0.0;
  double recall_sum = 0.0;
  std::size_t precision_runs = 0;
  for (std::size_t it = 0; it < iterations; ++it) {
    std::size_t predicted = 0;
    std::size_t correct = 0;
    for (std::size_t i = 0; i < n; ++i) {
      if (!coin(rng)) continue;
      ++predicted;
      correct += is_positive[i] ? 1 : 0;
    }
    if (predicted > 0) {
      precision_sum += static_cast<double>(correct) / static_cast<double>(predicted);
      ++precision_runs;
    }
    if (positives > 0) recall_sum += static_cast<double>(correct) / static_cast<double>(positives);
  }
  if (precision_runs > 0) {
    result.mean_precision = 100.0 * precision_sum / static_cast<double>(precision_runs);
  }
  if (positives > 0) result.mean_recall = 100.0 * recall_sum / static_cast<double>(iterations);
  return result;
}

}  // namespace logdup
