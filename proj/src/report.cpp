#include "logdup/report.hpp"

#include <algorithm>
#include <cstdio>
#include <sstream>
#include <stdexcept>

#include "json.hpp"

namespace logdup {

using nlohmann::json;

namespace {

constexpr SmellPattern kAllPatterns[] = {SmellPattern::IC, SmellPattern::IE, SmellPattern::LM,
                                         SmellPattern::DP};

ReportMember member_of(const LoggingStatement& s) {
  ReportMember m;
  m.file = s.file_path;
  m.line = s.line;
  m.level = std::string(to_string(s.level));
  m.type = s.enclosing_type;
  m.method = s.enclosing_method;
  m.exception_usage = std::string(to_string(s.exception_usage));
  m.caught_types = s.in_catch_of;
  return m;
}

std::string join(const std::vector<std::string>& items, std::string_view sep) {
  std::string out;
  for (std::size_t i = 0; i < items.size(); ++i) {
    if (i > 0) out += sep;
    out += items[i];
  }
  return out;
}

std::string format_percent(double value) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.1f%%", value);
  return buf;
}

struct DetailVisitor {
  const ScanOutput& scan;

  std::string operator()(const IcEvidence& ev) const {
    const CodeBlock& b = scan.corpus.block(ev.try_block);
    return "try block at " + scan.corpus.file_of(ev.try_block) + ":" +
           std::to_string(b.start_line);
  }
  std::string operator()(const IeEvidence& ev) const {
    std::vector<std::string> usages;
    for (ExceptionUsage u : ev.usages) usages.emplace_back(to_string(u));
    return "exception usage: " + join(usages, ", ");
  }
  std::string operator()(const LmEvidence& ev) const {
    std::vector<std::string> counts;
    for (std::size_t c : ev.common_counts) counts.push_back(std::to_string(c));
    return "common word counts: " + join(counts, ", ");
  }
  std::string operator()(const DpEvidence& ev) const {
    return "related through: " + join(ev.supertypes, ", ");
  }
};

ReportFinding finding_of(const ScanOutput& scan, const SmellInstance& inst) {
  ReportFinding f;
  f.pattern = std::string(to_string(inst.pattern));
  f.dup_set = inst.dup_set;
  f.message = scan.sets[inst.dup_set].key;
  if (inst.suppressed_by) f.justification = std::string(to_string(*inst.suppressed_by));
  f.detail = std::visit(DetailVisitor{scan}, inst.evidence);
  const auto* lm = std::get_if<LmEvidence>(&inst.evidence);
  for (std::size_t i = 0; i < inst.members.size(); ++i) {
    ReportMember m = member_of(scan.statements[inst.members[i]]);
    if (lm) m.common_words = lm->common_words[i];
    f.members.push_back(std::move(m));
  }
  return f;
}

// JSON helpers --------------------------------------------------------------

json to_json(const ReportMember& m) {
  json j = {{"file", m.file},     {"line", m.line},   {"level", m.level},
            {"type", m.type},     {"method", m.method}, {"exception_usage", m.exception_usage},
            {"caught_types", m.caught_types}};
  if (!m.common_words.empty()) j["common_words"] = m.common_words;
  return j;
}

ReportMember member_from(const json& j) {
  ReportMember m;
  j.at("file").get_to(m.file);
  j.at("line").get_to(m.line);
  j.at("level").get_to(m.level);
  j.at("type").get_to(m.type);
  j.at("method").get_to(m.method);
  j.at("exception_usage").get_to(m.exception_usage);
  j.at("caught_types").get_to(m.caught_types);
  if (j.contains("common_words")) j.at("common_words").get_to(m.common_words);
  return m;
}

json members_json(const std::vector<ReportMember>& members) {
  json arr = json::array();
  for (const auto& m : members) arr.push_back(to_json(m));
  return arr;
}

std::vector<ReportMember> members_from(const json& j) {
  std::vector<ReportMember> out;
  for (const auto& m : j) out.push_back(member_from(m));
  return out;
}

json to_json(const ReportFinding& f) {
  return {{"pattern", f.pattern},
          {"dup_set", f.dup_set},
          {"message", f.message},
          {"justification", f.justification ? json(*f.justification) : json(nullptr)},
          {"detail", f.detail},
          {"members", members_json(f.members)}};
}

ReportFinding finding_from(const json& j) {
  ReportFinding f;
  j.at("pattern").get_to(f.pattern);
  j.at("dup_set").get_to(f.dup_set);
  j.at("message").get_to(f.message);
  if (!j.at("justification").is_null()) f.justification = j.at("justification").get<std::string>();
  j.at("detail").get_to(f.detail);
  f.members = members_from(j.at("members"));
  return f;
}

json optional_number(const std::optional<double>& v) { return v ? json(*v) : json(nullptr); }

}  // namespace

std::size_t Report::count(std::string_view pattern) const {
  return static_cast<std::size_t>(std::count_if(
      findings.begin(), findings.end(), [&](const ReportFinding& f) { return f.pattern == pattern; }));
}

Report build_report(const ScanOutput& scan, const ScanConfig& config) {
  Report r;
  r.config_hash = config_fingerprint(config);
  for (SmellPattern p : config.patterns) r.patterns.emplace_back(to_string(p));
  r.stop_word_cap = config.stop_word_cap;
  r.include_tests = config.include_tests;

  r.files = scan.corpus.units().size();
  r.nol = scan.stats.nol;
  r.nodl = scan.stats.nodl;
  r.nods = scan.stats.nods;
  r.nodl_percent = scan.stats.nodl_percent();

  for (const auto& f : scan.findings) r.findings.push_back(finding_of(scan, f));
  for (const auto& f : scan.suppressed) r.suppressed.push_back(finding_of(scan, f));
  for (const auto& il : scan.level_inconsistencies) {
    ReportLevelInconsistency out;
    out.dup_set = il.dup_set;
    out.message = scan.sets[il.dup_set].key;
    for (LogLevel l : il.levels) out.levels.emplace_back(to_string(l));
    for (std::uint32_t id : scan.sets[il.dup_set].members) {
      out.members.push_back(member_of(scan.statements[id]));
    }
    r.level_inconsistencies.push_back(std::move(out));
  }
  for (const auto& set : scan.sets) {
    ReportDuplicateSet out;
    out.id = set.id;
    out.message = set.key;
    for (std::uint32_t id : set.members) out.members.push_back(member_of(scan.statements[id]));
    r.duplicate_sets.push_back(std::move(out));
  }
  if (scan.clone_correlation && scan.clones && scan.clone_strip) {
    ReportCloneAnalysis c;
    c.threshold = config.clone.threshold;
    c.min_lines = config.clone.min_lines;
    c.clone_classes = scan.clones->classes.size();
    const CloneSummary& s = scan.clone_correlation->summary;
    c.dup_sets = s.dup_sets;
    c.clone_sets = s.clone_sets;
    c.micro_clone_sets = s.micro_clone_sets;
    c.clone_set_percent = s.clone_set_percent;
    c.average_similarity = s.average_similarity;
    c.clone_sets_without_logs = scan.clone_strip->clone_sets_without_logs;
    c.reduced = scan.clone_strip->reduced;
    c.percent_reduced = scan.clone_strip->percent_reduced;
    for (const CloneCorrelation& cc : scan.clone_correlation->correlations) {
      c.sets.push_back({cc.dup_set_id, std::string(to_string(cc.classification)), cc.similarity});
    }
    r.clone_analysis = std::move(c);
  }
  for (const auto& d : scan.diagnostics) r.diagnostics.push_back({d.file, d.line, d.message});
  return r;
}

std::string emit_json(const Report& r) {
  json j;
  j["tool"] = {{"name", r.tool}, {"version", r.version}, {"config_hash", r.config_hash}};
  j["config"] = {{"patterns", r.patterns},
                 {"stop_word_cap", r.stop_word_cap},
                 {"include_tests", r.include_tests}};
  j["stats"] = {{"files", r.files},
                {"nol", r.nol},
                {"nodl", r.nodl},
                {"nods", r.nods},
                {"nodl_percent", r.nodl_percent}};
  json findings = json::object();
  json summary = json::object();
  for (SmellPattern p : kAllPatterns) {
    const std::string name(to_string(p));
    json arr = json::array();
    for (const auto& f : r.findings) {
      if (f.pattern == name) arr.push_back(to_json(f));
    }
    summary[name] = arr.size();
    findings[name] = std::move(arr);
  }
  j["summary"] = std::move(summary);
  j["findings"] = std::move(findings);
  json suppressed = json::array();
  for (const auto& f : r.suppressed) suppressed.push_back(to_json(f));
  j["suppressed"] = std::move(suppressed);
  json il = json::array();
  for (const auto& x : r.level_inconsistencies) {
    il.push_back({{"dup_set", x.dup_set},
                  {"message", x.message},
                  {"levels", x.levels},
                  {"members", members_json(x.members)}});
  }
  j["level_inconsistencies"] = std::move(il);
  json sets = json::array();
  for (const auto& s : r.duplicate_sets) {
    sets.push_back({{"id", s.id}, {"message", s.message}, {"members", members_json(s.members)}});
  }
  j["duplicate_sets"] = std::move(sets);
  if (r.clone_analysis) {
    const auto& c = *r.clone_analysis;
    json per_set = json::array();
    for (const auto& s : c.sets) {
      per_set.push_back({{"dup_set", s.dup_set},
                         {"classification", s.classification},
                         {"similarity", optional_number(s.similarity)}});
    }
    j["clone_analysis"] = {{"threshold", c.threshold},
                           {"min_lines", c.min_lines},
                           {"clone_classes", c.clone_classes},
                           {"dup_sets", c.dup_sets},
                           {"clone_sets", c.clone_sets},
                           {"micro_clone_sets", c.micro_clone_sets},
                           {"clone_set_percent", c.clone_set_percent},
                           {"average_similarity", c.average_similarity},
                           {"clone_sets_without_logs", c.clone_sets_without_logs},
                           {"reduced", c.reduced},
                           {"percent_reduced", c.percent_reduced},
                           {"sets", std::move(per_set)}};
  } else {
    j["clone_analysis"] = nullptr;
  }
  json diags = json::array();
  for (const auto& d : r.diagnostics) {
    diags.push_back({{"file", d.file}, {"line", d.line}, {"message", d.message}});
  }
  j["diagnostics"] = std::move(diags);
  return j.dump(2) + "\n";
}

Report parse_report_json(std::string_view text) {
  try {
    const json j = json::parse(text);
    Report r;
    j.at("tool").at("name").get_to(r.tool);
    j.at("tool").at("version").get_to(r.version);
    j.at("tool").at("config_hash").get_to(r.config_hash);
    j.at("config").at("patterns").get_to(r.patterns);
    j.at("config").at("stop_word_cap").get_to(r.stop_word_cap);
    j.at("config").at("include_tests").get_to(r.include_tests);
    const json& st = j.at("stats");
    st.at("files").get_to(r.files);
    st.at("nol").get_to(r.nol);
    st.at("nodl").get_to(r.nodl);
    st.at("nods").get_to(r.nods);
    st.at("nodl_percent").get_to(r.nodl_percent);
    for (SmellPattern p : kAllPatterns) {
      for (const auto& f : j.at("findings").at(std::string(to_string(p)))) {
        r.findings.push_back(finding_from(f));
      }
    }
    for (const auto& f : j.at("suppressed")) r.suppressed.push_back(finding_from(f));
    for (const auto& x : j.at("level_inconsistencies")) {
      ReportLevelInconsistency il;
      x.at("dup_set").get_to(il.dup_set);
      x.at("message").get_to(il.message);
      x.at("levels").get_to(il.levels);
      il.members = members_from(x.at("members"));
      r.level_inconsistencies.push_back(std::move(il));
    }
    for (const auto& x : j.at("duplicate_sets")) {
      ReportDuplicateSet s;
      x.at("id").get_to(s.id);
      x.at("message").get_to(s.message);
      s.members = members_from(x.at("members"));
      r.duplicate_sets.push_back(std::move(s));
    }
    if (const json& c = j.at("clone_analysis"); !c.is_null()) {
      ReportCloneAnalysis out;
      c.at("threshold").get_to(out.threshold);
      c.at("min_lines").get_to(out.min_lines);
      c.at("clone_classes").get_to(out.clone_classes);
      c.at("dup_sets").get_to(out.dup_sets);
      c.at("clone_sets").get_to(out.clone_sets);
      c.at("micro_clone_sets").get_to(out.micro_clone_sets);
      c.at("clone_set_percent").get_to(out.clone_set_percent);
      c.at("average_similarity").get_to(out.average_similarity);
      c.at("clone_sets_without_logs").get_to(out.clone_sets_without_logs);
      c.at("reduced").get_to(out.reduced);
      c.at("percent_reduced").get_to(out.percent_reduced);
      for (const auto& s : c.at("sets")) {
        ReportCloneSet cs;
        s.at("dup_set").get_to(cs.dup_set);
        s.at("classification").get_to(cs.classification);
        if (!s.at("similarity").is_null()) cs.similarity = s.at("similarity").get<double>();
        out.sets.push_back(std::move(cs));
      }
      r.clone_analysis = std::move(out);
    }
    for (const auto& d : j.at("diagnostics")) {
      r.diagnostics.push_back({d.at("file").get<std::string>(), d.at("line").get<int>(),
                               d.at("message").get<std::string>()});
    }
    return r;
  } catch (const json::exception& e) {
    throw std::runtime_error(std::string("malformed report: ") + e.what());
  }
}

std::string emit_text(const Report& r, bool verbose) {
  std::ostringstream out;
  auto print_members = [&](const std::vector<ReportMember>& members) {
    for (const auto& m : members) {
      out << "    " << m.file << ':' << m.line << "  " << m.level;
      if (!m.method.empty()) out << "  " << m.type << '#' << m.method;
      if (m.exception_usage != "not-applicable") out << "  exception: " << m.exception_usage;
      if (!m.common_words.empty()) out << "  common: {" << join(m.common_words, ", ") << '}';
      out << '\n';
    }
  };
  auto print_finding = [&](const ReportFinding& f) {
    out << '[' << f.pattern;
    if (f.justification) out << ' ' << *f.justification;
    out << "] set " << f.dup_set << "  \"" << f.message << "\"\n";
    out << "    " << f.detail << '\n';
    print_members(f.members);
  };

  out << r.tool << ' ' << r.version << "  config " << r.config_hash << '\n';
  out << "files " << r.files << "  NOL " << r.nol << "  NODL " << r.nodl << " ("
      << format_percent(r.nodl_percent) << ")  NODS " << r.nods << "\n\n";
  out << "findings:";
  for (SmellPattern p : kAllPatterns) out << "  " << to_string(p) << ' ' << r.count(to_string(p));
  out << "  suppressed " << r.suppressed.size() << "\n";
  for (const auto& f : r.findings) {
    out << '\n';
    print_finding(f);
  }
  if (verbose) {
    if (!r.suppressed.empty()) out << "\nsuppressed (justifiable):\n";
    for (const auto& f : r.suppressed) print_finding(f);
    if (!r.level_inconsistencies.empty()) out << "\ninconsistent levels (informational):\n";
    for (const auto& il : r.level_inconsistencies) {
      out << "[IL] set " << il.dup_set << "  \"" << il.message << "\"  levels "
          << join(il.levels, ", ") << '\n';
      print_members(il.members);
    }
    if (!r.duplicate_sets.empty()) out << "\nduplicate sets:\n";
    for (const auto& s : r.duplicate_sets) {
      out << "set " << s.id << "  \"" << s.message << "\"  (" << s.members.size() << ")\n";
      print_members(s.members);
    }
  }
  if (r.clone_analysis) {
    const auto& c = *r.clone_analysis;
    out << "\nclone analysis (threshold " << c.threshold << "%, min lines " << c.min_lines
        << "):\n";
    out << "  clone classes " << c.clone_classes << "\n";
    out << "  CloneSet " << c.clone_sets << " of " << c.dup_sets << " ("
        << format_percent(c.clone_set_percent) << "), average similarity "
        << format_percent(c.average_similarity) << '\n';
    out << "  micro-clone sets " << c.micro_clone_sets << '\n';
    out << "  after removing duplicate logs: " << c.clone_sets_without_logs
        << " still cloned, " << c.reduced << " reduced (" << format_percent(c.percent_reduced)
        << ")\n";
  }
  if (!r.diagnostics.empty()) {
    out << '\n' << r.diagnostics.size() << " parse diagnostics";
    if (verbose) {
      out << ":\n";
      for (const auto& d : r.diagnostics) {
        out << "  " << d.file << ':' << d.line << "  " << d.message << '\n';
      }
    } else {
      out << " (use --verbose to list)\n";
    }
  }
  return out.str();
}

std::string emit(const Report& report, OutputFormat format, bool verbose) {
  return format == OutputFormat::Json ? emit_json(report) : emit_text(report, verbose);
}

int exit_code_for(const Report& report) { return report.findings.empty() ? 0 : 1; }

}  // namespace logdup
