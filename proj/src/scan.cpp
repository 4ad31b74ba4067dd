#include "logdup/scan.hpp"

#include <fnmatch.h>

#include <algorithm>
#include <charconv>
#include <cstdint>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <thread>
#include <tuple>

#include "parallel.hpp"

namespace logdup {

namespace fs = std::filesystem;

namespace {

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

std::vector<std::string> split_list(std::string_view list) {
  std::vector<std::string> out;
  std::size_t start = 0;
  while (start <= list.size()) {
    const std::size_t comma = list.find(',', start);
    const auto item = trim(list.substr(start, comma == std::string_view::npos ? comma : comma - start));
    if (!item.empty()) out.emplace_back(item);
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return out;
}

bool parse_bool(std::string_view key, std::string_view value) {
  if (value == "true" || value == "1" || value == "yes" || value == "on") return true;
  if (value == "false" || value == "0" || value == "no" || value == "off") return false;
  throw ScanError("config: " + std::string(key) + " expects true or false, got '" +
                  std::string(value) + "'");
}

template <typename T>
T parse_number(std::string_view key, std::string_view value) {
  T out{};
  const auto [ptr, ec] = std::from_chars(value.data(), value.data() + value.size(), out);
  if (ec != std::errc() || ptr != value.data() + value.size()) {
    throw ScanError("config: " + std::string(key) + " expects a number, got '" +
                    std::string(value) + "'");
  }
  return out;
}

bool glob_match(const std::string& pattern, const std::string& path) {
  return fnmatch(pattern.c_str(), path.c_str(), 0) == 0;
}

bool selected(const ScanConfig& config, const std::string& relative) {
  if (!config.include_tests && is_test_path(relative)) return false;
  if (!config.include_globs.empty() &&
      std::none_of(config.include_globs.begin(), config.include_globs.end(),
                   [&](const std::string& g) { return glob_match(g, relative); })) {
    return false;
  }
  return std::none_of(config.exclude_globs.begin(), config.exclude_globs.end(),
                      [&](const std::string& g) { return glob_match(g, relative); });
}

std::string read_file(const fs::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ScanError("cannot read " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

std::uint64_t fnv1a(std::string_view text) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : text) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  return h;
}

void run_analysis(const ScanConfig& config, ScanOutput& out) {
  out.statements = extract_corpus_statements(out.corpus, config.logger, config.threads);
  out.sets = build_duplicate_sets(out.statements);
  out.stats = corpus_stats(out.sets, out.statements);
  out.stop_words = corpus_stop_words(out.statements, config.stop_word_cap);
  out.graph = build_inheritance_graph(out.corpus);

  const DetectionInput in{out.corpus, out.statements, out.sets};
  std::vector<SmellInstance> all;
  auto take = [&](std::vector<SmellInstance> found) {
    for (auto& f : found) all.push_back(std::move(f));
  };
  if (config.patterns.count(SmellPattern::IC)) take(detect_ic(in));
  if (config.patterns.count(SmellPattern::IE)) take(detect_ie(in));
  if (config.patterns.count(SmellPattern::LM)) take(detect_lm(in, out.stop_words));
  if (config.patterns.count(SmellPattern::DP)) take(detect_dp(in, out.graph));
  for (auto& f : all) {
    (f.suppressed_by ? out.suppressed : out.findings).push_back(std::move(f));
  }
  sort_findings(out.findings, out.statements);
  sort_findings(out.suppressed, out.statements);
  out.level_inconsistencies = detect_il(in);

  if (config.with_clone_analysis) {
    CloneOptions options = config.clone;
    options.threads = config.threads;
    out.clones = scan_clones(out.corpus, options);
    out.clone_correlation =
        correlate(out.corpus, out.statements, out.sets, *out.clones, options);
    out.clone_strip = strip_logs_and_recompute(out.corpus, out.statements, out.sets,
                                               *out.clones, *out.clone_correlation, options);
  }
}

}  // namespace

std::set<SmellPattern> parse_pattern_list(std::string_view list) {
  std::set<SmellPattern> out;
  for (const std::string& name : split_list(list)) {
    const auto p = parse_smell_pattern(name);
    if (!p) throw ScanError("unknown pattern '" + name + "' (expected ic, ie, lm, dp)");
    out.insert(*p);
  }
  return out;
}

void apply_config_text(std::string_view text, ScanConfig& config) {
  std::istringstream in{std::string(text)};
  std::string raw;
  int line_no = 0;
  while (std::getline(in, raw)) {
    ++line_no;
    std::string_view line = raw;
    if (const auto hash = line.find('#'); hash != std::string_view::npos) {
      line = line.substr(0, hash);
    }
    line = trim(line);
    if (line.empty()) continue;
    const auto eq = line.find('=');
    if (eq == std::string_view::npos) {
      throw ScanError("config line " + std::to_string(line_no) + ": expected key = value");
    }
    const auto key = trim(line.substr(0, eq));
    const auto value = trim(line.substr(eq + 1));
    if (key == "patterns") {
      config.patterns = parse_pattern_list(value);
    } else if (key == "format") {
      if (value == "text") {
        config.format = OutputFormat::Text;
      } else if (value == "json") {
        config.format = OutputFormat::Json;
      } else {
        throw ScanError("config: format must be text or json");
      }
    } else if (key == "stopwords") {
      config.stop_word_cap = parse_number<std::size_t>(key, value);
    } else if (key == "with-clone-analysis") {
      config.with_clone_analysis = parse_bool(key, value);
    } else if (key == "clone-threshold") {
      config.clone.threshold = parse_number<double>(key, value);
    } else if (key == "clone-min-lines") {
      config.clone.min_lines = parse_number<int>(key, value);
    } else if (key == "include-tests") {
      config.include_tests = parse_bool(key, value);
    } else if (key == "verbose") {
      config.verbose = parse_bool(key, value);
    } else if (key == "include") {
      config.include_globs = split_list(value);
    } else if (key == "exclude") {
      config.exclude_globs = split_list(value);
    } else if (key == "logger-pattern") {
      config.logger.receiver_pattern = std::string(value);
    } else {
      throw ScanError("config line " + std::to_string(line_no) + ": unknown key '" +
                      std::string(key) + "'");
    }
  }
}

void apply_config_file(const fs::path& path, ScanConfig& config) {
  apply_config_text(read_file(path), config);
}

unsigned default_thread_count() {
  if (const char* env = std::getenv("LOGDUP_THREADS")) {
    unsigned n = 0;
    const std::string_view v(env);
    const auto [ptr, ec] = std::from_chars(v.data(), v.data() + v.size(), n);
    if (ec == std::errc() && ptr == v.data() + v.size() && n > 0) return n;
  }
  return std::max(1u, std::thread::hardware_concurrency());
}

bool is_test_path(std::string_view relative_path) {
  std::size_t start = 0;
  while (true) {
    const std::size_t slash = relative_path.find('/', start);
    const auto segment = relative_path.substr(
        start, slash == std::string_view::npos ? slash : slash - start);
    if (slash == std::string_view::npos) {
      return segment.ends_with("Test.java") || segment.ends_with("Tests.java");
    }
    if (segment == "test" || segment == "tests") return true;
    start = slash + 1;
  }
}

std::vector<SourceFile> discover_sources(const ScanConfig& config) {
  std::vector<SourceFile> files;
  for (const fs::path& root : config.roots) {
    std::error_code ec;
    const auto status = fs::status(root, ec);
    if (ec || !fs::exists(status)) throw ScanError("cannot read root " + root.string());
    const std::string prefix =
        config.roots.size() > 1 ? root.lexically_normal().generic_string() + "/" : "";
    if (fs::is_regular_file(status)) {
      const std::string rel = prefix + root.filename().generic_string();
      if (root.extension() == ".java") files.push_back({root, rel});
      continue;
    }
    fs::recursive_directory_iterator it(root, fs::directory_options::skip_permission_denied, ec);
    if (ec) throw ScanError("cannot read root " + root.string() + ": " + ec.message());
    for (; it != fs::recursive_directory_iterator(); it.increment(ec)) {
      if (ec) throw ScanError("error walking " + root.string() + ": " + ec.message());
      if (!it->is_regular_file(ec) || it->path().extension() != ".java") continue;
      std::string rel = prefix + it->path().lexically_relative(root).generic_string();
      if (selected(config, rel)) files.push_back({it->path(), std::move(rel)});
    }
  }
  std::sort(files.begin(), files.end(),
            [](const SourceFile& a, const SourceFile& b) { return a.relative < b.relative; });
  files.erase(std::unique(files.begin(), files.end(),
                          [](const SourceFile& a, const SourceFile& b) {
                            return a.relative == b.relative;
                          }),
              files.end());
  return files;
}

std::string config_fingerprint(const ScanConfig& config) {
  std::ostringstream canon;
  canon << "patterns=";
  for (SmellPattern p : config.patterns) canon << to_string(p) << ',';
  canon << ";stopwords=" << config.stop_word_cap << ";tests=" << config.include_tests
        << ";clones=" << config.with_clone_analysis << ';' << config.clone.threshold << ';'
        << config.clone.min_lines << ";logger=" << config.logger.receiver_pattern;
  for (const auto& [name, level] : config.logger.method_levels) {
    canon << ';' << name << '=' << to_string(level);
  }
  canon << ";include=";
  for (const auto& g : config.include_globs) canon << g << ',';
  canon << ";exclude=";
  for (const auto& g : config.exclude_globs) canon << g << ',';
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx",
                static_cast<unsigned long long>(fnv1a(canon.str())));
  return buf;
}

ScanOutput run_pipeline(const ScanConfig& config) {
  const std::vector<SourceFile> files = discover_sources(config);
  std::vector<std::pair<std::string, std::string>> sources(files.size());
  std::vector<std::string> errors(files.size());
  detail::parallel_for(files.size(), config.threads, [&](std::size_t i) {
    sources[i].first = files[i].relative;
    try {
      sources[i].second = read_file(files[i].absolute);
    } catch (const ScanError& e) {
      errors[i] = e.what();
    }
  });
  ScanOutput out = run_pipeline(config, std::move(sources));
  for (std::size_t i = 0; i < files.size(); ++i) {
    if (!errors[i].empty()) out.diagnostics.push_back({files[i].relative, 0, errors[i]});
  }
  std::sort(out.diagnostics.begin(), out.diagnostics.end(),
            [](const FileDiagnostic& a, const FileDiagnostic& b) {
              return std::tie(a.file, a.line, a.message) < std::tie(b.file, b.line, b.message);
            });
  return out;
}

ScanOutput run_pipeline(const ScanConfig& config,
                        std::vector<std::pair<std::string, std::string>> sources) {
  std::vector<SourceUnit> units(sources.size());
  detail::parallel_for(sources.size(), config.threads, [&](std::size_t i) {
    units[i] = parse_source_unit(sources[i].first, sources[i].second);
  });
  ScanOutput out;
  for (const SourceUnit& u : units) {
    for (const ParseDiagnostic& d : u.parse_diagnostics) {
      out.diagnostics.push_back({u.file_path, d.line, d.message});
    }
  }
  std::sort(out.diagnostics.begin(), out.diagnostics.end(),
            [](const FileDiagnostic& a, const FileDiagnostic& b) {
              return std::tie(a.file, a.line, a.message) < std::tie(b.file, b.line, b.message);
            });
  try {
    out.corpus = Corpus(std::move(units));
  } catch (const std::exception& e) {
    throw ScanError(e.what());
  }
  run_analysis(config, out);
  return out;
}

}  // namespace logdup
