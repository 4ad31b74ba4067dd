#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "logdup/clone_analysis.hpp"
#include "logdup/evaluation.hpp"
#include "logdup/report.hpp"
#include "logdup/scan.hpp"
#include "logdup/text_analysis.hpp"

namespace py = pybind11;

namespace {

logdup::ScanConfig make_config(const std::optional<std::string>& patterns, bool include_tests,
                               bool with_clone_analysis, std::size_t stop_words,
                               unsigned threads) {
  logdup::ScanConfig config;
  if (patterns) config.patterns = logdup::parse_pattern_list(*patterns);
  config.include_tests = include_tests;
  config.with_clone_analysis = with_clone_analysis;
  config.stop_word_cap = stop_words;
  config.threads = threads == 0 ? logdup::default_thread_count() : threads;
  return config;
}

std::string scan_path(const std::string& root, const std::optional<std::string>& patterns,
                      bool include_tests, bool with_clone_analysis, std::size_t stop_words,
                      unsigned threads) {
  logdup::ScanConfig config =
      make_config(patterns, include_tests, with_clone_analysis, stop_words, threads);
  config.roots.emplace_back(root);
  logdup::ScanOutput out;
  {
    py::gil_scoped_release release;
    out = logdup::run_pipeline(config);
  }
  return logdup::emit_json(logdup::build_report(out, config));
}

std::string scan_sources(const std::map<std::string, std::string>& sources,
                         const std::optional<std::string>& patterns, bool with_clone_analysis,
                         std::size_t stop_words) {
  logdup::ScanConfig config = make_config(patterns, true, with_clone_analysis, stop_words, 1);
  std::vector<std::pair<std::string, std::string>> files(sources.begin(), sources.end());
  const logdup::ScanOutput out = logdup::run_pipeline(config, std::move(files));
  return logdup::emit_json(logdup::build_report(out, config));
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Duplicate logging code smell detection for Java sources";
  m.attr("__version__") = std::string(logdup::kToolVersion);

  py::register_exception<logdup::ScanError>(m, "ScanError");

  m.def("scan", &scan_path, py::arg("root"), py::arg("patterns") = py::none(),
        py::arg("include_tests") = false, py::arg("with_clone_analysis") = false,
        py::arg("stop_words") = 50, py::arg("threads") = 0,
        "Scan a directory and return the JSON report.");
  m.def("scan_sources", &scan_sources, py::arg("sources"), py::arg("patterns") = py::none(),
        py::arg("with_clone_analysis") = false, py::arg("stop_words") = 50,
        "Scan in-memory sources keyed by relative path and return the JSON report.");
  m.def("porter_stem", &logdup::porter_stem, py::arg("word"));
  m.def("split_words", &logdup::split_words, py::arg("text"));
  m.def(
      "block_similarity",
      [](const std::vector<std::string>& a, const std::vector<std::string>& b) {
        return logdup::block_similarity(a, b);
      },
      py::arg("a"), py::arg("b"));
  m.def(
      "score_counts",
      [](std::size_t detected, std::size_t correct, std::size_t truth) {
        const logdup::Score s = logdup::score_counts(detected, correct, truth);
        return py::make_tuple(s.precision ? py::cast(*s.precision) : py::none(),
                              s.recall ? py::cast(*s.recall) : py::none());
      },
      py::arg("detected"), py::arg("correct"), py::arg("truth"),
      "Returns (precision, recall) in percent; None when undefined.");
}
