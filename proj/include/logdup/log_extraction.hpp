#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "logdup/source_model.hpp"

namespace logdup {

enum class LogLevel : std::uint8_t { Fatal, Error, Warn, Info, Debug, Trace, Unknown };

std::string_view to_string(LogLevel level);
std::optional<LogLevel> parse_log_level(std::string_view name);

// Ordered by how much of the exception is recorded.
enum class ExceptionUsage : std::uint8_t { NotApplicable, None, MessageOnly, FullStackTrace };

std::string_view to_string(ExceptionUsage usage);

enum class VariableKind : std::uint8_t { StringVar, NonStringVar, ExceptionVar, CallResult };

std::string_view to_string(VariableKind kind);

// Abstraction of every non-constant value in a rendered message. The angle
// brackets are U+27E8/U+27E9 and cannot occur unescaped in a Java literal's
// source text.
inline constexpr std::string_view kPlaceholder = "⟨V⟩";

struct LoggerConfig {
  // ECMAScript syntax; a leading `(?i)` switches to case-insensitive.
  std::string receiver_pattern = "(?i)(log|logger|s_log.*|logging)";
  std::map<std::string, LogLevel> method_levels = {
      {"fatal", LogLevel::Fatal}, {"error", LogLevel::Error}, {"warn", LogLevel::Warn},
      {"info", LogLevel::Info},   {"debug", LogLevel::Debug}, {"trace", LogLevel::Trace},
  };
};

struct LoggingStatement {
  std::uint32_t id = 0;  // index in the scan's statement table
  std::string file_path;
  int line = 0;
  LogLevel level = LogLevel::Unknown;
  std::string static_text;
  std::string enclosing_type;         // qualified; empty outside named types
  std::string enclosing_type_simple;  // simple name
  std::string enclosing_method;       // signature; empty outside methods
  std::string method_name;
  std::optional<BlockId> enclosing_block;
  std::vector<VariableKind> logged_variable_kinds;
  ExceptionUsage exception_usage = ExceptionUsage::NotApplicable;
  std::vector<std::string> in_catch_of;

  // Location details used by detectors and the clone analysis.
  std::optional<BlockId> catch_block;
  // The catch block also hands its exception variable, unchanged, to a
  // method call or constructor that is not a logging call.
  bool catch_forwards_exception = false;
  TokenSpan call;       // receiver .. closing parenthesis
  TokenSpan statement;  // enclosing simple statement
};

// Rendering of one logging call's arguments.
struct RenderedMessage {
  std::string text;
  std::vector<VariableKind> variable_kinds;
};

// `catch_variable` is the exception parameter of the enclosing catch (empty
// when none). Expressions derived from it contribute nothing to the text;
// string literals are kept verbatim, in-file `static final String`
// constants are folded, anything else becomes kPlaceholder.
RenderedMessage render_static_text(const SourceUnit& unit,
                                   std::span<const TokenSpan> arguments,
                                   std::string_view catch_variable,
                                   std::string_view enclosing_type = {});

ExceptionUsage classify_exception_usage(const SourceUnit& unit,
                                        std::span<const TokenSpan> arguments,
                                        std::string_view catch_variable);

// Top-level comma-separated argument spans of the call whose '(' is at
// `open_paren`.
std::vector<TokenSpan> call_arguments(const SourceUnit& unit, std::size_t open_paren);

std::vector<LoggingStatement> extract_logging_statements(const SourceUnit& unit,
                                                         const LoggerConfig& config,
                                                         std::uint32_t unit_index = 0);

// All statements of a corpus, sorted by (file, line, column) with ids set.
std::vector<LoggingStatement> extract_corpus_statements(const Corpus& corpus,
                                                        const LoggerConfig& config,
                                                        unsigned threads = 1);

}  // namespace logdup
