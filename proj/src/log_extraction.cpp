#include "logdup/log_extraction.hpp"

#include <algorithm>
#include <regex>
#include <set>

#include "parallel.hpp"
#include "token_utils.hpp"

namespace logdup {

std::string_view to_string(LogLevel level) {
  switch (level) {
    case LogLevel::Fatal: return "fatal";
    case LogLevel::Error: return "error";
    case LogLevel::Warn: return "warn";
    case LogLevel::Info: return "info";
    case LogLevel::Debug: return "debug";
    case LogLevel::Trace: return "trace";
    case LogLevel::Unknown: return "unknown";
  }
  return "unknown";
}

std::optional<LogLevel> parse_log_level(std::string_view name) {
  for (LogLevel l : {LogLevel::Fatal, LogLevel::Error, LogLevel::Warn, LogLevel::Info,
                     LogLevel::Debug, LogLevel::Trace, LogLevel::Unknown}) {
    if (to_string(l) == name) return l;
  }
  return std::nullopt;
}

std::string_view to_string(ExceptionUsage usage) {
  switch (usage) {
    case ExceptionUsage::NotApplicable: return "not-applicable";
    case ExceptionUsage::None: return "none";
    case ExceptionUsage::MessageOnly: return "message_only";
    case ExceptionUsage::FullStackTrace: return "full_stack_trace";
  }
  return "not-applicable";
}

std::string_view to_string(VariableKind kind) {
  switch (kind) {
    case VariableKind::StringVar: return "string-var";
    case VariableKind::NonStringVar: return "non-string-var";
    case VariableKind::ExceptionVar: return "exception-var";
    case VariableKind::CallResult: return "call-result";
  }
  return "non-string-var";
}

namespace {

using detail::split_top_level;

// Helpers whose result is the full stack trace of their argument.
bool is_stack_trace_helper(std::string_view name) {
  return name == "stringifyException" || name == "getStackTrace" ||
         name == "getFullStackTrace" || name == "getStackTraceAsString" ||
         name == "printStackTrace";
}

bool is_format_call(const std::vector<Token>& t, TokenSpan s) {
  return s.last >= s.first + 3 && t[s.first].is_identifier() &&
         (t[s.first].text == "String" || t[s.first].text == "MessageFormat") &&
         t[s.first + 1].is(".") && t[s.first + 2].is_identifier("format") &&
         t[s.first + 3].is("(") && t[s.last].is(")");
}

bool references(const std::vector<Token>& t, TokenSpan s, std::string_view var) {
  if (var.empty()) return false;
  for (std::size_t i = s.first; i <= s.last; ++i) {
    if (t[i].is_identifier(var) && (i == 0 || !t[i - 1].is("."))) return true;
  }
  return false;
}

bool is_exactly(const std::vector<Token>& t, TokenSpan s, std::string_view var) {
  if (var.empty()) return false;
  if (s.first == s.last) return t[s.first].is_identifier(var);
  // (Throwable) e
  return t[s.first].is("(") && t[s.last].is_identifier(var) && s.last >= s.first + 3 &&
         t[s.last - 1].is(")");
}

class Renderer {
 public:
  Renderer(const SourceUnit& unit, std::string_view catch_variable,
           std::string_view enclosing_type)
      : unit_(unit), t_(unit.tokens), var_(catch_variable), type_(enclosing_type) {
    for (std::size_t i = 0; i + 1 < t_.size(); ++i) {
      if (t_[i].is_identifier("String") && t_[i + 1].is_identifier() &&
          (i == 0 || !t_[i - 1].is("."))) {
        string_vars_.insert(t_[i + 1].text);
      }
    }
  }

  RenderedMessage arguments(std::span<const TokenSpan> args) {
    RenderedMessage out;
    for (const TokenSpan& a : args) {
      if (is_exactly(t_, a, var_)) {
        out.variable_kinds.push_back(VariableKind::ExceptionVar);
        continue;
      }
      expression(a, out);
    }
    return out;
  }

  void expression(TokenSpan s, RenderedMessage& out, int depth = 0) {
    const auto operands = split_top_level(t_, s, "+");
    bool plain_concat = true;
    for (std::size_t i = s.first, d = 0; i <= s.last; ++i) {
      const Token& tok = t_[i];
      if (tok.is("(") || tok.is("[") || tok.is("{")) ++d;
      if (tok.is(")") || tok.is("]") || tok.is("}")) --d;
      if (d == 0 && (tok.is("?") || tok.is("->"))) plain_concat = false;
    }
    if (!plain_concat || operands.empty()) {
      if (references(t_, s, var_)) {
        out.variable_kinds.push_back(VariableKind::ExceptionVar);
      } else {
        out.text += kPlaceholder;
        out.variable_kinds.push_back(VariableKind::NonStringVar);
      }
      return;
    }
    for (const TokenSpan& op : operands) operand(op, out, depth);
  }

  // Folds a `static final String` initializer; nullopt when it is not a
  // compile-time constant built from literals and other constants.
  std::optional<std::string> constant_value(const std::string& name, int depth) {
    if (depth > 16) return std::nullopt;
    auto [lo, hi] = unit_.string_constants.equal_range(name);
    if (lo == hi) return std::nullopt;
    auto chosen = lo;
    for (auto it = lo; it != hi; ++it) {
      if (!type_.empty() && it->second.owner_type == type_) chosen = it;
    }
    std::string value;
    for (const TokenSpan& op : split_top_level(t_, chosen->second.initializer, "+")) {
      std::optional<std::string> part = constant_operand(op, depth + 1);
      if (!part) return std::nullopt;
      value += *part;
    }
    return value;
  }

 private:
  std::optional<std::string> constant_operand(TokenSpan op, int depth) {
    if (op.first == op.last) {
      const Token& tok = t_[op.first];
      if (tok.kind == TokenKind::StringLiteral || tok.kind == TokenKind::TextBlock ||
          tok.kind == TokenKind::CharLiteral || tok.kind == TokenKind::NumberLiteral) {
        return tok.text;
      }
      if (tok.is_identifier()) return constant_value(tok.text, depth);
      return std::nullopt;
    }
    if (auto name = qualified_constant_name(op)) return constant_value(*name, depth);
    if (t_[op.first].is("(") && t_[op.last].is(")")) {
      std::string value;
      for (const TokenSpan& inner :
           split_top_level(t_, {op.first + 1, op.last - 1}, "+")) {
        auto part = constant_operand(inner, depth + 1);
        if (!part) return std::nullopt;
        value += *part;
      }
      return value;
    }
    return std::nullopt;
  }

  // `Type.NAME` / `this.NAME` / `pkg.Type.NAME` where Type is declared in
  // this unit.
  std::optional<std::string> qualified_constant_name(TokenSpan op) const {
    if ((op.last - op.first) % 2 != 0) return std::nullopt;
    for (std::size_t i = op.first; i <= op.last; ++i) {
      const bool want_ident = (i - op.first) % 2 == 0;
      if (want_ident ? !(t_[i].is_identifier() || t_[i].is("this")) : !t_[i].is(".")) {
        return std::nullopt;
      }
    }
    const std::string& owner = t_[op.last - 2].text;
    const std::string& name = t_[op.last].text;
    if (owner != "this") {
      bool declared_here = false;
      for (const TypeDecl& td : unit_.type_decls) {
        if (td.simple_name == owner) declared_here = true;
      }
      if (!declared_here) return std::nullopt;
    }
    if (unit_.string_constants.count(name) == 0) return std::nullopt;
    return name;
  }

  void operand(TokenSpan op, RenderedMessage& out, int depth) {
    const Token& first = t_[op.first];
    if (op.first == op.last) {
      switch (first.kind) {
        case TokenKind::StringLiteral:
        case TokenKind::TextBlock:
        case TokenKind::CharLiteral:
        case TokenKind::NumberLiteral:
          out.text += first.text;
          return;
        case TokenKind::Keyword:
          if (first.is_literal()) {
            out.text += first.text;
            return;
          }
          break;
        case TokenKind::Identifier:
          if (first.text == var_) {
            out.variable_kinds.push_back(VariableKind::ExceptionVar);
            return;
          }
          if (auto value = constant_value(first.text, 0)) {
            out.text += *value;
            out.variable_kinds.push_back(VariableKind::StringVar);
            return;
          }
          out.text += kPlaceholder;
          out.variable_kinds.push_back(string_vars_.count(first.text)
                                           ? VariableKind::StringVar
                                           : VariableKind::NonStringVar);
          return;
        default:
          break;
      }
    }
    if (!var_.empty() && first.is_identifier(var_)) {
      // e.getMessage(), e.toString(), e.getClass().getName() ...
      out.variable_kinds.push_back(VariableKind::ExceptionVar);
      return;
    }
    if (auto name = qualified_constant_name(op)) {
      if (auto value = constant_value(*name, 0)) {
        out.text += *value;
        out.variable_kinds.push_back(VariableKind::StringVar);
        return;
      }
    }
    if (first.is("(") && t_[op.last].is(")") && depth < 32) {
      // Parenthesized sub-expression; a cast ends before op.last.
      int d = 0;
      std::size_t close = op.first;
      for (std::size_t i = op.first; i <= op.last; ++i) {
        if (t_[i].is("(")) ++d;
        if (t_[i].is(")") && --d == 0) {
          close = i;
          break;
        }
      }
      if (close == op.last) {
        expression({op.first + 1, op.last - 1}, out, depth + 1);
        return;
      }
    }
    if (is_format_call(t_, op) && depth < 32) {
      const auto args = split_top_level(t_, {op.first + 4, op.last - 1}, ",");
      for (const TokenSpan& a : args) {
        if (is_exactly(t_, a, var_)) {
          out.variable_kinds.push_back(VariableKind::ExceptionVar);
        } else {
          expression(a, out, depth + 1);
        }
      }
      return;
    }
    if (references(t_, op, var_)) {
      out.variable_kinds.push_back(VariableKind::ExceptionVar);
      return;
    }
    bool call = false;
    for (std::size_t i = op.first; i <= op.last; ++i) {
      if (t_[i].is("(")) call = true;
    }
    out.text += kPlaceholder;
    out.variable_kinds.push_back(call ? VariableKind::CallResult
                                      : VariableKind::NonStringVar);
  }

  const SourceUnit& unit_;
  const std::vector<Token>& t_;
  std::string_view var_;
  std::string_view type_;
  std::set<std::string> string_vars_;
};

struct ReceiverMatcher {
  explicit ReceiverMatcher(std::string pattern) {
    auto flags = std::regex::ECMAScript;
    if (pattern.rfind("(?i)", 0) == 0) {
      pattern.erase(0, 4);
      flags |= std::regex::icase;
    }
    re = std::regex(pattern, flags);
  }
  bool matches(const std::string& name) const { return std::regex_match(name, re); }
  std::regex re;
};

// Start of a receiver chain ending at `end` (`this.log`, `Foo.LOG`,
// `LoggerFactory.getLogger(X.class)`).
std::size_t receiver_start(const std::vector<Token>& t,
                           const std::vector<std::size_t>& match, std::size_t end) {
  std::size_t i = end;
  while (true) {
    if (t[i].is(")") && match[i] != detail::kUnmatched) {
      i = match[i];
      if (i == 0 || !t[i - 1].is_identifier()) return i;
      --i;
    }
    if (i >= 2 && t[i - 1].is(".") &&
        (t[i - 2].is_identifier() || t[i - 2].is("this") || t[i - 2].is(")"))) {
      i -= 2;
      continue;
    }
    return i;
  }
}

}  // namespace

RenderedMessage render_static_text(const SourceUnit& unit,
                                   std::span<const TokenSpan> arguments,
                                   std::string_view catch_variable,
                                   std::string_view enclosing_type) {
  Renderer r(unit, catch_variable, enclosing_type);
  return r.arguments(arguments);
}

ExceptionUsage classify_exception_usage(const SourceUnit& unit,
                                        std::span<const TokenSpan> arguments,
                                        std::string_view catch_variable) {
  if (catch_variable.empty()) return ExceptionUsage::NotApplicable;
  const auto& t = unit.tokens;
  ExceptionUsage best = ExceptionUsage::None;
  for (const TokenSpan& a : arguments) {
    if (is_exactly(t, a, catch_variable)) return ExceptionUsage::FullStackTrace;
    for (std::size_t i = a.first; i <= a.last; ++i) {
      if (!t[i].is_identifier(catch_variable) || (i > 0 && t[i - 1].is("."))) continue;
      // helper(e) rendering the full trace
      if (i >= 2 && t[i - 1].is("(") && t[i - 2].is_identifier() &&
          is_stack_trace_helper(t[i - 2].text) && i + 1 < t.size() && t[i + 1].is(")")) {
        return ExceptionUsage::FullStackTrace;
      }
      best = ExceptionUsage::MessageOnly;
    }
  }
  return best;
}

std::vector<TokenSpan> call_arguments(const SourceUnit& unit, std::size_t open_paren) {
  const auto& t = unit.tokens;
  int depth = 0;
  std::size_t close = open_paren;
  for (std::size_t i = open_paren; i < t.size(); ++i) {
    if (t[i].is("(") || t[i].is("[") || t[i].is("{")) ++depth;
    if ((t[i].is(")") || t[i].is("]") || t[i].is("}")) && --depth == 0) {
      close = i;
      break;
    }
  }
  if (close <= open_paren + 1) return {};
  return split_top_level(t, {open_paren + 1, close - 1}, ",");
}

namespace {

struct CallSite {
  std::size_t method_token;
  std::size_t receiver_first;
  std::size_t close_paren;
  LogLevel level;
};

std::vector<CallSite> find_logging_calls(const SourceUnit& unit, const LoggerConfig& config,
                                         const std::vector<std::size_t>& match) {
  static thread_local std::string cached_pattern;
  static thread_local std::optional<ReceiverMatcher> matcher;
  if (!matcher || cached_pattern != config.receiver_pattern) {
    matcher.emplace(config.receiver_pattern);
    cached_pattern = config.receiver_pattern;
  }
  const auto& t = unit.tokens;
  std::vector<CallSite> calls;
  for (std::size_t i = 2; i + 1 < t.size(); ++i) {
    if (!t[i].is_identifier() || !t[i - 1].is(".") || !t[i + 1].is("(")) continue;
    auto level = config.method_levels.find(t[i].text);
    if (level == config.method_levels.end()) continue;
    const Token& receiver = t[i - 2];
    if (receiver.is_identifier()) {
      if (!matcher->matches(receiver.text)) continue;
    } else if (!receiver.is(")")) {
      continue;  // `this.error(...)`, literals, array elements
    }
    const std::size_t close = match[i + 1];
    if (close == detail::kUnmatched) continue;
    calls.push_back({i, receiver_start(t, match, i - 2), close, level->second});
  }
  return calls;
}

// Whether `var` is passed as a whole argument to a call or constructor that
// is not one of the logging calls.
bool forwards_variable(const SourceUnit& unit, const CodeBlock& block,
                       std::string_view var, const std::vector<CallSite>& logging,
                       const std::vector<std::size_t>& match) {
  if (var.empty()) return false;
  const auto& t = unit.tokens;
  for (std::size_t i = block.span.first; i <= block.span.last; ++i) {
    if (!t[i].is_identifier(var) || t[i - 1].is(".")) continue;
    if (!(t[i - 1].is("(") || t[i - 1].is(","))) continue;
    if (!(t[i + 1].is(")") || t[i + 1].is(","))) continue;
    std::size_t open = i - 1;
    while (open > block.span.first &&
           !(t[open].is("(") && match[open] != detail::kUnmatched && match[open] > i)) {
      --open;
    }
    if (!t[open].is("(") || open == 0) continue;
    const Token& callee = t[open - 1];
    if (!(callee.is_identifier() || callee.is(">") || callee.is("super") ||
          callee.is("this"))) {
      continue;
    }
    const bool in_logging = std::any_of(logging.begin(), logging.end(), [&](const CallSite& c) {
      return c.receiver_first <= open && open <= c.close_paren;
    });
    if (!in_logging) return true;
  }
  return false;
}

}  // namespace

std::vector<LoggingStatement> extract_logging_statements(const SourceUnit& unit,
                                                         const LoggerConfig& config,
                                                         std::uint32_t unit_index) {
  const auto match = detail::bracket_matches(unit.tokens);
  const auto calls = find_logging_calls(unit, config, match);
  std::vector<LoggingStatement> out;
  out.reserve(calls.size());
  for (const CallSite& c : calls) {
    LoggingStatement s;
    s.file_path = unit.file_path;
    s.level = c.level;
    const Token& receiver = unit.tokens[c.method_token - 2];
    s.line = receiver.is_identifier() ? receiver.line : unit.tokens[c.method_token].line;
    s.call = {c.receiver_first, c.close_paren};
    s.statement = unit.statement_at(c.method_token).value_or(s.call);

    if (const TypeDecl* type = unit.enclosing_type(c.method_token)) {
      s.enclosing_type = type->qualified_name;
      s.enclosing_type_simple = type->simple_name;
    }
    if (const MethodDecl* m = unit.enclosing_method(c.method_token)) {
      s.enclosing_method = m->signature();
      s.method_name = m->name;
    }
    const std::uint32_t block = unit.innermost_block(c.method_token);
    if (block != kNoBlock) s.enclosing_block = BlockId{unit_index, block};

    std::string_view catch_var;
    const std::uint32_t catch_blk = block == kNoBlock ? kNoBlock : unit.enclosing_catch(block);
    if (catch_blk != kNoBlock) {
      const CodeBlock& cb = unit.blocks[catch_blk];
      catch_var = cb.catch_variable;
      s.in_catch_of = cb.caught_exception_types;
      s.catch_block = BlockId{unit_index, catch_blk};
      s.catch_forwards_exception = forwards_variable(unit, cb, catch_var, calls, match);
    }

    const auto args = call_arguments(unit, c.method_token + 1);
    RenderedMessage rendered = render_static_text(unit, args, catch_var, s.enclosing_type);
    s.static_text = std::move(rendered.text);
    s.logged_variable_kinds = std::move(rendered.variable_kinds);
    s.exception_usage = catch_blk == kNoBlock
                            ? ExceptionUsage::NotApplicable
                            : classify_exception_usage(unit, args, catch_var);
    out.push_back(std::move(s));
  }
  return out;
}

std::vector<LoggingStatement> extract_corpus_statements(const Corpus& corpus,
                                                        const LoggerConfig& config,
                                                        unsigned threads) {
  std::vector<std::vector<LoggingStatement>> per_unit(corpus.units().size());
  detail::parallel_for(per_unit.size(), threads, [&](std::size_t u) {
    per_unit[u] = extract_logging_statements(corpus.unit(static_cast<std::uint32_t>(u)),
                                             config, static_cast<std::uint32_t>(u));
  });
  std::vector<LoggingStatement> all;
  for (auto& v : per_unit) {
    for (auto& s : v) all.push_back(std::move(s));
  }
  std::stable_sort(all.begin(), all.end(), [](const LoggingStatement& a, const LoggingStatement& b) {
    if (a.file_path != b.file_path) return a.file_path < b.file_path;
    if (a.line != b.line) return a.line < b.line;
    return a.call.first < b.call.first;
  });
  for (std::size_t i = 0; i < all.size(); ++i) all[i].id = static_cast<std::uint32_t>(i);
  return all;
}

}  // namespace logdup
