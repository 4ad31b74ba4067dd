#include "logdup/source_model.hpp"

#include <algorithm>
#include <stdexcept>

namespace logdup {

std::string_view to_string(BlockKind kind) {
  switch (kind) {
    case BlockKind::Method: return "method";
    case BlockKind::Try: return "try";
    case BlockKind::Catch: return "catch";
    case BlockKind::Finally: return "finally";
    case BlockKind::If: return "if";
    case BlockKind::Else: return "else";
    case BlockKind::For: return "for";
    case BlockKind::While: return "while";
    case BlockKind::SwitchCase: return "switch-case";
    case BlockKind::Anonymous: return "anonymous";
  }
  return "unknown";
}

std::string_view to_string(TypeKind kind) {
  switch (kind) {
    case TypeKind::Class: return "class";
    case TypeKind::Interface: return "interface";
    case TypeKind::Enum: return "enum";
  }
  return "unknown";
}

std::string MethodDecl::signature() const {
  std::string out = name + "(";
  for (std::size_t i = 0; i < parameter_type_names.size(); ++i) {
    if (i) out += ',';
    out += parameter_type_names[i];
  }
  return out + ")";
}

namespace {

constexpr std::size_t kNone = static_cast<std::size_t>(-1);

bool is_modifier(const Token& t) {
  static constexpr std::string_view kMods[] = {
      "public",   "protected", "private",  "static",       "abstract",
      "final",    "native",    "transient", "volatile",    "strictfp",
      "synchronized", "default"};
  if (t.kind == TokenKind::Keyword) {
    return std::find(std::begin(kMods), std::end(kMods), t.text) != std::end(kMods);
  }
  return false;
}

class Parser {
 public:
  explicit Parser(SourceUnit& unit) : unit_(unit), t_(unit.tokens) {}

  void run() {
    compute_matches();
    std::size_t i = 0;
    const std::size_t n = t_.size();
    while (i < n) {
      if (t_[i].is("package")) {
        i = parse_qualified_directive(i, &unit_.package_name);
      } else if (t_[i].is("import")) {
        std::string imported;
        i = parse_qualified_directive(i, &imported);
        unit_.imports.push_back(std::move(imported));
      } else if (t_[i].is(";")) {
        ++i;
      } else {
        const std::size_t next = try_type_decl(i, "", kNoBlock);
        if (next == kNone) {
          diag(i, "unexpected token '" + t_[i].text + "' at top level");
          i = skip_to_recovery(i);
        } else {
          i = next;
        }
      }
    }
  }

 private:
  // ---- bracket matching -------------------------------------------------

  void compute_matches() {
    match_.assign(t_.size(), kNone);
    std::vector<std::size_t> stack;
    for (std::size_t i = 0; i < t_.size(); ++i) {
      const Token& tok = t_[i];
      if (tok.kind != TokenKind::Punct) continue;
      if (tok.text == "(" || tok.text == "[" || tok.text == "{") {
        stack.push_back(i);
      } else if (tok.text == ")" || tok.text == "]" || tok.text == "}") {
        const char open = tok.text == ")" ? '(' : tok.text == "]" ? '[' : '{';
        // Pop mismatched openers (recovering from unbalanced input).
        while (!stack.empty() && t_[stack.back()].text[0] != open) {
          diag(stack.back(), "unbalanced '" + t_[stack.back()].text + "'");
          stack.pop_back();
        }
        if (stack.empty()) {
          diag(i, "unmatched '" + tok.text + "'");
          continue;
        }
        match_[stack.back()] = i;
        match_[i] = stack.back();
        stack.pop_back();
      }
    }
    for (std::size_t open : stack) {
      diag(open, "unclosed '" + t_[open].text + "'");
    }
  }

  // Closing index for an opener, or the last token when unbalanced.
  std::size_t close_of(std::size_t open) const {
    if (open < match_.size() && match_[open] != kNone) return match_[open];
    return t_.empty() ? 0 : t_.size() - 1;
  }

  // ---- helpers ------------------------------------------------------------

  void diag(std::size_t token, std::string message) {
    const int line = token < t_.size() ? t_[token].line
                                       : (t_.empty() ? 1 : t_.back().line);
    unit_.parse_diagnostics.push_back({line, std::move(message)});
  }

  bool at(std::size_t i, std::string_view s) const {
    return i < t_.size() && t_[i].is(s);
  }

  std::size_t skip_to_recovery(std::size_t i) const {
    while (i < t_.size()) {
      if (t_[i].is(";")) return i + 1;
      if (t_[i].is("{")) return close_of(i) + 1;
      if (t_[i].is("}")) return i + 1;
      ++i;
    }
    return i;
  }

  std::size_t parse_qualified_directive(std::size_t i, std::string* out) {
    ++i;
    while (i < t_.size() && !t_[i].is(";")) {
      if (!t_[i].is("static") || !out->empty()) out->append(t_[i].text);
      ++i;
    }
    return i + 1;
  }

  std::size_t skip_annotation(std::size_t i) const {
    // i at '@'
    ++i;
    if (at(i, "interface")) return i - 1;  // annotation type declaration
    while (i < t_.size() && (t_[i].is_identifier() || t_[i].is("."))) ++i;
    if (at(i, "(")) i = close_of(i) + 1;
    return i;
  }

  // Skips `<...>` starting at i; returns i unchanged when not a type list.
  std::size_t skip_type_args(std::size_t i) const {
    if (!at(i, "<")) return i;
    int depth = 0;
    std::size_t j = i;
    for (; j < t_.size(); ++j) {
      const Token& tok = t_[j];
      if (tok.is("<")) {
        ++depth;
      } else if (tok.is(">")) {
        if (--depth == 0) return j + 1;
      } else if (tok.is(";") || tok.is("{") || tok.is("}") || tok.is("(") ||
                 tok.is(")") || tok.is("=") || tok.is("&&") || tok.is("||")) {
        return i;
      }
    }
    return i;
  }

  struct Modifiers {
    bool is_abstract = false;
    bool is_static = false;
    bool is_final = false;
    bool has_override = false;
    std::size_t first_non_annotation = kNone;
  };

  std::size_t skip_modifiers(std::size_t i, Modifiers* mods) const {
    while (i < t_.size()) {
      if (t_[i].is("@") && !at(i + 1, "interface")) {
        if (t_[i + 1].is_identifier("Override")) mods->has_override = true;
        i = skip_annotation(i);
      } else if (t_[i].is_identifier("non") && at(i + 1, "-") &&
                 i + 2 < t_.size() && t_[i + 2].is_identifier("sealed")) {
        i += 3;
      } else if (t_[i].is_identifier("sealed") && i + 1 < t_.size() &&
                 (t_[i + 1].kind == TokenKind::Keyword || t_[i + 1].is_identifier())) {
        ++i;
      } else if (is_modifier(t_[i]) &&
                 !(t_[i].is("synchronized") && at(i + 1, "(")) &&
                 !(t_[i].is("default") && (at(i + 1, ":") || at(i + 1, "->")))) {
        if (mods->first_non_annotation == kNone) mods->first_non_annotation = i;
        if (t_[i].is("abstract")) mods->is_abstract = true;
        if (t_[i].is("static")) mods->is_static = true;
        if (t_[i].is("final")) mods->is_final = true;
        ++i;
      } else {
        break;
      }
    }
    return i;
  }

  // Type name as written, generics dropped: `java.util.Map<K,V>[]` -> Map[].
  std::string simple_type_name(std::size_t first, std::size_t last) const {
    std::string name;
    std::string dims;
    for (std::size_t i = first; i <= last && i < t_.size(); ++i) {
      const Token& tok = t_[i];
      if (tok.is("<")) {
        const std::size_t after = skip_type_args(i);
        if (after == i) break;
        i = after - 1;
      } else if (tok.is("@")) {
        i = skip_annotation(i) - 1;
      } else if (tok.is("[")) {
        dims += "[]";
        ++i;
      } else if (tok.is("...")) {
        dims += "[]";
      } else if (tok.is(".")) {
        name.clear();
      } else if (tok.is_identifier() || tok.kind == TokenKind::Keyword) {
        if (tok.is("final")) continue;
        name = tok.text;
      }
    }
    return name + dims;
  }

  std::string qualified_type_name(std::size_t first, std::size_t end) const {
    std::string name;
    for (std::size_t i = first; i < end; ++i) {
      if (t_[i].is("<")) {
        const std::size_t after = skip_type_args(i);
        if (after == i) break;
        i = after - 1;
      } else if (t_[i].is("@")) {
        i = skip_annotation(i) - 1;
      } else if (t_[i].is_identifier() || t_[i].is(".")) {
        name += t_[i].text;
      }
    }
    return name;
  }

  std::uint32_t open_block(BlockKind kind, std::size_t first, std::uint32_t parent) {
    CodeBlock block;
    block.index = static_cast<std::uint32_t>(unit_.blocks.size());
    block.kind = kind;
    block.parent = parent;
    block.span = {first, first};
    block.start_line = t_[first].line;
    block.end_line = t_[first].line;
    unit_.blocks.push_back(std::move(block));
    return unit_.blocks.back().index;
  }

  void close_block(std::uint32_t id, std::size_t last) {
    last = std::min(last, t_.size() - 1);
    CodeBlock& block = unit_.blocks[id];
    block.span.last = std::max(last, block.span.first);
    block.end_line = t_[block.span.last].line;
  }

  // ---- declarations -------------------------------------------------------

  static bool is_type_keyword(const Token& tok) {
    return tok.is("class") || tok.is("interface") || tok.is("enum");
  }

  bool is_record_header(std::size_t i) const {
    return i + 2 < t_.size() && t_[i].is_identifier("record") &&
           t_[i + 1].is_identifier() && (t_[i + 2].is("(") || t_[i + 2].is("<"));
  }

  // Parses a (possibly nested) named type declaration starting at i
  // (modifiers included). Returns the index after it, or kNone if the
  // tokens at i do not start a type declaration.
  std::size_t try_type_decl(std::size_t i, const std::string& outer,
                            std::uint32_t anon_parent) {
    Modifiers mods;
    std::size_t k = skip_modifiers(i, &mods);
    TypeKind kind;
    if (at(k, "@") && at(k + 1, "interface")) {
      kind = TypeKind::Interface;
      k += 2;
    } else if (at(k, "class")) {
      kind = TypeKind::Class;
      ++k;
    } else if (at(k, "interface")) {
      kind = TypeKind::Interface;
      ++k;
    } else if (at(k, "enum")) {
      kind = TypeKind::Enum;
      ++k;
    } else if (is_record_header(k)) {
      kind = TypeKind::Class;
      ++k;
    } else {
      return kNone;
    }
    if (k >= t_.size() || !t_[k].is_identifier()) {
      diag(k, "expected type name");
      return skip_to_recovery(k);
    }
    const std::string name = t_[k].text;
    ++k;
    k = skip_type_args(k);
    if (at(k, "(")) k = close_of(k) + 1;  // record components

    TypeDecl decl;
    decl.simple_name = name;
    decl.kind = kind;
    decl.is_abstract = mods.is_abstract || kind == TypeKind::Interface;
    if (!outer.empty()) {
      decl.qualified_name = outer + "." + name;
    } else if (!unit_.package_name.empty()) {
      decl.qualified_name = unit_.package_name + "." + name;
    } else {
      decl.qualified_name = name;
    }

    std::vector<std::string>* clause = nullptr;
    std::size_t clause_start = k;
    auto flush = [&](std::size_t end) {
      if (clause && end > clause_start) {
        const std::string n = qualified_type_name(clause_start, end);
        if (!n.empty()) clause->push_back(n);
      }
    };
    while (k < t_.size() && !t_[k].is("{") && !t_[k].is(";") && !t_[k].is("}")) {
      if (t_[k].is("extends") || t_[k].is("implements") ||
          t_[k].is_identifier("permits")) {
        flush(k);
        if (t_[k].is("extends")) {
          // An interface's `extends` list names interfaces; keep them as
          // supertypes either way.
          clause = &decl.extends_names;
        } else if (t_[k].is("implements")) {
          clause = &decl.implements_names;
        } else {
          clause = nullptr;
        }
        clause_start = k + 1;
      } else if (t_[k].is(",")) {
        flush(k);
        clause_start = k + 1;
      } else if (t_[k].is("<")) {
        const std::size_t after = skip_type_args(k);
        k = after == k ? k : after - 1;
      }
      ++k;
    }
    flush(k);
    if (!at(k, "{")) {
      diag(k, "expected type body for " + name);
      return skip_to_recovery(k);
    }
    const std::size_t close = close_of(k);
    decl.body = {k, close};

    if (anon_parent != kNoBlock) {
      // Local type inside a method body: treated like an anonymous body.
      const std::uint32_t blk = open_block(BlockKind::Anonymous, i, anon_parent);
      parse_class_body(k, close, nullptr, kind == TypeKind::Enum, blk);
      close_block(blk, close);
      return close + 1;
    }

    const std::size_t index = unit_.type_decls.size();
    unit_.type_decls.push_back(std::move(decl));
    parse_class_body(k, close, &index, kind == TypeKind::Enum, kNoBlock);
    return close + 1;
  }

  // Parses members between braces [open, close]. For named types
  // `type_index` is set; for anonymous/local bodies `anon_block` receives
  // every nested statement.
  void parse_class_body(std::size_t open, std::size_t close,
                        const std::size_t* type_index, bool is_enum,
                        std::uint32_t anon_block) {
    std::size_t k = open + 1;
    if (is_enum) k = parse_enum_constants(k, close, anon_block);
    while (k < close) {
      if (t_[k].is(";")) {
        ++k;
        continue;
      }
      const std::size_t member_start = k;
      Modifiers mods;
      k = skip_modifiers(k, &mods);
      if (k >= close) break;

      if (t_[k].is("{")) {  // initializer block
        const std::size_t end = close_of(k);
        if (type_index) {
          MethodDecl m;
          m.name = mods.is_static ? "<clinit>" : "<init>";
          m.enclosing_type = unit_.type_decls[*type_index].qualified_name;
          m.body_block = open_block(BlockKind::Method, member_start, kNoBlock);
          parse_statements(k + 1, end, m.body_block);
          close_block(m.body_block, end);
          unit_.type_decls[*type_index].methods.push_back(std::move(m));
        } else {
          parse_statements(k + 1, end, anon_block);
        }
        k = end + 1;
        continue;
      }

      if (is_type_keyword(t_[k]) || (t_[k].is("@") && at(k + 1, "interface")) ||
          is_record_header(k)) {
        const std::string outer =
            type_index ? unit_.type_decls[*type_index].qualified_name : "";
        const std::size_t next =
            try_type_decl(member_start, outer, type_index ? kNoBlock : anon_block);
        k = next == kNone ? skip_to_recovery(k) : next;
        continue;
      }

      k = parse_member(member_start, k, close, mods, type_index, anon_block);
    }
  }

  std::size_t parse_enum_constants(std::size_t k, std::size_t close,
                                   std::uint32_t anon_block) {
    while (k < close) {
      if (t_[k].is("@")) {
        k = skip_annotation(k);
        continue;
      }
      if (t_[k].is(";")) return k + 1;
      if (t_[k].is(",")) {
        ++k;
        continue;
      }
      if (!t_[k].is_identifier()) return k;
      const std::size_t constant = k++;
      if (at(k, "(")) {
        scan_expression(k + 1, close_of(k), anon_block);
        k = close_of(k) + 1;
      }
      if (at(k, "{")) {
        const std::size_t end = close_of(k);
        const std::uint32_t blk = open_block(BlockKind::Anonymous, constant, anon_block);
        parse_class_body(k, end, nullptr, false, blk);
        close_block(blk, end);
        k = end + 1;
      }
    }
    return k;
  }

  std::size_t parse_member(std::size_t member_start, std::size_t k, std::size_t close,
                           const Modifiers& mods, const std::size_t* type_index,
                           std::uint32_t anon_block) {
    const std::size_t header_start = k;
    k = skip_type_args(k);  // generic method type parameters
    std::size_t j = k;
    while (j < close) {
      const Token& tok = t_[j];
      if (tok.is("(") || tok.is("=") || tok.is(";") || tok.is("{") || tok.is("}")) break;
      if (tok.is("<")) {
        const std::size_t after = skip_type_args(j);
        j = after == j ? j + 1 : after;
        continue;
      }
      if (tok.is("[")) {
        j = close_of(j) + 1;
        continue;
      }
      if (tok.is("@")) {
        j = skip_annotation(j);
        continue;
      }
      ++j;
    }
    if (j >= close) {
      diag(member_start, "incomplete member declaration");
      return close;
    }

    if (t_[j].is("(") && j > header_start && t_[j - 1].is_identifier()) {
      return parse_method(member_start, header_start, j, close, mods, type_index,
                          anon_block);
    }
    if (t_[j].is("=") || t_[j].is(";")) {
      return parse_field(header_start, j, close, mods, type_index, anon_block);
    }
    diag(j, "unrecognized member near '" + t_[j].text + "'");
    return skip_to_recovery(j);
  }

  std::size_t parse_method(std::size_t member_start, std::size_t header_start,
                           std::size_t paren, std::size_t close, const Modifiers& mods,
                           const std::size_t* type_index, std::uint32_t anon_block) {
    MethodDecl m;
    m.name = t_[paren - 1].text;
    m.has_override_marker = mods.has_override;
    m.is_abstract = mods.is_abstract;
    const std::size_t paren_close = close_of(paren);
    m.parameter_type_names = parameter_types(paren + 1, paren_close);

    std::size_t k = paren_close + 1;
    while (k < close && !t_[k].is("{") && !t_[k].is(";")) {
      if (t_[k].is("(")) k = close_of(k);
      ++k;
    }
    const std::size_t block_first =
        mods.first_non_annotation != kNone ? mods.first_non_annotation : header_start;
    (void)member_start;
    if (at(k, "{")) {
      const std::size_t end = close_of(k);
      if (type_index) {
        m.enclosing_type = unit_.type_decls[*type_index].qualified_name;
        m.body_block = open_block(BlockKind::Method, block_first, kNoBlock);
        parse_statements(k + 1, end, m.body_block);
        close_block(m.body_block, end);
        unit_.type_decls[*type_index].methods.push_back(std::move(m));
      } else {
        parse_statements(k + 1, end, anon_block);
      }
      return end + 1;
    }
    if (type_index) {
      m.enclosing_type = unit_.type_decls[*type_index].qualified_name;
      if (unit_.type_decls[*type_index].kind == TypeKind::Interface) m.is_abstract = true;
      unit_.type_decls[*type_index].methods.push_back(std::move(m));
    }
    return k + 1;
  }

  std::vector<std::string> parameter_types(std::size_t first, std::size_t end) const {
    std::vector<std::string> types;
    std::size_t start = first;
    int angle = 0;
    for (std::size_t i = first; i <= end; ++i) {
      if (i < end && t_[i].is("<")) ++angle;
      if (i < end && t_[i].is(">")) --angle;
      if (i < end && (t_[i].is("(") || t_[i].is("["))) {
        i = close_of(i);
        continue;
      }
      if (i == end || (angle == 0 && t_[i].is(","))) {
        if (i > start) {
          // Drop the parameter name (last identifier) and trailing dims.
          std::size_t last = i - 1;
          std::string dims;
          while (last > start && t_[last].is("]")) {
            dims += "[]";
            last -= 2;
          }
          if (last > start && t_[last].is_identifier()) {
            std::string type = simple_type_name(start, last - 1);
            if (type.empty() && t_[last].is_identifier("this")) type = "this";
            if (!type.empty()) types.push_back(type + dims);
          }
        }
        start = i + 1;
      }
    }
    return types;
  }

  std::size_t parse_field(std::size_t header_start, std::size_t j, std::size_t close,
                          const Modifiers& mods, const std::size_t* type_index,
                          std::uint32_t anon_block) {
    // header_start .. j-1 : type + first name
    const bool is_string = j >= header_start + 2 &&
                           simple_type_name(header_start, j - 2) == "String";
    const bool is_constant = mods.is_static && mods.is_final && is_string;
    std::size_t k = j;
    std::string current = j > header_start ? t_[j - 1].text : "";
    while (k < close) {
      if (t_[k].is(";")) return k + 1;
      if (t_[k].is("=")) {
        const std::size_t init_start = k + 1;
        const std::size_t init_end = scan_expression(init_start, close, anon_block, true);
        const bool ends_statement = init_end > init_start && t_[init_end - 1].is(";");
        const std::size_t init_last = init_end - (ends_statement ? 2 : 1);
        if (is_constant && type_index && init_last + 1 > init_start) {
          unit_.string_constants.emplace(
              current, StringConstant{unit_.type_decls[*type_index].qualified_name,
                                      {init_start, init_last}});
        }
        if (ends_statement) return init_end;
        k = init_end;
        continue;
      }
      if (t_[k].is(",")) {
        if (k + 1 < close && t_[k + 1].is_identifier()) current = t_[k + 1].text;
        ++k;
        continue;
      }
      ++k;
    }
    return close;
  }

  // ---- statements ---------------------------------------------------------

  void parse_statements(std::size_t i, std::size_t end, std::uint32_t parent) {
    while (i < end) {
      const std::size_t next = parse_statement(i, end, parent);
      i = next > i ? next : i + 1;
    }
  }

  // Returns the index just past the statement starting at i.
  std::size_t parse_statement(std::size_t i, std::size_t end, std::uint32_t parent) {
    if (i >= end) return end;
    const Token& tok = t_[i];
    if (tok.is("{")) {
      const std::size_t close = std::min(close_of(i), end);
      parse_statements(i + 1, close, parent);
      return close + 1;
    }
    if (tok.is(";")) return i + 1;
    if (tok.is("}")) {
      diag(i, "stray '}'");
      return i + 1;
    }
    if (tok.is("try")) return parse_try(i, end, parent);
    if (tok.is("if")) return parse_if(i, end, parent);
    if (tok.is("for") || tok.is("while")) {
      const BlockKind kind = tok.is("for") ? BlockKind::For : BlockKind::While;
      const std::uint32_t blk = open_block(kind, i, parent);
      std::size_t k = i + 1;
      if (at(k, "(")) {
        scan_expression(k + 1, close_of(k), blk);
        k = close_of(k) + 1;
      }
      const std::size_t next = parse_statement(k, end, blk);
      close_block(blk, next - 1);
      return next;
    }
    if (tok.is("do")) {
      const std::uint32_t blk = open_block(BlockKind::While, i, parent);
      std::size_t k = parse_statement(i + 1, end, blk);
      if (at(k, "while") && at(k + 1, "(")) {
        scan_expression(k + 2, close_of(k + 1), blk);
        k = close_of(k + 1) + 1;
        if (at(k, ";")) ++k;
      }
      close_block(blk, k - 1);
      return k;
    }
    if (tok.is("switch") && at(i + 1, "(")) {
      const std::size_t next = parse_switch(i, end, parent);
      return at(next, ";") ? next + 1 : next;
    }
    if (tok.is("synchronized") && at(i + 1, "(")) {
      scan_expression(i + 2, close_of(i + 1), parent);
      return parse_statement(close_of(i + 1) + 1, end, parent);
    }
    if (tok.is("else")) {
      diag(i, "'else' without 'if'");
      return i + 1;
    }
    if (tok.is_identifier() && at(i + 1, ":") && !at(i + 2, ":")) {
      return parse_statement(i + 2, end, parent);  // labeled statement
    }
    {
      Modifiers mods;
      const std::size_t k = skip_modifiers(i, &mods);
      if (k < end && (is_type_keyword(t_[k]) || is_record_header(k))) {
        const std::size_t next = try_type_decl(i, "", parent);
        if (next != kNone) return next;
      }
    }
    const std::size_t stop = scan_expression(i, end, parent, true);
    if (stop > i) unit_.statements.push_back({i, std::min(stop, end) - 1});
    return stop;
  }

  std::size_t parse_try(std::size_t i, std::size_t end, std::uint32_t parent) {
    const std::uint32_t try_blk = open_block(BlockKind::Try, i, parent);
    std::size_t k = i + 1;
    if (at(k, "(")) {
      scan_expression(k + 1, close_of(k), try_blk);
      k = close_of(k) + 1;
    }
    std::size_t last = k;
    if (at(k, "{")) {
      last = std::min(close_of(k), end);
      parse_statements(k + 1, last, try_blk);
      k = last + 1;
    } else {
      diag(k, "expected '{' after try");
    }
    while (at(k, "catch") && at(k + 1, "(")) {
      const std::uint32_t catch_blk = open_block(BlockKind::Catch, k, try_blk);
      const std::size_t paren_close = close_of(k + 1);
      parse_catch_header(k + 2, paren_close, catch_blk);
      k = paren_close + 1;
      if (at(k, "{")) {
        last = std::min(close_of(k), end);
        parse_statements(k + 1, last, catch_blk);
        k = last + 1;
      }
      close_block(catch_blk, last);
    }
    if (at(k, "finally") && at(k + 1, "{")) {
      const std::uint32_t fin_blk = open_block(BlockKind::Finally, k, try_blk);
      last = std::min(close_of(k + 1), end);
      parse_statements(k + 2, last, fin_blk);
      close_block(fin_blk, last);
      k = last + 1;
    }
    close_block(try_blk, last);
    return k;
  }

  void parse_catch_header(std::size_t first, std::size_t end, std::uint32_t blk) {
    CodeBlock& block = unit_.blocks[blk];
    std::size_t start = first;
    std::size_t var = kNone;
    for (std::size_t i = first; i < end; ++i) {
      if (t_[i].is("@")) {
        i = skip_annotation(i) - 1;
        start = i + 1;
      } else if (t_[i].is("final")) {
        start = i + 1;
      }
    }
    // Last identifier is the variable; the rest are `|`-separated types.
    if (end > first && t_[end - 1].is_identifier()) var = end - 1;
    const std::size_t types_end = var == kNone ? end : var;
    std::size_t alt = start;
    for (std::size_t i = start; i <= types_end; ++i) {
      if (i == types_end || t_[i].is("|")) {
        if (i > alt) {
          const std::string name = simple_type_name(alt, i - 1);
          if (!name.empty()) block.caught_exception_types.push_back(name);
        }
        alt = i + 1;
      }
    }
    if (var != kNone) block.catch_variable = t_[var].text;
    if (block.caught_exception_types.empty()) {
      diag(first, "catch clause without exception type");
      block.caught_exception_types.push_back("?");
    }
  }

  std::size_t parse_if(std::size_t i, std::size_t end, std::uint32_t parent) {
    const std::uint32_t if_blk = open_block(BlockKind::If, i, parent);
    std::size_t k = i + 1;
    if (at(k, "(")) {
      scan_expression(k + 1, close_of(k), if_blk);
      k = close_of(k) + 1;
    }
    k = parse_statement(k, end, if_blk);
    close_block(if_blk, k - 1);
    if (at(k, "else") && k < end) {
      const std::uint32_t else_blk = open_block(BlockKind::Else, k, parent);
      const std::size_t next = parse_statement(k + 1, end, else_blk);
      close_block(else_blk, next - 1);
      return next;
    }
    return k;
  }

  std::size_t parse_switch(std::size_t i, std::size_t end, std::uint32_t parent) {
    const std::uint32_t blk = open_block(BlockKind::SwitchCase, i, parent);
    std::size_t k = i + 1;
    scan_expression(k + 1, close_of(k), blk);
    k = close_of(k) + 1;
    if (!at(k, "{")) {
      close_block(blk, k - 1);
      return k;
    }
    const std::size_t close = std::min(close_of(k), std::max(end, k));
    k += 1;
    while (k < close) {
      if (t_[k].is("case") || (t_[k].is("default") && (at(k + 1, ":") || at(k + 1, "->")))) {
        // Label runs until a top-level ':' or '->'.
        std::size_t j = k + 1;
        while (j < close && !t_[j].is(":") && !t_[j].is("->")) {
          if (t_[j].is("(") || t_[j].is("[") || t_[j].is("{")) j = close_of(j);
          ++j;
        }
        k = j + 1;
        continue;
      }
      const std::size_t next = parse_statement(k, close, blk);
      k = next > k ? next : k + 1;
    }
    close_block(blk, close);
    return close + 1;
  }

  // Walks an expression from i, registering anonymous class bodies, lambda
  // bodies and switch expressions as blocks. With `stop_at_semicolon`, stops
  // at the first top-level ';' (returning the index past it) or an unmatched
  // '}' (returning its index); otherwise scans to `end`.
  std::size_t scan_expression(std::size_t i, std::size_t end, std::uint32_t parent,
                              bool stop_at_semicolon = false) {
    while (i < end) {
      const Token& tok = t_[i];
      if (stop_at_semicolon && tok.is(";")) return i + 1;
      if (tok.is("}")) {
        if (stop_at_semicolon) return i;
        ++i;
        continue;
      }
      if (tok.is("(") || tok.is("[")) {
        const std::size_t close = std::min(close_of(i), end);
        scan_expression(i + 1, close, parent);
        i = close + 1;
        continue;
      }
      if (tok.is("new")) {
        i = scan_new(i, end, parent);
        continue;
      }
      if (tok.is("->") && at(i + 1, "{")) {
        const std::size_t close = std::min(close_of(i + 1), end);
        const std::uint32_t blk = open_block(BlockKind::Anonymous, i + 1, parent);
        parse_statements(i + 2, close, blk);
        close_block(blk, close);
        i = close + 1;
        continue;
      }
      if (tok.is("switch") && at(i + 1, "(")) {
        i = parse_switch(i, end, parent);
        continue;
      }
      if (tok.is("{")) {  // array initializer
        const std::size_t close = std::min(close_of(i), end);
        scan_expression(i + 1, close, parent);
        i = close + 1;
        continue;
      }
      ++i;
    }
    return end;
  }

  std::size_t scan_new(std::size_t i, std::size_t end, std::uint32_t parent) {
    const std::size_t new_tok = i;
    std::size_t k = i + 1;
    while (k < end) {
      if (t_[k].is("@")) {
        k = skip_annotation(k);
      } else if (t_[k].is_identifier() || t_[k].is(".") ||
                 t_[k].kind == TokenKind::Keyword) {
        if (t_[k].is("new")) break;
        ++k;
      } else if (t_[k].is("<")) {
        const std::size_t after = skip_type_args(k);
        if (after == k) break;
        k = after;
      } else {
        break;
      }
    }
    if (at(k, "(")) {
      const std::size_t close = std::min(close_of(k), end);
      scan_expression(k + 1, close, parent);
      k = close + 1;
      if (k < end && at(k, "{")) {
        const std::size_t body_close = std::min(close_of(k), end);
        const std::uint32_t blk = open_block(BlockKind::Anonymous, new_tok, parent);
        parse_class_body(k, body_close, nullptr, false, blk);
        close_block(blk, body_close);
        return body_close + 1;
      }
      return k;
    }
    return k > i + 1 ? k : i + 1;
  }

  SourceUnit& unit_;
  const std::vector<Token>& t_;
  std::vector<std::size_t> match_;
};

}  // namespace

SourceUnit parse_source_unit(std::string path, std::string_view source) {
  SourceUnit unit;
  unit.file_path = std::move(path);
  LexResult lexed = lex_java(source);
  unit.tokens = std::move(lexed.tokens);
  for (auto& d : lexed.diagnostics) {
    unit.parse_diagnostics.push_back({d.line, std::move(d.message)});
  }
  if (!unit.tokens.empty()) Parser(unit).run();
  std::sort(unit.statements.begin(), unit.statements.end(),
            [](const TokenSpan& a, const TokenSpan& b) {
              return a.first != b.first ? a.first < b.first : a.last > b.last;
            });
  std::stable_sort(unit.parse_diagnostics.begin(), unit.parse_diagnostics.end(),
                   [](const ParseDiagnostic& a, const ParseDiagnostic& b) {
                     return a.line < b.line;
                   });
  return unit;
}

std::uint32_t SourceUnit::innermost_block(std::size_t token) const {
  std::uint32_t best = kNoBlock;
  for (const CodeBlock& b : blocks) {
    if (!b.span.contains(token)) continue;
    if (best == kNoBlock || blocks[best].span.contains(b.span)) best = b.index;
  }
  return best;
}

std::optional<TokenSpan> SourceUnit::statement_at(std::size_t token) const {
  std::optional<TokenSpan> best;
  for (const TokenSpan& s : statements) {
    if (s.first > token) break;
    if (s.contains(token) && (!best || best->contains(s))) best = s;
  }
  return best;
}

const TypeDecl* SourceUnit::enclosing_type(std::size_t token) const {
  const TypeDecl* best = nullptr;
  for (const TypeDecl& t : type_decls) {
    if (t.body.contains(token) && (!best || best->body.contains(t.body))) best = &t;
  }
  return best;
}

const MethodDecl* SourceUnit::enclosing_method(std::size_t token) const {
  std::uint32_t b = innermost_block(token);
  while (b != kNoBlock && blocks[b].kind != BlockKind::Method) b = blocks[b].parent;
  if (b == kNoBlock) return nullptr;
  for (const TypeDecl& t : type_decls) {
    for (const MethodDecl& m : t.methods) {
      if (m.body_block == b) return &m;
    }
  }
  return nullptr;
}

std::uint32_t SourceUnit::enclosing_catch(std::uint32_t block) const {
  while (block != kNoBlock && blocks[block].kind != BlockKind::Catch) {
    block = blocks[block].parent;
  }
  return block;
}

bool SourceUnit::is_ancestor(std::uint32_t ancestor, std::uint32_t block) const {
  if (block == kNoBlock) return false;
  for (std::uint32_t b = blocks[block].parent; b != kNoBlock; b = blocks[b].parent) {
    if (b == ancestor) return true;
  }
  return false;
}

Corpus::Corpus(std::vector<SourceUnit> units) : units_(std::move(units)) {
  std::sort(units_.begin(), units_.end(),
            [](const SourceUnit& a, const SourceUnit& b) { return a.file_path < b.file_path; });
  for (std::size_t i = 1; i < units_.size(); ++i) {
    if (units_[i].file_path == units_[i - 1].file_path) {
      throw std::invalid_argument("duplicate file path in corpus: " + units_[i].file_path);
    }
  }
}

bool Corpus::is_ancestor(BlockId ancestor, BlockId block) const {
  return ancestor.unit == block.unit &&
         units_.at(block.unit).is_ancestor(ancestor.block, block.block);
}

std::vector<BlockId> enumerate_blocks(const Corpus& corpus, int min_lines) {
  std::vector<BlockId> out;
  for (std::uint32_t u = 0; u < corpus.units().size(); ++u) {
    for (const CodeBlock& b : corpus.unit(u).blocks) {
      if (b.line_count() >= min_lines) out.push_back({u, b.index});
    }
  }
  return out;
}

}  // namespace logdup
