#pragma once

#include <compare>
#include <cstdint>
#include <limits>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "logdup/java_lexer.hpp"

namespace logdup {

enum class BlockKind : std::uint8_t {
  Method,
  Try,
  Catch,
  Finally,
  If,
  Else,
  For,
  While,
  SwitchCase,
  Anonymous,
};

std::string_view to_string(BlockKind kind);

inline constexpr std::uint32_t kNoBlock = std::numeric_limits<std::uint32_t>::max();

// Inclusive token span [first, last] inside the owning unit's token vector.
struct TokenSpan {
  std::size_t first = 0;
  std::size_t last = 0;

  bool contains(std::size_t index) const { return first <= index && index <= last; }
  bool contains(const TokenSpan& other) const {
    return first <= other.first && other.last <= last;
  }
};

struct CodeBlock {
  std::uint32_t index = 0;  // position in SourceUnit::blocks
  BlockKind kind = BlockKind::Method;
  int start_line = 0;
  int end_line = 0;
  std::uint32_t parent = kNoBlock;
  // Catch blocks only: one entry per alternative of a multi-catch.
  std::vector<std::string> caught_exception_types;
  std::string catch_variable;
  TokenSpan span;

  int line_count() const { return end_line - start_line + 1; }
};

struct MethodDecl {
  std::string name;
  std::vector<std::string> parameter_type_names;
  std::uint32_t body_block = kNoBlock;
  std::string enclosing_type;  // qualified name
  bool has_override_marker = false;
  bool is_abstract = false;

  // name(T1,T2), unique among the overloads of the enclosing type.
  std::string signature() const;
};

enum class TypeKind : std::uint8_t { Class, Interface, Enum };

std::string_view to_string(TypeKind kind);

struct TypeDecl {
  std::string qualified_name;
  std::string simple_name;
  TypeKind kind = TypeKind::Class;
  std::vector<std::string> extends_names;
  std::vector<std::string> implements_names;
  std::vector<MethodDecl> methods;
  bool is_abstract = false;
  TokenSpan body;  // braces of the type body
};

struct ParseDiagnostic {
  int line;
  std::string message;
};

// A `static final String NAME = <initializer>;` declaration. The initializer
// is kept as a token span; folding happens during log rendering.
struct StringConstant {
  std::string owner_type;  // qualified name of the declaring type
  TokenSpan initializer;
};

struct SourceUnit {
  std::string file_path;
  std::string package_name;
  std::vector<std::string> imports;
  std::vector<TypeDecl> type_decls;
  std::vector<ParseDiagnostic> parse_diagnostics;

  std::vector<Token> tokens;
  std::vector<CodeBlock> blocks;
  // Simple statements (expression statements, declarations, returns...),
  // each ending at its `;`.
  std::vector<TokenSpan> statements;
  std::multimap<std::string, StringConstant> string_constants;

  // Innermost block whose span contains the token, or kNoBlock.
  std::uint32_t innermost_block(std::size_t token) const;
  // Innermost simple statement containing the token, if any.
  std::optional<TokenSpan> statement_at(std::size_t token) const;
  // Named type whose body contains the token.
  const TypeDecl* enclosing_type(std::size_t token) const;
  // Named method whose body contains the token. Anonymous and local class
  // bodies belong to the surrounding method.
  const MethodDecl* enclosing_method(std::size_t token) const;
  // Nearest catch ancestor (including the block itself).
  std::uint32_t enclosing_catch(std::uint32_t block) const;
  bool is_ancestor(std::uint32_t ancestor, std::uint32_t block) const;
};

SourceUnit parse_source_unit(std::string path, std::string_view source);

// Global block identity: unit position in the corpus plus local index.
struct BlockId {
  std::uint32_t unit = 0;
  std::uint32_t block = 0;

  auto operator<=>(const BlockId&) const = default;
};

// Units of one scan, sorted by file path. Immutable once built.
class Corpus {
 public:
  Corpus() = default;
  explicit Corpus(std::vector<SourceUnit> units);

  const std::vector<SourceUnit>& units() const { return units_; }
  const SourceUnit& unit(std::uint32_t index) const { return units_.at(index); }
  const CodeBlock& block(BlockId id) const {
    return units_.at(id.unit).blocks.at(id.block);
  }
  const std::string& file_of(BlockId id) const { return units_.at(id.unit).file_path; }
  bool is_ancestor(BlockId ancestor, BlockId block) const;

 private:
  std::vector<SourceUnit> units_;
};

// Every block with at least `min_lines` source lines. Nested blocks are
// listed on their own and stay inside their parent's span.
std::vector<BlockId> enumerate_blocks(const Corpus& corpus, int min_lines);

}  // namespace logdup
