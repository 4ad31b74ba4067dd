#pragma once

#include <compare>
#include <map>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "logdup/source_model.hpp"

namespace logdup {

struct MethodKey {
  std::string type;       // qualified type name
  std::string signature;  // name(T1,T2)

  auto operator<=>(const MethodKey&) const = default;
};

enum class OverrideRelation : std::uint8_t { ParentChild, Sibling };

struct OverrideLink {
  OverrideRelation relation;
  // Parent type for ParentChild links; the shared direct supertype for
  // Sibling links.
  std::string via;
};

struct InheritanceGraph {
  // Every declared type plus every unresolved supertype name.
  std::set<std::string> nodes;
  std::set<std::string> external_nodes;
  // child -> parent
  std::set<std::pair<std::string, std::string>> extends_edges;
  std::set<std::pair<std::string, std::string>> implements_edges;
  // Symmetric and irreflexive.
  std::map<MethodKey, std::map<MethodKey, OverrideLink>> override_map;

  std::vector<std::string> direct_supertypes(const std::string& type) const;
  const OverrideLink* link(const MethodKey& a, const MethodKey& b) const;
};

// Supertype names are resolved syntactically (nested scope, same file,
// single-type imports, same package, unique simple name). Names that do not
// resolve become external leaf nodes keyed by the import or the written name.
// Anonymous and local classes never take part.
InheritanceGraph build_inheritance_graph(const Corpus& corpus);

}  // namespace logdup
