#include "logdup/inheritance.hpp"

#include <unordered_map>

namespace logdup {

namespace {

std::string last_segment(const std::string& name) {
  const auto dot = name.rfind('.');
  return dot == std::string::npos ? name : name.substr(dot + 1);
}

std::string first_segment(const std::string& name) {
  const auto dot = name.find('.');
  return dot == std::string::npos ? name : name.substr(0, dot);
}

class Resolver {
 public:
  explicit Resolver(const Corpus& corpus) {
    for (const SourceUnit& unit : corpus.units()) {
      for (const TypeDecl& t : unit.type_decls) {
        declared_.insert(t.qualified_name);
        by_simple_[t.simple_name].push_back(t.qualified_name);
      }
    }
  }

  bool declared(const std::string& name) const { return declared_.count(name) > 0; }

  std::string resolve(const std::string& written, const TypeDecl& from,
                      const SourceUnit& unit) const {
    // Enclosing scopes: Outer.Inner.X, Outer.X, pkg.X
    std::string scope = from.qualified_name;
    while (!scope.empty()) {
      const std::string candidate = scope + "." + written;
      if (declared(candidate)) return candidate;
      const auto dot = scope.rfind('.');
      scope = dot == std::string::npos ? "" : scope.substr(0, dot);
    }
    if (declared(written)) return written;

    const std::string head = first_segment(written);
    for (const std::string& imp : unit.imports) {
      if (last_segment(imp) != head) continue;
      const std::string qualified =
          imp + written.substr(head.size());  // keeps .Inner suffix
      return qualified;
    }
    for (const TypeDecl& t : unit.type_decls) {
      if (t.simple_name == written) return t.qualified_name;
    }
    if (written.find('.') == std::string::npos) {
      auto it = by_simple_.find(written);
      if (it != by_simple_.end() && it->second.size() == 1) return it->second.front();
    }
    return written;
  }

 private:
  std::set<std::string> declared_;
  std::unordered_map<std::string, std::vector<std::string>> by_simple_;
};

bool overridable(const MethodDecl& m) { return !m.name.empty() && m.name[0] != '<'; }

}  // namespace

std::vector<std::string> InheritanceGraph::direct_supertypes(const std::string& type) const {
  std::vector<std::string> out;
  for (auto it = extends_edges.lower_bound({type, ""});
       it != extends_edges.end() && it->first == type; ++it) {
    out.push_back(it->second);
  }
  for (auto it = implements_edges.lower_bound({type, ""});
       it != implements_edges.end() && it->first == type; ++it) {
    out.push_back(it->second);
  }
  return out;
}

const OverrideLink* InheritanceGraph::link(const MethodKey& a, const MethodKey& b) const {
  auto it = override_map.find(a);
  if (it == override_map.end()) return nullptr;
  auto jt = it->second.find(b);
  return jt == it->second.end() ? nullptr : &jt->second;
}

InheritanceGraph build_inheritance_graph(const Corpus& corpus) {
  InheritanceGraph g;
  Resolver resolver(corpus);

  std::map<std::string, const TypeDecl*> types;
  for (const SourceUnit& unit : corpus.units()) {
    for (const TypeDecl& t : unit.type_decls) {
      types.emplace(t.qualified_name, &t);
      g.nodes.insert(t.qualified_name);
    }
  }
  for (const SourceUnit& unit : corpus.units()) {
    for (const TypeDecl& t : unit.type_decls) {
      auto add = [&](const std::vector<std::string>& names, auto& edges) {
        for (const std::string& written : names) {
          const std::string target = resolver.resolve(written, t, unit);
          if (target == t.qualified_name) continue;
          if (!resolver.declared(target)) {
            g.external_nodes.insert(target);
            g.nodes.insert(target);
          }
          edges.insert({t.qualified_name, target});
        }
      };
      add(t.extends_names, g.extends_edges);
      add(t.implements_names, g.implements_edges);
    }
  }

  auto link = [&](const TypeDecl& a, const TypeDecl& b, const OverrideLink& how) {
    for (const MethodDecl& ma : a.methods) {
      if (!overridable(ma)) continue;
      const std::string sig = ma.signature();
      for (const MethodDecl& mb : b.methods) {
        if (!overridable(mb) || mb.signature() != sig) continue;
        MethodKey ka{a.qualified_name, sig};
        MethodKey kb{b.qualified_name, sig};
        g.override_map[ka].emplace(kb, how);
        g.override_map[kb].emplace(ka, how);
      }
    }
  };

  // parent <-> child
  std::map<std::string, std::vector<const TypeDecl*>> children;
  for (const auto& [name, decl] : types) {
    for (const std::string& super : g.direct_supertypes(name)) {
      children[super].push_back(decl);
      auto parent = types.find(super);
      if (parent != types.end()) {
        link(*decl, *parent->second, {OverrideRelation::ParentChild, super});
      }
    }
  }
  // siblings sharing a direct supertype
  for (const auto& [super, kids] : children) {
    for (std::size_t i = 0; i < kids.size(); ++i) {
      for (std::size_t j = i + 1; j < kids.size(); ++j) {
        if (kids[i] == kids[j]) continue;
        link(*kids[i], *kids[j], {OverrideRelation::Sibling, super});
      }
    }
  }
  return g;
}

}  // namespace logdup
