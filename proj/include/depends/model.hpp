#pragma once

// Language-agnostic entity model shared by every frontend and the resolver.

#include <algorithm>
#include <array>
#include <compare>
#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "depends/errors.hpp"

namespace depends {

struct EntityId {
  std::uint32_t value = 0;

  auto operator<=>(const EntityId&) const = default;
};

enum class EntityKind : std::uint8_t { File, Package, Type, Function, Property, Variable, Parameter };

enum class SourceLanguage : std::uint8_t { Kotlin, Java, Builtin };

/// Distinguishes the flavours of Type entities; Extend vs Implement depends on it.
enum class TypeFlavor : std::uint8_t { None, Class, Interface, Enum, Object, Annotation };

inline std::string_view to_string(EntityKind kind) {
  switch (kind) {
    case EntityKind::File: return "File";
    case EntityKind::Package: return "Package";
    case EntityKind::Type: return "Type";
    case EntityKind::Function: return "Function";
    case EntityKind::Property: return "Property";
    case EntityKind::Variable: return "Variable";
    case EntityKind::Parameter: return "Parameter";
  }
  return "?";
}

inline std::string_view to_string(SourceLanguage lang) {
  switch (lang) {
    case SourceLanguage::Kotlin: return "kotlin";
    case SourceLanguage::Java: return "java";
    case SourceLanguage::Builtin: return "builtin";
  }
  return "?";
}

inline std::optional<SourceLanguage> language_from_string(std::string_view text) {
  if (text == "kotlin") return SourceLanguage::Kotlin;
  if (text == "java") return SourceLanguage::Java;
  if (text == "builtin") return SourceLanguage::Builtin;
  return std::nullopt;
}

inline std::string_view to_string(TypeFlavor flavor) {
  switch (flavor) {
    case TypeFlavor::None: return "";
    case TypeFlavor::Class: return "class";
    case TypeFlavor::Interface: return "interface";
    case TypeFlavor::Enum: return "enum";
    case TypeFlavor::Object: return "object";
    case TypeFlavor::Annotation: return "annotation";
  }
  return "";
}

/// Bit set over EntityKind used to filter name lookups.
class KindMask {
 public:
  constexpr KindMask() = default;
  constexpr KindMask(std::initializer_list<EntityKind> kinds) {
    for (auto k : kinds) bits_ |= bit(k);
  }
  static constexpr KindMask all() {
    KindMask m;
    m.bits_ = 0x7f;
    return m;
  }
  constexpr bool contains(EntityKind k) const { return (bits_ & bit(k)) != 0; }
  constexpr KindMask operator|(KindMask other) const {
    KindMask m;
    m.bits_ = bits_ | other.bits_;
    return m;
  }

 private:
  static constexpr std::uint8_t bit(EntityKind k) {
    return static_cast<std::uint8_t>(1u << static_cast<unsigned>(k));
  }
  std::uint8_t bits_ = 0;
};

struct SourceSite {
  std::string file;
  int line = 0;

  auto operator<=>(const SourceSite&) const = default;
};

struct Location {
  std::string file;
  int start_line = 0;
  int end_line = 0;

  bool operator==(const Location&) const = default;
};

/// An occurrence of a type name. Function types keep their components in
/// `signature`: the receiver first when `has_receiver`, then parameters, then
/// the result type.
struct TypeRef {
  std::string raw_name;
  std::optional<EntityId> resolved;
  SourceSite use_site;
  bool is_function = false;
  bool has_receiver = false;
  std::vector<TypeRef> signature;

  const TypeRef* receiver() const { return has_receiver && !signature.empty() ? &signature.front() : nullptr; }
  const TypeRef* result() const { return is_function && !signature.empty() ? &signature.back() : nullptr; }
};

struct Entity {
  EntityId id;
  std::string name;
  std::string qualified_name;
  EntityKind kind = EntityKind::Type;
  SourceLanguage language = SourceLanguage::Kotlin;
  std::optional<EntityId> parent;
  std::optional<Location> location;

  bool is_extension = false;
  std::optional<TypeRef> receiver_type;
  bool is_synthetic = false;
  std::optional<TypeRef> delegates_to;
  std::vector<TypeRef> raw_supertypes;
  std::optional<TypeRef> raw_return_type;
  std::vector<TypeRef> raw_parameter_types;

  TypeFlavor flavor = TypeFlavor::None;
  bool is_mutable = false;
  // Set on synthetic getters/setters: the property they expose.
  std::optional<EntityId> accessor_of;
};

struct ImportDirective {
  std::string path;  // dotted, without the trailing ".*"
  bool wildcard = false;
  bool is_static = false;
  std::string alias;
  int line = 0;

  std::string visible_name() const {
    if (!alias.empty()) return alias;
    auto dot = path.rfind('.');
    return dot == std::string::npos ? path : path.substr(dot + 1);
  }
};

/// Id-indexed forest of every entity in a run, with qualified-name and
/// children indices. Single writer while building; read-only afterwards.
class EntityTree {
 public:
  std::size_t size() const { return entities_.size(); }
  bool contains(EntityId id) const { return id.value < entities_.size(); }

  const Entity& at(EntityId id) const { return entities_.at(id.value); }
  Entity& at(EntityId id) { return entities_.at(id.value); }
  std::span<const Entity> entities() const { return entities_; }

  EntityId intern(Entity proto) {
    if (proto.parent && !contains(*proto.parent)) {
      throw DependsError("intern: parent id " + std::to_string(proto.parent->value) +
                         " is not interned");
    }
    if (proto.qualified_name.empty()) proto.qualified_name = qualify(proto.parent, proto.name);

    if (!proto.is_synthetic && conflicts(proto.kind)) {
      for (EntityId other : find_all_qualified(proto.qualified_name)) {
        const Entity& existing = at(other);
        if (existing.kind == proto.kind) {
          throw DuplicateEntity("duplicate " + std::string(to_string(proto.kind)) + " '" +
                                proto.qualified_name + "' at " + describe(proto.location) +
                                " (first declared at " + describe(existing.location) + ")");
        }
      }
    }

    EntityId id{static_cast<std::uint32_t>(entities_.size())};
    proto.id = id;
    if (!proto.is_synthetic) by_qualified_name_[proto.qualified_name].push_back(id);
    if (proto.parent) children_[proto.parent->value].push_back(id);
    entities_.push_back(std::move(proto));
    return id;
  }

  /// Qualified name a child called `name` gets under `parent`. Top-level
  /// declarations live under their file but are named after its package.
  std::string qualify(std::optional<EntityId> parent, std::string_view name) const {
    if (!parent) return std::string(name);
    const Entity& p = at(*parent);
    std::string prefix = p.qualified_name;
    if (p.kind == EntityKind::File) {
      prefix = p.parent ? at(*p.parent).qualified_name : std::string();
    }
    if (prefix.empty()) return std::string(name);
    return prefix + "." + std::string(name);
  }

  std::optional<EntityId> find_qualified(std::string_view qualified) const {
    auto it = by_qualified_name_.find(std::string(qualified));
    if (it == by_qualified_name_.end() || it->second.empty()) return std::nullopt;
    return it->second.front();
  }

  std::span<const EntityId> find_all_qualified(std::string_view qualified) const {
    auto it = by_qualified_name_.find(std::string(qualified));
    if (it == by_qualified_name_.end()) return {};
    return it->second;
  }

  std::span<const EntityId> children(EntityId parent) const {
    auto it = children_.find(parent.value);
    if (it == children_.end()) return {};
    return it->second;
  }

  void add_builtin(EntityId id, std::initializer_list<std::string_view> aliases) {
    if (std::find(builtins_.begin(), builtins_.end(), id) == builtins_.end()) builtins_.push_back(id);
    for (auto alias : aliases) builtin_aliases_.emplace(std::string(alias), id);
  }
  const std::vector<EntityId>& builtins() const { return builtins_; }
  bool is_builtin(EntityId id) const { return at(id).language == SourceLanguage::Builtin; }
  std::optional<EntityId> builtin(std::string_view alias) const {
    auto it = builtin_aliases_.find(std::string(alias));
    if (it == builtin_aliases_.end()) return std::nullopt;
    return it->second;
  }

  void add_import(EntityId file, ImportDirective directive) {
    imports_[file.value].push_back(std::move(directive));
  }
  std::span<const ImportDirective> imports(EntityId file) const {
    auto it = imports_.find(file.value);
    if (it == imports_.end()) return {};
    return it->second;
  }

  std::optional<EntityId> enclosing_file(EntityId id) const {
    std::optional<EntityId> cur = id;
    while (cur) {
      if (at(*cur).kind == EntityKind::File) return cur;
      cur = at(*cur).parent;
    }
    return std::nullopt;
  }

  /// Candidates named `name` visible from `scope`: the scope's children, then
  /// each ancestor's, then the enclosing file's imports, then built-ins.
  /// Returns every match at the first level that has any, in id order.
  std::vector<EntityId> lookup_all(EntityId scope, std::string_view name,
                                   KindMask mask = KindMask::all(),
                                   bool include_synthetic = false) const {
    std::vector<EntityId> hits;
    auto accept = [&](EntityId id) {
      const Entity& e = at(id);
      if (e.name == name && mask.contains(e.kind) && (include_synthetic || !e.is_synthetic))
        hits.push_back(id);
    };

    std::optional<EntityId> cur = scope;
    while (cur) {
      const Entity& s = at(*cur);
      if (s.kind == EntityKind::Package) {
        for (EntityId file : children(*cur))
          for (EntityId child : children(file)) accept(child);
      } else {
        for (EntityId child : children(*cur)) accept(child);
      }
      if (!hits.empty()) return sorted(hits);
      if (s.kind == EntityKind::File && !s.parent) {
        // Default package: other root files share one namespace.
        for (EntityId file : root_files_)
          if (file != *cur)
            for (EntityId child : children(file)) accept(child);
        if (!hits.empty()) return sorted(hits);
      }
      cur = s.parent;
    }

    if (auto file = enclosing_file(scope)) {
      for (const ImportDirective& imp : imports(*file)) {
        std::string target;
        if (imp.wildcard) {
          target = imp.path + "." + std::string(name);
        } else if (imp.visible_name() == name) {
          target = imp.path;
        } else {
          continue;
        }
        for (EntityId id : find_all_qualified(target)) {
          if (mask.contains(at(id).kind)) hits.push_back(id);
        }
      }
      if (!hits.empty()) return sorted(hits);
    }

    if (name.find('.') != std::string_view::npos) {
      for (EntityId id : find_all_qualified(name))
        if (mask.contains(at(id).kind)) hits.push_back(id);
      if (!hits.empty()) return sorted(hits);
    }

    if (mask.contains(EntityKind::Type)) {
      if (auto b = builtin(name)) hits.push_back(*b);
    }
    return hits;
  }

  std::optional<EntityId> lookup(EntityId scope, std::string_view name,
                                 KindMask mask = KindMask::all()) const {
    auto hits = lookup_all(scope, name, mask);
    if (hits.empty()) return std::nullopt;
    return hits.front();
  }

  void note_root_file(EntityId file) { root_files_.push_back(file); }

 private:
  static bool conflicts(EntityKind kind) {
    return kind == EntityKind::Type || kind == EntityKind::Property || kind == EntityKind::Package;
  }

  static std::string describe(const std::optional<Location>& loc) {
    if (!loc) return "<synthetic>";
    return loc->file + ":" + std::to_string(loc->start_line);
  }

  static std::vector<EntityId> sorted(std::vector<EntityId> ids) {
    std::sort(ids.begin(), ids.end());
    ids.erase(std::unique(ids.begin(), ids.end()), ids.end());
    return ids;
  }

  std::vector<Entity> entities_;
  std::map<std::string, std::vector<EntityId>> by_qualified_name_;
  std::unordered_map<std::uint32_t, std::vector<EntityId>> children_;
  std::vector<EntityId> builtins_;
  std::map<std::string, EntityId, std::less<>> builtin_aliases_;
  std::unordered_map<std::uint32_t, std::vector<ImportDirective>> imports_;
  std::vector<EntityId> root_files_;
};

inline EntityId intern_entity(EntityTree& tree, Entity proto) { return tree.intern(std::move(proto)); }

inline std::optional<EntityId> lookup(const EntityTree& tree, EntityId scope, std::string_view name) {
  return tree.lookup(scope, name);
}

/// Interns the unified Kotlin/Java built-in types in alphabetical order.
/// Primitive pairs (Int/int, Unit/void, Any/Object, ...) share one entity.
inline void intern_builtins(EntityTree& tree) {
  struct Builtin {
    std::string_view name;
    std::array<std::string_view, 3> aliases;
  };
  static constexpr std::array<Builtin, 9> kBuiltins{{
      {"Any", {"Object", "java.lang.Object", "kotlin.Any"}},
      {"Boolean", {"boolean", "java.lang.Boolean", "kotlin.Boolean"}},
      {"Char", {"char", "java.lang.Character", "kotlin.Char"}},
      {"Double", {"double", "java.lang.Double", "kotlin.Double"}},
      {"Float", {"float", "java.lang.Float", "kotlin.Float"}},
      {"Int", {"int", "java.lang.Integer", "kotlin.Int"}},
      {"Long", {"long", "java.lang.Long", "kotlin.Long"}},
      {"String", {"java.lang.String", "kotlin.String", ""}},
      {"Unit", {"void", "kotlin.Unit", ""}},
  }};
  for (const Builtin& b : kBuiltins) {
    Entity e;
    e.name = std::string(b.name);
    e.kind = EntityKind::Type;
    e.language = SourceLanguage::Builtin;
    e.flavor = TypeFlavor::Class;
    EntityId id = tree.intern(std::move(e));
    tree.add_builtin(id, {b.name, b.aliases[0], b.aliases[1]});
    if (!b.aliases[2].empty()) tree.add_builtin(id, {b.aliases[2]});
  }
}

}  // namespace depends

template <>
struct std::hash<depends::EntityId> {
  std::size_t operator()(const depends::EntityId& id) const noexcept {
    return std::hash<std::uint32_t>{}(id.value);
  }
};
