#pragma once

#include <array>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <tuple>
#include <utility>
#include <vector>

#include "depends/errors.hpp"
#include "depends/model.hpp"

namespace depends {

enum class RelationKind : std::uint8_t {
  Import,
  Contain,
  Extend,
  Implement,
  Call,
  Create,
  Cast,
  Annotation,
  Use,
  Parameter,
  Return,
  Delegate,
  Extension,
};

inline constexpr std::array<RelationKind, 13> kAllRelationKinds{
    RelationKind::Import,    RelationKind::Contain,  RelationKind::Extend,     RelationKind::Implement,
    RelationKind::Call,      RelationKind::Create,   RelationKind::Cast,       RelationKind::Annotation,
    RelationKind::Use,       RelationKind::Parameter, RelationKind::Return,    RelationKind::Delegate,
    RelationKind::Extension,
};

inline std::string_view to_string(RelationKind kind) {
  switch (kind) {
    case RelationKind::Import: return "Import";
    case RelationKind::Contain: return "Contain";
    case RelationKind::Extend: return "Extend";
    case RelationKind::Implement: return "Implement";
    case RelationKind::Call: return "Call";
    case RelationKind::Create: return "Create";
    case RelationKind::Cast: return "Cast";
    case RelationKind::Annotation: return "Annotation";
    case RelationKind::Use: return "Use";
    case RelationKind::Parameter: return "Parameter";
    case RelationKind::Return: return "Return";
    case RelationKind::Delegate: return "Delegate";
    case RelationKind::Extension: return "Extension";
  }
  return "?";
}

inline std::optional<RelationKind> relation_kind_from_string(std::string_view text) {
  for (RelationKind k : kAllRelationKinds)
    if (to_string(k) == text) return k;
  return std::nullopt;
}

using LanguagePair = std::pair<SourceLanguage, SourceLanguage>;

inline std::string format_pair(const LanguagePair& pair, std::string_view arrow = "->") {
  return std::string(to_string(pair.first)) + std::string(arrow) + std::string(to_string(pair.second));
}

struct DependencyRelation {
  EntityId source;
  EntityId target;
  RelationKind kind = RelationKind::Use;
  int weight = 0;
  std::vector<SourceSite> locations;
};

inline LanguagePair language_pair(const EntityTree& tree, const DependencyRelation& rel) {
  return {tree.at(rel.source).language, tree.at(rel.target).language};
}

/// Aggregates occurrences into one relation per (source, target, kind).
class RelationStore {
 public:
  using Key = std::tuple<EntityId, EntityId, RelationKind>;

  void record(const EntityTree& tree, EntityId source, EntityId target, RelationKind kind,
              SourceSite at) {
    if (!tree.contains(source) || !tree.contains(target))
      throw DependsError("record_relation: endpoint id out of range");
    if ((kind == RelationKind::Delegate || kind == RelationKind::Extension) &&
        tree.at(source).language == SourceLanguage::Java) {
      throw TaxonomyViolation(std::string(to_string(kind)) + " relation from Java entity '" +
                              tree.at(source).qualified_name + "'");
    }
    auto [it, inserted] = relations_.try_emplace(Key{source, target, kind});
    DependencyRelation& rel = it->second;
    if (inserted) {
      rel.source = source;
      rel.target = target;
      rel.kind = kind;
    }
    rel.weight += 1;
    rel.locations.push_back(std::move(at));
    ++occurrences_;
  }

  std::size_t size() const { return relations_.size(); }
  bool empty() const { return relations_.empty(); }
  std::size_t occurrences() const { return occurrences_; }

  const DependencyRelation* find(EntityId source, EntityId target, RelationKind kind) const {
    auto it = relations_.find(Key{source, target, kind});
    return it == relations_.end() ? nullptr : &it->second;
  }

  /// Relations ordered by (source, target, kind).
  std::vector<const DependencyRelation*> ordered() const {
    std::vector<const DependencyRelation*> out;
    out.reserve(relations_.size());
    for (const auto& [key, rel] : relations_) out.push_back(&rel);
    return out;
  }

  auto begin() const { return relations_.begin(); }
  auto end() const { return relations_.end(); }

 private:
  std::map<Key, DependencyRelation> relations_;
  std::size_t occurrences_ = 0;
};

inline void record_relation(RelationStore& store, const EntityTree& tree, EntityId source,
                            EntityId target, RelationKind kind, SourceSite at) {
  store.record(tree, source, target, kind, std::move(at));
}

}  // namespace depends
