#pragma once

#include <algorithm>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "depends/depends.hpp"

namespace fixture {

using namespace depends;

inline std::string path(std::string_view rel) { return std::string(DEPENDS_FIXTURES) + "/" + std::string(rel); }

/// Parsed and built, but not yet resolved.
struct Built {
  EntityTree tree;
  std::vector<ast::SourceFile> files;
};

inline Built build(std::vector<SourceText> sources) {
  std::sort(sources.begin(), sources.end(), [](const auto& a, const auto& b) { return a.path < b.path; });
  LanguageRegistry registry = make_default_registry();
  Built out;
  intern_builtins(out.tree);
  for (const auto& s : sources) {
    const ProcessorDescriptor* proc = registry.for_path(s.path);
    out.files.push_back(proc->parse(s.text, s.path));
    proc->build(out.files.back(), out.tree);
  }
  return out;
}

inline Built build_directory(const std::string& dir) {
  LanguageRegistry registry = make_default_registry();
  std::vector<SourceText> sources;
  for (const auto& p : discover_sources(processors_for_request(registry, "kotlin"), dir, {}, true))
    sources.push_back({p, detail::read_file(p)});
  return build(std::move(sources));
}

/// Any entity (synthetic ones included) with this qualified name and kind.
inline std::optional<EntityId> find(const EntityTree& tree, std::string_view qualified, EntityKind kind) {
  for (const Entity& e : tree.entities())
    if (e.qualified_name == qualified && e.kind == kind) return e.id;
  return std::nullopt;
}

inline const DependencyRelation* relation(const EntityTree& tree, const RelationStore& store, std::string_view source,
                                          std::string_view target, RelationKind kind) {
  for (const auto* rel : store.ordered())
    if (rel->kind == kind && tree.at(rel->source).qualified_name == source &&
        tree.at(rel->target).qualified_name == target)
      return rel;
  return nullptr;
}

inline const DependencyRelation* relation(const Extraction& ex, std::string_view source, std::string_view target,
                                          RelationKind kind) {
  return relation(ex.tree, ex.relations, source, target, kind);
}

/// Deterministic pseudo-random numbers for hand-rolled property tests.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : state_(seed * 6364136223846793005ULL + 1442695040888963407ULL) {}
  std::uint32_t next() {
    state_ = state_ * 6364136223846793005ULL + 1442695040888963407ULL;
    return static_cast<std::uint32_t>(state_ >> 33);
  }
  std::size_t below(std::size_t n) { return n == 0 ? 0 : next() % n; }

 private:
  std::uint64_t state_;
};

}  // namespace fixture
