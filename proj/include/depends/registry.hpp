#pragma once

#include <functional>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "depends/ast.hpp"
#include "depends/errors.hpp"
#include "depends/model.hpp"

namespace depends {

/// How a language plugs into the pipeline: its name, the file suffixes it
/// claims, and the frontend's parse and entity-building entry points.
struct ProcessorDescriptor {
  std::string language_name;
  std::vector<std::string> extensions;
  std::function<ast::SourceFile(std::string_view source, const std::string& path)> parse;
  std::function<std::vector<EntityId>(ast::SourceFile&, EntityTree&)> build;
};

class LanguageRegistry {
 public:
  void register_processor(ProcessorDescriptor descriptor) {
    if (by_name_.count(descriptor.language_name))
      throw RegistryConflict("language '" + descriptor.language_name + "' is already registered");
    for (const auto& ext : descriptor.extensions) {
      auto it = by_extension_.find(ext);
      if (it != by_extension_.end())
        throw RegistryConflict("extension '" + ext + "' is already claimed by '" + it->second + "'");
    }
    for (const auto& ext : descriptor.extensions) by_extension_.emplace(ext, descriptor.language_name);
    std::string name = descriptor.language_name;
    by_name_.emplace(std::move(name), std::move(descriptor));
  }

  const ProcessorDescriptor* find(std::string_view language) const {
    auto it = by_name_.find(std::string(language));
    return it == by_name_.end() ? nullptr : &it->second;
  }

  const ProcessorDescriptor* find_by_extension(std::string_view extension) const {
    auto it = by_extension_.find(std::string(extension));
    return it == by_extension_.end() ? nullptr : find(it->second);
  }

  /// Picks the processor for a path by its longest registered suffix.
  const ProcessorDescriptor* for_path(std::string_view path) const {
    const ProcessorDescriptor* best = nullptr;
    std::size_t best_len = 0;
    for (const auto& [ext, name] : by_extension_) {
      if (path.size() >= ext.size() && path.substr(path.size() - ext.size()) == ext && ext.size() > best_len) {
        best = find(name);
        best_len = ext.size();
      }
    }
    return best;
  }

  std::vector<std::string> names() const {
    std::vector<std::string> out;
    for (const auto& [name, _] : by_name_) out.push_back(name);
    return out;
  }

  bool empty() const { return by_name_.empty(); }

 private:
  std::map<std::string, ProcessorDescriptor> by_name_;
  std::map<std::string, std::string> by_extension_;
};

inline void register_processor(LanguageRegistry& registry, ProcessorDescriptor descriptor) {
  registry.register_processor(std::move(descriptor));
}

/// A Kotlin request analyzes Java sources as well, since mixed projects
/// are the point; a Java request stays Java-only.
inline std::vector<const ProcessorDescriptor*> processors_for_request(const LanguageRegistry& registry,
                                                                      std::string_view requested) {
  auto available = [&] {
    std::string list;
    for (const auto& n : registry.names()) list += (list.empty() ? "" : ", ") + n;
    return list.empty() ? std::string("none") : list;
  };
  std::vector<std::string_view> wanted;
  if (requested == "kotlin") wanted = {"kotlin", "java"};
  else if (requested == "java") wanted = {"java"};
  else throw UnknownLanguage("unknown language '" + std::string(requested) + "' (available: " + available() + ")");

  std::vector<const ProcessorDescriptor*> out;
  for (auto name : wanted) {
    const ProcessorDescriptor* p = registry.find(name);
    if (!p) throw UnknownLanguage("language '" + std::string(name) + "' is not registered (available: " + available() + ")");
    out.push_back(p);
  }
  return out;
}

}  // namespace depends
