#pragma once

#include "depends/entity_builder.hpp"
#include "depends/java_parser.hpp"
#include "depends/kotlin_parser.hpp"
#include "depends/registry.hpp"

namespace depends {

inline ProcessorDescriptor kotlin_processor() {
  return {"kotlin", {".kt"},
          [](std::string_view src, const std::string& path) { return parse_kotlin(src, path); },
          [](ast::SourceFile& file, EntityTree& tree) { return build_kotlin_entities(file, tree); }};
}

inline ProcessorDescriptor java_processor() {
  return {"java", {".java"},
          [](std::string_view src, const std::string& path) { return parse_java(src, path); },
          [](ast::SourceFile& file, EntityTree& tree) { return build_java_entities(file, tree); }};
}

inline LanguageRegistry make_default_registry() {
  LanguageRegistry registry;
  registry.register_processor(kotlin_processor());
  registry.register_processor(java_processor());
  return registry;
}

}  // namespace depends
