#pragma once

#include <algorithm>
#include <chrono>
#include <filesystem>
#include <fstream>
#include <functional>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "depends/frontends.hpp"
#include "depends/resolver.hpp"

namespace depends {

/// Wall-clock milliseconds spent in each extraction stage.
struct StageTimings {
  double parsing_ms = 0;
  double entity_ms = 0;
  double relation_ms = 0;
  double output_ms = 0;
  double total_ms = 0;
};

struct Extraction {
  EntityTree tree;
  std::vector<ast::SourceFile> files;  // successfully parsed, in path order
  RelationStore relations;
  InferenceReport inference;
  std::vector<std::string> diagnostics;
  std::vector<std::string> skipped;  // files rejected with a ParseError
};

namespace detail {

inline double elapsed_ms(std::chrono::steady_clock::time_point since) {
  return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - since).count();
}

inline std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot read " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

}  // namespace detail

/// Source files under `src` and each include directory claimed by one of
/// `processors`. Only the top level is scanned unless `recursive`. The
/// result is sorted and free of duplicates.
inline std::vector<std::string> discover_sources(const std::vector<const ProcessorDescriptor*>& processors,
                                                 const std::string& src, const std::vector<std::string>& includes = {},
                                                 bool recursive = false) {
  namespace fs = std::filesystem;
  auto claimed = [&](const fs::path& p) {
    std::string name = p.filename().string();
    for (const auto* proc : processors)
      for (const auto& ext : proc->extensions)
        if (name.size() > ext.size() && name.compare(name.size() - ext.size(), ext.size(), ext) == 0) return true;
    return false;
  };

  std::vector<std::string> out;
  std::vector<std::string> roots{src};
  roots.insert(roots.end(), includes.begin(), includes.end());
  for (const auto& root : roots) {
    std::error_code ec;
    if (!fs::is_directory(root, ec)) throw IoError("cannot read source directory " + root);
    auto visit = [&](const fs::directory_entry& entry) {
      if (entry.is_regular_file() && claimed(entry.path())) out.push_back(entry.path().generic_string());
    };
    if (recursive) {
      for (const auto& entry : fs::recursive_directory_iterator(root, fs::directory_options::skip_permission_denied)) visit(entry);
    } else {
      for (const auto& entry : fs::directory_iterator(root)) visit(entry);
    }
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

using SourceLoader = std::function<std::string(const std::string& path)>;

/// Parses, builds and resolves `paths`. Files failing to parse are skipped
/// and reported; a duplicate declaration aborts the run.
inline Extraction extract(const LanguageRegistry& registry, std::vector<std::string> paths,
                          InferenceConfig config = {}, StageTimings* timings = nullptr,
                          const SourceLoader& load = detail::read_file) {
  using clock = std::chrono::steady_clock;
  std::sort(paths.begin(), paths.end());
  Extraction out;
  StageTimings local;
  StageTimings& t = timings ? *timings : local;

  auto start = clock::now();
  std::vector<const ProcessorDescriptor*> owners;
  for (const auto& path : paths) {
    const ProcessorDescriptor* proc = registry.for_path(path);
    if (!proc) continue;
    try {
      out.files.push_back(proc->parse(load(path), path));
      owners.push_back(proc);
      for (const auto& d : out.files.back().diagnostics) out.diagnostics.push_back(d.str());
    } catch (const ParseError& e) {
      out.skipped.push_back(path);
      out.diagnostics.push_back(e.what());
    } catch (const IoError& e) {
      out.skipped.push_back(path);
      out.diagnostics.push_back(e.what());
    }
  }
  t.parsing_ms = detail::elapsed_ms(start);

  auto stage = clock::now();
  intern_builtins(out.tree);
  for (std::size_t i = 0; i < out.files.size(); ++i) owners[i]->build(out.files[i], out.tree);
  t.entity_ms = detail::elapsed_ms(stage);

  stage = clock::now();
  Resolver resolver(out.tree, out.files, config);
  resolver.resolve_type_refs();
  out.inference = resolver.run_inference();
  resolver.resolve_extensions();
  out.relations = resolver.collect_relations();
  for (const auto& d : resolver.diagnostics()) out.diagnostics.push_back(d);
  t.relation_ms = detail::elapsed_ms(stage);
  return out;
}

struct SourceText {
  std::string path;
  std::string text;
};

/// Extraction over in-memory sources; the path's suffix picks the language.
inline Extraction extract_sources(const std::vector<SourceText>& sources, InferenceConfig config = {}) {
  std::map<std::string, std::string> texts;
  std::vector<std::string> paths;
  for (const auto& s : sources) {
    texts[s.path] = s.text;
    paths.push_back(s.path);
  }
  LanguageRegistry registry = make_default_registry();
  return extract(registry, paths, config, nullptr, [&](const std::string& path) { return texts.at(path); });
}

inline Extraction extract_directory(const std::string& language, const std::string& src, bool recursive = true,
                                    InferenceConfig config = {}) {
  LanguageRegistry registry = make_default_registry();
  auto processors = processors_for_request(registry, language);
  return extract(registry, discover_sources(processors, src, {}, recursive), config);
}

}  // namespace depends
