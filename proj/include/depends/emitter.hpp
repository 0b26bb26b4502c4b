#pragma once

#include <filesystem>
#include <fstream>
#include <map>
#include <set>
#include <string>
#include <tuple>
#include <vector>

#include <json.hpp>

#include "depends/model.hpp"
#include "depends/relations.hpp"

namespace depends {

struct EmitOptions {
  std::string format = "json";       // "json" | "dot"
  std::string granularity = "file";  // "file" | "structure"
  bool show_language = false;
  bool strip_leading_path = false;
  std::string leading_path;  // prefix removed from file paths when stripping
  bool emit_name_map = false;
  std::string output_dir = ".";
  std::string output_name = "depends";
  std::string name_pattern = "dot";  // "dot" | "unix"

  void validate() const {
    if (format != "json" && format != "dot") throw DependsError("unknown format '" + format + "' (json, dot)");
    if (granularity != "file" && granularity != "structure")
      throw DependsError("unknown granularity '" + granularity + "' (file, structure)");
    if (granularity == "structure" && format != "json")
      throw DependsError("granularity 'structure' requires format 'json'");
    if (name_pattern != "dot" && name_pattern != "unix")
      throw DependsError("unknown name pattern '" + name_pattern + "' (dot, unix)");
  }
};

namespace detail {

inline std::string display_path(const std::string& path, const EmitOptions& options) {
  if (!options.strip_leading_path || options.leading_path.empty()) return path;
  std::string prefix = options.leading_path;
  while (prefix.size() > 1 && prefix.back() == '/') prefix.pop_back();
  if (path.compare(0, prefix.size(), prefix) != 0) return path;
  std::size_t cut = prefix.size();
  if (cut < path.size() && path[cut] == '/') ++cut;
  else if (cut < path.size() && prefix.back() != '/') return path;
  return path.substr(cut);
}

inline std::string display_name(const std::string& qualified, const EmitOptions& options) {
  if (options.name_pattern != "unix") return qualified;
  std::string out = qualified;
  for (char& c : out)
    if (c == '.') c = '/';
  return out;
}

/// Source path of the file enclosing an entity, if any.
inline std::optional<std::string> file_of(const EntityTree& tree, EntityId id) {
  auto file = tree.enclosing_file(id);
  if (!file || !tree.at(*file).location) return std::nullopt;
  return tree.at(*file).location->file;
}

inline std::string relation_label(const EntityTree& tree, const DependencyRelation& rel, bool show_language) {
  std::string label(to_string(rel.kind));
  if (show_language) label += "(" + format_pair(language_pair(tree, rel)) + ")";
  return label;
}

inline std::vector<std::string> file_paths(const EntityTree& tree) {
  std::vector<std::string> out;
  for (const Entity& e : tree.entities())
    if (e.kind == EntityKind::File && e.location) out.push_back(e.location->file);
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace detail

/// File-by-file matrix: {"variables": [...], "cells": [{src, dest, values}]}.
inline std::string emit_matrix(const RelationStore& relations, const EntityTree& tree, const EmitOptions& options) {
  std::vector<std::string> files = detail::file_paths(tree);
  std::vector<std::string> shown;
  for (const auto& f : files) shown.push_back(detail::display_path(f, options));
  std::vector<std::size_t> order(files.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return shown[a] < shown[b]; });
  std::map<std::string, std::size_t> index;
  nlohmann::json variables = nlohmann::json::array();
  for (std::size_t pos = 0; pos < order.size(); ++pos) {
    index[files[order[pos]]] = pos;
    variables.push_back(shown[order[pos]]);
  }

  std::map<std::pair<std::size_t, std::size_t>, std::map<std::string, long long>> cells;
  for (const auto* rel : relations.ordered()) {
    auto src = detail::file_of(tree, rel->source);
    auto dst = detail::file_of(tree, rel->target);
    if (!src || !dst) continue;
    std::size_t s = index.at(*src), d = index.at(*dst);
    if (s == d) continue;
    cells[{s, d}][detail::relation_label(tree, *rel, options.show_language)] += rel->weight;
  }

  nlohmann::json cell_list = nlohmann::json::array();
  for (const auto& [key, values] : cells) {
    nlohmann::json v = nlohmann::json::object();
    for (const auto& [label, count] : values) v[label] = count;
    cell_list.push_back({{"src", key.first}, {"dest", key.second}, {"values", v}});
  }
  nlohmann::json doc;
  doc["variables"] = variables;
  doc["cells"] = cell_list;
  return doc.dump(2) + "\n";
}

/// Every entity by id and every relation by (source, target, kind).
inline std::string emit_detail(const EntityTree& tree, const RelationStore& relations, const EmitOptions& options) {
  nlohmann::json entities = nlohmann::json::array();
  for (const Entity& e : tree.entities()) {
    nlohmann::json j;
    j["id"] = e.id.value;
    j["name"] = e.name;
    j["qualifiedName"] = detail::display_name(e.qualified_name, options);
    j["kind"] = std::string(to_string(e.kind));
    j["language"] = std::string(to_string(e.language));
    j["parent"] = e.parent ? nlohmann::json(e.parent->value) : nlohmann::json(nullptr);
    if (e.location) {
      j["location"] = {{"file", detail::display_path(e.location->file, options)},
                       {"startLine", e.location->start_line},
                       {"endLine", e.location->end_line}};
    } else {
      j["location"] = nullptr;
    }
    nlohmann::json flags = nlohmann::json::array();
    if (e.is_extension) flags.push_back("extension");
    if (e.is_synthetic) flags.push_back("synthetic");
    if (e.is_mutable) flags.push_back("mutable");
    if (e.flavor != TypeFlavor::None && e.kind == EntityKind::Type) flags.push_back(std::string(to_string(e.flavor)));
    j["flags"] = flags;
    if (e.accessor_of) j["accessorOf"] = e.accessor_of->value;
    entities.push_back(std::move(j));
  }

  nlohmann::json rels = nlohmann::json::array();
  for (const auto* rel : relations.ordered()) {
    auto pair = language_pair(tree, *rel);
    nlohmann::json locations = nlohmann::json::array();
    for (const auto& site : rel->locations)
      locations.push_back({{"file", detail::display_path(site.file, options)}, {"line", site.line}});
    rels.push_back({{"source", rel->source.value},
                    {"target", rel->target.value},
                    {"kind", std::string(to_string(rel->kind))},
                    {"weight", rel->weight},
                    {"languagePair", {std::string(to_string(pair.first)), std::string(to_string(pair.second))}},
                    {"locations", locations}});
  }
  nlohmann::json doc;
  doc["entities"] = entities;
  doc["relations"] = rels;
  return doc.dump(2) + "\n";
}

/// DOT graph with a node per file and an edge per (file, file, language
/// pair). Kotlin-to-Java edges are orange, Java-to-Kotlin green.
inline std::string emit_graph(const RelationStore& relations, const EntityTree& tree, const EmitOptions& options) {
  std::vector<std::string> files = detail::file_paths(tree);
  std::set<std::string> nodes;
  for (const auto& f : files) nodes.insert(detail::display_path(f, options));

  std::map<std::tuple<std::string, std::string, std::string>, long long> edges;
  std::map<std::tuple<std::string, std::string, std::string>, LanguagePair> pairs;
  for (const auto* rel : relations.ordered()) {
    auto src = detail::file_of(tree, rel->source);
    auto dst = detail::file_of(tree, rel->target);
    if (!src || !dst || *src == *dst) continue;
    LanguagePair pair = language_pair(tree, *rel);
    auto key = std::make_tuple(detail::display_path(*src, options), detail::display_path(*dst, options), format_pair(pair));
    edges[key] += rel->weight;
    pairs[key] = pair;
  }

  auto quote = [](const std::string& s) {
    std::string out = "\"";
    for (char c : s) {
      if (c == '"' || c == '\\') out += '\\';
      out += c;
    }
    return out + "\"";
  };
  auto color = [](const LanguagePair& p) {
    if (p.first == SourceLanguage::Kotlin && p.second == SourceLanguage::Java) return "orange";
    if (p.first == SourceLanguage::Java && p.second == SourceLanguage::Kotlin) return "green";
    return "gray";
  };

  std::string out = "digraph dependencies {\n  node [shape=box];\n";
  for (const auto& n : nodes) out += "  " + quote(n) + ";\n";
  for (const auto& [key, weight] : edges) {
    const auto& [src, dst, label] = key;
    out += "  " + quote(src) + " -> " + quote(dst) + " [label=" + quote(label) + ", languages=" + quote(label) +
           ", color=" + color(pairs.at(key)) + ", weight=" + std::to_string(weight) + "];\n";
  }
  out += "}\n";
  return out;
}

/// Plain id -> qualified name map.
inline std::string emit_name_map(const EntityTree& tree, const EmitOptions& options) {
  nlohmann::json doc = nlohmann::json::object();
  for (const Entity& e : tree.entities()) doc[std::to_string(e.id.value)] = detail::display_name(e.qualified_name, options);
  return doc.dump(2) + "\n";
}

inline void write_file(const std::filesystem::path& path, const std::string& bytes) {
  std::error_code ec;
  if (path.has_parent_path()) std::filesystem::create_directories(path.parent_path(), ec);
  std::ofstream out(path, std::ios::binary);
  if (!out) throw IoError("cannot write " + path.string());
  out << bytes;
  out.close();
  if (!out) throw IoError("cannot write " + path.string());
}

/// Writes the outputs selected by `options`; returns the written paths.
inline std::vector<std::string> emit_outputs(const EntityTree& tree, const RelationStore& relations,
                                             const EmitOptions& options) {
  options.validate();
  std::filesystem::path dir(options.output_dir.empty() ? "." : options.output_dir);
  std::vector<std::string> written;
  auto put = [&](const std::string& suffix, const std::string& bytes) {
    auto path = dir / (options.output_name + suffix);
    write_file(path, bytes);
    written.push_back(path.generic_string());
  };
  if (options.format == "dot") {
    put(".dot", emit_graph(relations, tree, options));
  } else if (options.granularity == "structure") {
    put(".json", emit_detail(tree, relations, options));
  } else {
    put(".json", emit_matrix(relations, tree, options));
  }
  if (options.emit_name_map) put("-map.json", emit_name_map(tree, options));
  return written;
}

}  // namespace depends
