#pragma once

// Precision / recall of an extraction against a hand-written list of
// expected relations, matched by qualified names.

#include <map>
#include <optional>
#include <set>
#include <string>
#include <tuple>
#include <vector>

#include <json.hpp>

#include "depends/model.hpp"
#include "depends/relations.hpp"

namespace depends {

struct TruthRecord {
  std::string source;
  std::string target;
  RelationKind kind = RelationKind::Use;
  LanguagePair languages{SourceLanguage::Kotlin, SourceLanguage::Kotlin};

  auto key() const { return std::tie(source, target, kind, languages); }
  bool operator<(const TruthRecord& o) const { return key() < o.key(); }
  bool operator==(const TruthRecord& o) const { return key() == o.key(); }
};

struct GroundTruth {
  std::vector<TruthRecord> records;
};

struct AccuracyCounts {
  std::size_t found = 0;
  std::size_t not_found = 0;
  std::size_t missed = 0;

  std::optional<double> precision() const {
    if (found + not_found == 0) return std::nullopt;
    return static_cast<double>(found) / static_cast<double>(found + not_found);
  }
  std::optional<double> recall() const {
    if (found + missed == 0) return std::nullopt;
    return static_cast<double>(found) / static_cast<double>(found + missed);
  }
};

struct AccuracyReport : AccuracyCounts {
  std::map<RelationKind, AccuracyCounts> per_kind;
  std::map<std::string, AccuracyCounts> per_language_pair;
};

inline GroundTruth parse_ground_truth(const std::string& text) {
  nlohmann::json doc = nlohmann::json::parse(text);
  if (!doc.is_array()) throw DependsError("ground truth must be a JSON array");
  GroundTruth truth;
  std::set<TruthRecord> seen;
  for (const auto& item : doc) {
    TruthRecord r;
    r.source = item.at("source").get<std::string>();
    r.target = item.at("target").get<std::string>();
    auto kind = relation_kind_from_string(item.at("kind").get<std::string>());
    if (!kind) throw DependsError("ground truth: unknown kind " + item.at("kind").dump());
    r.kind = *kind;
    const auto& pair = item.at("languagePair");
    auto a = language_from_string(pair.at(0).get<std::string>());
    auto b = language_from_string(pair.at(1).get<std::string>());
    if (!a || !b) throw DependsError("ground truth: bad languagePair " + pair.dump());
    r.languages = {*a, *b};
    if (!seen.insert(r).second)
      throw DependsError("ground truth: duplicate record " + r.source + " -> " + r.target + " " + std::string(to_string(r.kind)));
    truth.records.push_back(std::move(r));
  }
  return truth;
}

inline std::string ground_truth_json(const GroundTruth& truth) {
  nlohmann::json doc = nlohmann::json::array();
  for (const auto& r : truth.records)
    doc.push_back({{"source", r.source},
                   {"target", r.target},
                   {"kind", std::string(to_string(r.kind))},
                   {"languagePair", {std::string(to_string(r.languages.first)), std::string(to_string(r.languages.second))}}});
  return doc.dump(2) + "\n";
}

/// The extraction itself as a truth list, one record per matching key.
inline GroundTruth as_ground_truth(const RelationStore& relations, const EntityTree& tree) {
  std::set<TruthRecord> records;
  for (const auto* rel : relations.ordered())
    records.insert({tree.at(rel->source).qualified_name, tree.at(rel->target).qualified_name, rel->kind,
                    language_pair(tree, *rel)});
  return {std::vector<TruthRecord>(records.begin(), records.end())};
}

/// Each extracted relation counts as found when a truth record names it
/// (a synthetic accessor target may also be named by its property);
/// otherwise not found. Truth records left unmatched are missed.
inline AccuracyReport compare(const RelationStore& relations, const EntityTree& tree, const GroundTruth& truth) {
  std::set<TruthRecord> expected(truth.records.begin(), truth.records.end());
  std::set<TruthRecord> matched;
  AccuracyReport report;

  std::set<TruthRecord> extracted_keys;
  for (const auto* rel : relations.ordered()) {
    const Entity& target = tree.at(rel->target);
    LanguagePair pair = language_pair(tree, *rel);
    TruthRecord primary{tree.at(rel->source).qualified_name, target.qualified_name, rel->kind, pair};
    if (!extracted_keys.insert(primary).second) continue;

    std::optional<TruthRecord> hit;
    if (expected.count(primary) && !matched.count(primary)) {
      hit = primary;
    } else if (target.accessor_of) {
      TruthRecord alt = primary;
      alt.target = tree.at(*target.accessor_of).qualified_name;
      if (expected.count(alt) && !matched.count(alt)) hit = alt;
    }
    std::string pair_name = format_pair(pair);
    if (hit) {
      matched.insert(*hit);
      ++report.found;
      ++report.per_kind[rel->kind].found;
      ++report.per_language_pair[pair_name].found;
    } else {
      ++report.not_found;
      ++report.per_kind[rel->kind].not_found;
      ++report.per_language_pair[pair_name].not_found;
    }
  }
  for (const auto& r : expected) {
    if (matched.count(r)) continue;
    ++report.missed;
    ++report.per_kind[r.kind].missed;
    ++report.per_language_pair[format_pair(r.languages)].missed;
  }
  return report;
}

/// Builds a report straight from counts, for the metric arithmetic alone.
inline AccuracyReport report_from_counts(std::size_t found, std::size_t not_found, std::size_t missed) {
  AccuracyReport r;
  r.found = found;
  r.not_found = not_found;
  r.missed = missed;
  return r;
}

inline nlohmann::json to_json(const AccuracyCounts& c) {
  auto ratio = [](std::optional<double> v) { return v ? nlohmann::json(*v) : nlohmann::json(nullptr); };
  return {{"found", c.found},
          {"notFound", c.not_found},
          {"missed", c.missed},
          {"precision", ratio(c.precision())},
          {"recall", ratio(c.recall())}};
}

inline std::string report_json(const AccuracyReport& report) {
  nlohmann::json doc = to_json(static_cast<const AccuracyCounts&>(report));
  nlohmann::json kinds = nlohmann::json::object();
  for (const auto& [kind, counts] : report.per_kind) kinds[std::string(to_string(kind))] = to_json(counts);
  nlohmann::json pairs = nlohmann::json::object();
  for (const auto& [pair, counts] : report.per_language_pair) pairs[pair] = to_json(counts);
  doc["perKind"] = kinds;
  doc["perLanguagePair"] = pairs;
  return doc.dump(2) + "\n";
}

}  // namespace depends
