// One line per acceptance criterion; exits nonzero if any fails.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <set>
#include <sstream>
#include <string>

#include "depends/depends.hpp"

using namespace depends;

namespace {

std::string fixtures(const std::string& rel) { return std::string(DEPENDS_FIXTURES) + "/" + rel; }

const DependencyRelation* find_relation(const Extraction& ex, const std::string& source, const std::string& target,
                                        RelationKind kind) {
  for (const auto* rel : ex.relations.ordered())
    if (rel->kind == kind && ex.tree.at(rel->source).qualified_name == source &&
        ex.tree.at(rel->target).qualified_name == target)
      return rel;
  return nullptr;
}

struct Check {
  bool ok = true;
  std::string detail;
  void require(bool cond, const std::string& what) {
    if (!cond && ok) {
      ok = false;
      detail = what;
    }
  }
};

Check taxonomy_coverage() {
  Check c;
  auto start = std::chrono::steady_clock::now();
  auto ex = extract_directory("kotlin", fixtures("corpus"));
  auto truth = parse_ground_truth(detail::read_file(fixtures("corpus.truth.json")));
  auto report = compare(ex.relations, ex.tree, truth);
  double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  std::set<RelationKind> kinds;
  for (const auto* rel : ex.relations.ordered()) kinds.insert(rel->kind);
  c.require(kinds.size() == kAllRelationKinds.size(), std::to_string(kinds.size()) + " of 13 kinds present");
  c.require(report.precision() && std::abs(*report.precision() - 1.0) < 1e-12, "precision below 1.0");
  c.require(report.recall() && std::abs(*report.recall() - 1.0) < 1e-12, "recall below 1.0");
  c.require(seconds < 5.0, "took " + std::to_string(seconds) + " s");
  std::ostringstream os;
  os << kinds.size() << " kinds, precision " << report.precision().value_or(0) << ", recall "
     << report.recall().value_or(0) << ", " << seconds << " s";
  if (c.ok) c.detail = os.str();
  return c;
}

Check receiver_scope() {
  Check c;
  auto ex = extract_directory("kotlin", fixtures("receiver"));
  c.require(find_relation(ex, "Foo.calculateInFoo", "Bar.x", RelationKind::Use), "missing Use calculateInFoo -> Bar.x");
  c.require(!find_relation(ex, "Foo.calculateInFoo", "Foo.x", RelationKind::Use), "spurious Use -> Foo.x");
  return c;
}

Check java_accessor_call() {
  Check c;
  auto ex = extract_directory("kotlin", fixtures("interop"));
  const auto* rel = find_relation(ex, "FooJava.func", "BarKotlin.getX", RelationKind::Call);
  c.require(rel, "missing Call FooJava.func -> BarKotlin.getX");
  if (rel) {
    c.require(ex.tree.at(rel->target).is_synthetic, "target is not a synthetic accessor");
    c.require(language_pair(ex.tree, *rel) == LanguagePair{SourceLanguage::Java, SourceLanguage::Kotlin},
              "language pair is not (java, kotlin)");
  }
  return c;
}

Check language_partition() {
  Check c;
  auto ex = extract_directory("kotlin", fixtures("corpus"));
  std::set<std::string> seen;
  for (const auto* rel : ex.relations.ordered()) {
    auto pair = language_pair(ex.tree, *rel);
    bool jvm_source = pair.first == SourceLanguage::Kotlin || pair.first == SourceLanguage::Java;
    bool jvm_target = pair.second == SourceLanguage::Kotlin || pair.second == SourceLanguage::Java;
    c.require(jvm_source && jvm_target, "relation outside the four pairs: " + format_pair(pair));
    if (pair.first == SourceLanguage::Java)
      c.require(rel->kind != RelationKind::Delegate && rel->kind != RelationKind::Extension,
                "Java-sourced " + std::string(to_string(rel->kind)));
    seen.insert(format_pair(pair));
  }
  c.require(seen.size() == 4, "only " + std::to_string(seen.size()) + " pairs present");
  return c;
}

Check inference_fixpoint() {
  Check c;
  const std::string fn = "chain.useEngine", target = "chain.Engine.start";
  auto one = extract_directory("kotlin", fixtures("chain"), true, InferenceConfig{1});
  auto two = extract_directory("kotlin", fixtures("chain"), true, InferenceConfig{2});
  auto full = extract_directory("kotlin", fixtures("chain"));
  c.require(!find_relation(one, fn, target, RelationKind::Call), "resolved after one round");
  c.require(find_relation(two, fn, target, RelationKind::Call), "unresolved after two rounds");
  c.require(full.inference.converged && full.inference.resolved_per_round.back() == 0, "extra round made progress");
  c.require(full.inference.rounds_used <= 5, "used " + std::to_string(full.inference.rounds_used) + " rounds");
  if (c.ok) c.detail = "rounds used " + std::to_string(full.inference.rounds_used);
  return c;
}

Check builtin_extension() {
  Check c;
  auto ex = extract_directory("kotlin", fixtures("twice"));
  c.require(find_relation(ex, "ext.twice", "Int", RelationKind::Extension), "missing Extension twice -> Int");
  c.require(find_relation(ex, "ext.caller", "ext.twice", RelationKind::Call), "missing Call caller -> twice");
  return c;
}

Check determinism() {
  Check c;
  EmitOptions options;
  auto a = extract_directory("kotlin", fixtures("corpus"));
  auto b = extract_directory("kotlin", fixtures("corpus"));
  c.require(emit_detail(a.tree, a.relations, options) == emit_detail(b.tree, b.relations, options), "detail differs");
  c.require(emit_matrix(a.relations, a.tree, options) == emit_matrix(b.relations, b.tree, options), "matrix differs");
  c.require(emit_graph(a.relations, a.tree, options) == emit_graph(b.relations, b.tree, options), "graph differs");
  return c;
}

Check metric_arithmetic() {
  Check c;
  auto r = report_from_counts(9, 1, 3);
  c.require(r.precision() && std::abs(*r.precision() - 0.9) <= 1e-9, "precision != 0.900");
  c.require(r.recall() && std::abs(*r.recall() - 0.75) <= 1e-9, "recall != 0.750");
  return c;
}

Check cli_contract() {
  Check c;
  auto parsed = parse_args({"kotlin", "./sqlex", "result", "-d", "./out"});
  c.require(parsed.request.has_value(), "example invocation rejected");
  if (parsed.request) {
    const auto& r = *parsed.request;
    c.require(r.lang == "kotlin" && r.src == "./sqlex" && r.output == "result" && r.output_dir == "./out",
              "request fields differ");
  }
  c.require(parse_args(std::vector<std::string>{}).exit_code != 0, "no positionals exited zero");
  c.require(parse_args({"kotlin"}).exit_code != 0, "missing positionals exited zero");
  std::string report = format_timings(StageTimings{});
  for (const char* stage : {"Source File Parsing", "Entity Extraction", "Dependency Relation Extraction", "Result Output"})
    c.require(report.find(stage) != std::string::npos, std::string("timing report lacks ") + stage);
  return c;
}

Check weight_aggregation() {
  Check c;
  auto ex = extract_directory("kotlin", fixtures("weight"));
  std::size_t calls = 0;
  for (const auto* rel : ex.relations.ordered()) {
    if (rel->kind != RelationKind::Call) continue;
    ++calls;
    c.require(rel->weight == 3, "weight " + std::to_string(rel->weight));
    c.require(rel->locations.size() == 3, std::to_string(rel->locations.size()) + " locations");
  }
  c.require(calls == 1, std::to_string(calls) + " Call relations");
  return c;
}

}  // namespace

int main() {
  const std::pair<const char*, std::function<Check()>> criteria[] = {
      {"taxonomy coverage", taxonomy_coverage},    {"receiver-lambda scope", receiver_scope},
      {"java->kotlin accessor call", java_accessor_call}, {"language-pair partition", language_partition},
      {"inference fixpoint", inference_fixpoint},  {"extension on built-in", builtin_extension},
      {"determinism", determinism},                {"metric arithmetic", metric_arithmetic},
      {"cli contract", cli_contract},              {"weight aggregation", weight_aggregation},
  };
  int failures = 0;
  int n = 0;
  for (const auto& [name, run] : criteria) {
    ++n;
    Check c;
    try {
      c = run();
    } catch (const std::exception& e) {
      c.ok = false;
      c.detail = std::string("exception: ") + e.what();
    }
    failures += !c.ok;
    std::printf("[%s] %2d %s%s%s\n", c.ok ? "PASS" : "FAIL", n, name, c.detail.empty() ? "" : ": ", c.detail.c_str());
  }
  std::printf("%d/%d criteria passed\n", n - failures, n);
  return failures == 0 ? 0 : 1;
}
