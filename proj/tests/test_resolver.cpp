#include <gtest/gtest.h>

#include <set>

#include "support.hpp"

using namespace depends;
using fixture::find;
using fixture::relation;

namespace {

Extraction run_dir(const std::string& rel, InferenceConfig config = {}) {
  return extract_directory("kotlin", fixture::path(rel), true, config);
}

}  // namespace

TEST(TypeRefs, ResolveAgainstDeclaredTypesAndBuiltins) {
  auto built = fixture::build({{"A.kt", "package p\nclass Bar\nfun f(b: Bar): Int = 1\n"}});
  Resolver resolver(built.tree, built.files);
  EXPECT_GT(resolver.resolve_type_refs(), 0u);
  const Entity& f = built.tree.at(*find(built.tree, "p.f", EntityKind::Function));
  EXPECT_EQ(f.raw_parameter_types[0].resolved, find(built.tree, "p.Bar", EntityKind::Type));
  EXPECT_EQ(f.raw_return_type->resolved, built.tree.builtin("Int"));
}

TEST(TypeRefs, UnknownNamesStayUnresolved) {
  auto built = fixture::build({{"A.kt", "fun f(b: Missing) {}"}});
  Resolver resolver(built.tree, built.files);
  resolver.resolve_type_refs();
  const Entity& f = built.tree.at(*find(built.tree, "f", EntityKind::Function));
  EXPECT_FALSE(f.raw_parameter_types[0].resolved.has_value());
}

TEST(Inference, DeclaredTypeChainResolvesInFirstRound) {
  auto ex = extract_sources({{"A.kt", "class Bar(val x: Int)\nclass Foo(val b: Bar)\nfun f(foo: Foo) = foo.b.x\n"}},
                            InferenceConfig{1});
  EXPECT_TRUE(relation(ex, "f", "Bar.x", RelationKind::Use));
  EXPECT_TRUE(relation(ex, "f", "Foo.b", RelationKind::Use));
}

TEST(Inference, ChainedCallNeedsASecondRound) {
  auto one = run_dir("chain", InferenceConfig{1});
  EXPECT_EQ(one.inference.rounds_used, 1);
  EXPECT_FALSE(one.inference.converged);
  EXPECT_FALSE(relation(one, "chain.useEngine", "chain.Engine.start", RelationKind::Call));

  auto two = run_dir("chain", InferenceConfig{2});
  EXPECT_TRUE(relation(two, "chain.useEngine", "chain.Engine.start", RelationKind::Call));
}

TEST(Inference, RoundPastConvergenceResolvesNothing) {
  auto ex = run_dir("chain");
  ASSERT_TRUE(ex.inference.converged);
  EXPECT_LE(ex.inference.rounds_used, 5);
  EXPECT_EQ(ex.inference.resolved_per_round.back(), 0u);
  for (std::size_t i = 0; i + 1 < ex.inference.resolved_per_round.size(); ++i)
    EXPECT_GT(ex.inference.resolved_per_round[i], 0u);

  auto built = fixture::build_directory(fixture::path("chain"));
  Resolver resolver(built.tree, built.files);
  resolver.resolve_type_refs();
  auto report = resolver.run_inference();
  EXPECT_EQ(resolver.run_round(), 0u);
  EXPECT_EQ(report.resolved_per_round, ex.inference.resolved_per_round);
}

// More rounds never lose a relation.
TEST(Inference, MoreRoundsOnlyAddRelations) {
  for (const char* dir : {"chain", "corpus", "twice", "receiver"}) {
    std::set<std::tuple<std::string, std::string, RelationKind>> prev;
    for (int rounds = 1; rounds <= 5; ++rounds) {
      auto ex = run_dir(dir, InferenceConfig{rounds});
      std::set<std::tuple<std::string, std::string, RelationKind>> now;
      for (const auto* r : ex.relations.ordered())
        now.emplace(ex.tree.at(r->source).qualified_name, ex.tree.at(r->target).qualified_name, r->kind);
      for (const auto& key : prev) EXPECT_TRUE(now.count(key)) << dir << " rounds=" << rounds;
      prev = std::move(now);
    }
  }
}

TEST(Inference, BoundBelowOneIsRejected) {
  auto built = fixture::build({{"A.kt", "class A"}});
  EXPECT_THROW(Resolver(built.tree, built.files, InferenceConfig{0}), DependsError);
}

TEST(Receivers, LambdaReceiverShadowsEnclosingClass) {
  auto ex = run_dir("receiver");
  EXPECT_TRUE(relation(ex, "Foo.calculateInFoo", "Bar.x", RelationKind::Use));
  EXPECT_FALSE(relation(ex, "Foo.calculateInFoo", "Foo.x", RelationKind::Use));
  EXPECT_TRUE(relation(ex, "Foo.calculateInFoo", "calculate", RelationKind::Call));
  EXPECT_TRUE(relation(ex, "calculate", "Bar", RelationKind::Parameter));
}

TEST(Receivers, WithoutReceiverTheEnclosingMemberIsUsed) {
  auto ex = extract_sources({{"A.kt",
                              "fun calculate(param: () -> Int) {}\n"
                              "class Foo(val x: Int) {\n"
                              "  fun g() { calculate { x } }\n"
                              "}\n"}});
  EXPECT_TRUE(relation(ex, "Foo.g", "Foo.x", RelationKind::Use));
}

TEST(Bridging, JavaGetterCallHitsKotlinSyntheticAccessor) {
  auto ex = run_dir("interop");
  const auto* rel = relation(ex, "FooJava.func", "BarKotlin.getX", RelationKind::Call);
  ASSERT_NE(rel, nullptr);
  EXPECT_TRUE(ex.tree.at(rel->target).is_synthetic);
  EXPECT_EQ(language_pair(ex.tree, *rel), (LanguagePair{SourceLanguage::Java, SourceLanguage::Kotlin}));
  EXPECT_TRUE(relation(ex, "FooJava.func", "BarKotlin", RelationKind::Parameter));
}

TEST(Bridging, KotlinReadingJavaFieldIsAUse) {
  auto ex = extract_sources({{"J.java", "public class J { public int count; }"},
                             {"K.kt", "fun read(j: J): Int = j.count\n"}});
  const auto* rel = relation(ex, "read", "J.count", RelationKind::Use);
  ASSERT_NE(rel, nullptr);
  EXPECT_EQ(language_pair(ex.tree, *rel), (LanguagePair{SourceLanguage::Kotlin, SourceLanguage::Java}));
}

TEST(Bridging, KotlinCallersDoNotSeeSyntheticAccessors) {
  auto ex = extract_sources({{"A.kt", "class B(val x: Int)\nfun f(b: B) = b.getX()\n"}});
  EXPECT_FALSE(relation(ex, "f", "B.getX", RelationKind::Call));
}

TEST(Delegation, ClassDelegationAlsoImplements) {
  auto ex = extract_sources({{"D.kt", "interface I\nclass B : I\nclass A(b: B) : I by b\n"}});
  EXPECT_TRUE(relation(ex, "A", "B", RelationKind::Delegate));
  EXPECT_TRUE(relation(ex, "A", "I", RelationKind::Implement));
  EXPECT_TRUE(relation(ex, "B", "I", RelationKind::Implement));
}

TEST(Delegation, PropertyDelegateFoldsIntoTheOwner) {
  auto ex = extract_sources({{"P.kt", "class Lazy\nclass Owner {\n  val v: Int by Lazy()\n}\n"}});
  EXPECT_TRUE(relation(ex, "Owner", "Lazy", RelationKind::Delegate));
}

TEST(Delegation, InterfaceExtendsInterface) {
  auto ex = extract_sources({{"I.kt", "interface A\ninterface B : A\nopen class C\nclass D : C()\n"}});
  EXPECT_TRUE(relation(ex, "B", "A", RelationKind::Extend));
  EXPECT_TRUE(relation(ex, "D", "C", RelationKind::Extend));
}

TEST(Extensions, OneRelationPerResolvedExtension) {
  auto built = fixture::build({{"E.kt", "class S\nfun S.a() {}\nfun Int.b() {}\nfun Nope.c() {}\nfun plain() {}\n"}});
  Resolver resolver(built.tree, built.files);
  resolver.resolve_type_refs();
  auto pairs = resolver.resolve_extensions();
  std::set<std::uint32_t> fns;
  for (const auto& [fn, type] : pairs) {
    EXPECT_TRUE(fns.insert(fn.value).second);
    EXPECT_EQ(built.tree.at(fn).receiver_type->resolved, type);
  }
  EXPECT_EQ(pairs.size(), 2u);
  ASSERT_EQ(resolver.diagnostics().size(), 1u);
  EXPECT_NE(resolver.diagnostics()[0].find("Nope"), std::string::npos);
  EXPECT_EQ(resolver.relations().size(), 2u);
}

TEST(Extensions, CallOnBuiltinReceiver) {
  auto ex = run_dir("twice");
  const auto* ext = relation(ex, "ext.twice", "Int", RelationKind::Extension);
  ASSERT_NE(ext, nullptr);
  EXPECT_TRUE(relation(ex, "ext.caller", "ext.twice", RelationKind::Call));
}

TEST(Extensions, MembersOfReceiverAreInScope) {
  auto ex = extract_sources({{"E.kt", "class Box(val size: Int)\nfun Box.double(): Int = size * 2\n"}});
  EXPECT_TRUE(relation(ex, "double", "Box.size", RelationKind::Use));
  EXPECT_TRUE(relation(ex, "double", "Box", RelationKind::Extension));
}

TEST(Relations, CallsCreatesAndCasts) {
  auto ex = run_dir("corpus");
  EXPECT_TRUE(relation(ex, "shapes.Holder.make", "shapes.Circle", RelationKind::Create));
  EXPECT_TRUE(relation(ex, "shapes.Holder.widen", "shapes.Circle", RelationKind::Cast));
  EXPECT_TRUE(relation(ex, "shapes.report", "shapes.describe", RelationKind::Call));
  EXPECT_TRUE(relation(ex, "shapes.Circle", "util.Marker", RelationKind::Annotation));
}

TEST(Relations, WeightCountsEveryCallSite) {
  auto ex = run_dir("weight");
  std::size_t calls = 0;
  for (const auto* rel : ex.relations.ordered()) {
    if (rel->kind != RelationKind::Call) continue;
    ++calls;
    EXPECT_EQ(rel->weight, 3);
    ASSERT_EQ(rel->locations.size(), 3u);
    EXPECT_EQ(rel->locations[0].line, 6);
    EXPECT_EQ(rel->locations[2].line, 8);
  }
  EXPECT_EQ(calls, 1u);
}

TEST(Relations, EveryEndpointExistsAndPairsPartition) {
  for (const char* dir : {"corpus", "receiver", "interop", "chain", "twice", "weight", "malformed"}) {
    auto ex = run_dir(dir);
    for (const auto* rel : ex.relations.ordered()) {
      ASSERT_LT(rel->source.value, ex.tree.size());
      ASSERT_LT(rel->target.value, ex.tree.size());
      EXPECT_EQ(rel->weight, static_cast<long long>(rel->locations.size()));
      EXPECT_NE(ex.tree.at(rel->source).language, SourceLanguage::Builtin);
      auto pair = language_pair(ex.tree, *rel);
      if (pair.first == SourceLanguage::Java) {
        EXPECT_NE(rel->kind, RelationKind::Delegate);
        EXPECT_NE(rel->kind, RelationKind::Extension);
      }
    }
  }
}

TEST(Relations, SelfContainmentIsSkipped) {
  auto ex = extract_sources({{"N.kt", "class Node(val next: Node?, val label: Lbl)\nclass Lbl\n"}});
  EXPECT_FALSE(relation(ex, "Node", "Node", RelationKind::Contain));
  EXPECT_TRUE(relation(ex, "Node", "Lbl", RelationKind::Contain));
}

TEST(Relations, ImportTargetsTheImportedEntity) {
  auto ex = run_dir("corpus");
  EXPECT_TRUE(relation(ex, "shapes.Circle.kt", "util.Marker", RelationKind::Import));
}
