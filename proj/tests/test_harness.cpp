#include <gtest/gtest.h>

#include "support.hpp"

using namespace depends;

namespace {

GroundTruth corpus_truth() { return parse_ground_truth(detail::read_file(fixture::path("corpus.truth.json"))); }

}  // namespace

TEST(Metrics, PrecisionAndRecallFromCounts) {
  auto r = report_from_counts(9, 1, 3);
  EXPECT_NEAR(*r.precision(), 0.9, 1e-9);
  EXPECT_NEAR(*r.recall(), 0.75, 1e-9);
}

TEST(Metrics, ZeroDenominatorsAreAbsent) {
  auto r = report_from_counts(0, 0, 0);
  EXPECT_FALSE(r.precision().has_value());
  EXPECT_FALSE(r.recall().has_value());
  auto json = nlohmann::json::parse(report_json(r));
  EXPECT_TRUE(json["precision"].is_null());
}

TEST(Compare, CorpusMatchesOracleExactly) {
  auto ex = extract_directory("kotlin", fixture::path("corpus"));
  auto report = compare(ex.relations, ex.tree, corpus_truth());
  EXPECT_EQ(report.not_found, 0u);
  EXPECT_EQ(report.missed, 0u);
  EXPECT_EQ(report.found, 48u);
  EXPECT_EQ(report.per_kind.size(), kAllRelationKinds.size());
}

TEST(Compare, ExtractionAgainstItselfIsPerfect) {
  for (const char* dir : {"corpus", "chain", "twice", "receiver", "interop", "weight"}) {
    auto ex = extract_directory("kotlin", fixture::path(dir));
    auto report = compare(ex.relations, ex.tree, as_ground_truth(ex.relations, ex.tree));
    EXPECT_EQ(report.not_found, 0u) << dir;
    EXPECT_EQ(report.missed, 0u) << dir;
    EXPECT_EQ(report.found, ex.relations.size()) << dir;
  }
}

// Dropping random truth records turns exactly those into not-found relations,
// and found + missed always equals the truth size.
TEST(Compare, CountsStayConsistentUnderPerturbation) {
  auto ex = extract_directory("kotlin", fixture::path("corpus"));
  GroundTruth full = corpus_truth();
  for (std::uint64_t seed = 1; seed <= 20; ++seed) {
    fixture::Rng rng(seed);
    GroundTruth truth;
    std::size_t dropped = 0;
    for (const auto& r : full.records) {
      if (rng.below(4) == 0) ++dropped;
      else truth.records.push_back(r);
    }
    std::size_t bogus = rng.below(3);
    for (std::size_t i = 0; i < bogus; ++i)
      truth.records.push_back({"nowhere.f" + std::to_string(i), "nowhere.g", RelationKind::Call,
                               {SourceLanguage::Kotlin, SourceLanguage::Kotlin}});
    auto report = compare(ex.relations, ex.tree, truth);
    EXPECT_EQ(report.found + report.missed, truth.records.size());
    EXPECT_EQ(report.not_found, dropped);
    EXPECT_EQ(report.missed, bogus);
  }
}

TEST(GroundTruthFile, RoundTripsAndRejectsDuplicates) {
  GroundTruth truth = corpus_truth();
  EXPECT_EQ(parse_ground_truth(ground_truth_json(truth)).records.size(), truth.records.size());
  std::string dup =
      R"([{"source":"a","target":"b","kind":"Call","languagePair":["kotlin","kotlin"]},
          {"source":"a","target":"b","kind":"Call","languagePair":["kotlin","kotlin"]}])";
  EXPECT_THROW(parse_ground_truth(dup), DependsError);
  EXPECT_THROW(parse_ground_truth(R"([{"source":"a","target":"b","kind":"Poke","languagePair":["kotlin","kotlin"]}])"),
               DependsError);
}
