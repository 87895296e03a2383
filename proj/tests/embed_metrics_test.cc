// Copyright 2026 The Simpeval Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "simpeval/embed_metrics.h"

#include <cmath>
#include <memory>
#include <random>

#include "gtest/gtest.h"
#include "simpeval/error.h"
#include "simpeval/fixture_store.h"
#include "support/test_support.h"

namespace simpeval {
namespace {

using testing_support::CountingBackend;
using testing_support::SyntheticBackend;

TEST(ClampedCosineTest, Basics) {
  EXPECT_EQ(ClampedCosine({1, 2, 3}, {1, 2, 3}), 1.0);
  EXPECT_EQ(ClampedCosine({0.1, 0.7, -0.3}, {0.1, 0.7, -0.3}), 1.0);
  EXPECT_EQ(ClampedCosine({1, 0}, {-1, 0}), 0.0);
  EXPECT_EQ(ClampedCosine({1, 0}, {0, 1}), 0.0);
  EXPECT_EQ(ClampedCosine({0, 0}, {1, 1}), 0.0);
  EXPECT_NEAR(ClampedCosine({1, 0}, {1, 1}), std::sqrt(0.5), 1e-15);
}

TokenEmbeddings Emb(std::vector<std::vector<double>> vectors) {
  TokenEmbeddings e;
  for (std::size_t i = 0; i < vectors.size(); ++i) e.tokens.push_back("t" + std::to_string(i));
  e.vectors = std::move(vectors);
  return e;
}

TEST(GreedyMatchTest, HandExample) {
  const double c = 15.0 / 37.0;
  TokenEmbeddings the_soviet_years = Emb({{c, std::sqrt(1 - c * c), 0}, {1, 0, 0}, {0, 0, 1}});
  TokenEmbeddings soviet_years = Emb({{1, 0, 0}, {0, 0, 1}});
  PrfScore s = GreedyMatch(the_soviet_years, soviet_years);
  EXPECT_NEAR(s.precision, 89.0 / 111.0, 1e-15);
  EXPECT_DOUBLE_EQ(s.recall, 1.0);
  EXPECT_NEAR(s.f1, 0.89, 1e-15);
}

TEST(GreedyMatchTest, IdenticalIsOne) {
  TokenEmbeddings e = Emb({{0.3, -0.2, 0.9}, {0.5, 0.5, 0.1}});
  PrfScore s = GreedyMatch(e, e);
  EXPECT_EQ(s.precision, 1.0);
  EXPECT_EQ(s.recall, 1.0);
  EXPECT_EQ(s.f1, 1.0);
}

TEST(GreedyMatchTest, Errors) {
  try {
    GreedyMatch(Emb({}), Emb({{1}}));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kDegenerateInput);
  }
  try {
    GreedyMatch(Emb({{1, 0}}), Emb({{1, 0, 0}}));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kInvalidArgument);
  }
}

TEST(GreedyMatchTest, SwappingSidesSwapsPrecisionAndRecall) {
  TokenEmbeddings a = Emb({{1, 0}, {0.5, 0.5}, {0, 1}});
  TokenEmbeddings b = Emb({{0.9, 0.1}});
  PrfScore ab = GreedyMatch(a, b), ba = GreedyMatch(b, a);
  EXPECT_DOUBLE_EQ(ab.precision, ba.recall);
  EXPECT_DOUBLE_EQ(ab.recall, ba.precision);
  EXPECT_DOUBLE_EQ(ab.f1, ba.f1);
}

// Builds a replay backend whose embed answers are fixed vectors per text.
std::shared_ptr<ReplayBackend> EmbedFixtures(
    const std::vector<std::pair<std::string, TokenEmbeddings>>& items) {
  FixtureStore store;
  for (const auto& [text, emb] : items) store.Put(EmbedRequest{{text}}, EmbedResponse{{emb}});
  return std::make_shared<ReplayBackend>(std::move(store));
}

TEST(BertScoreTest, TakesBestReference) {
  auto backend = EmbedFixtures({{"cand", Emb({{1, 0}})},
                                {"far", Emb({{0, 1}})},
                                {"near", Emb({{1, 1}})}});
  MetricScore s = BertScore("cand", {"far", "near"}, *backend);
  EXPECT_NEAR(s.value, std::sqrt(0.5), 1e-15);
  EXPECT_TRUE(s.higher_is_better);
}

TEST(BertScoreTest, IdenticalTextScoresOne) {
  SyntheticBackend backend;
  EXPECT_EQ(BertScore("the same words here", {"other text", "the same words here"}, backend).value,
            1.0);
}

TEST(BertScoreTest, DeduplicatesTexts) {
  auto counting = std::make_shared<CountingBackend>(std::make_shared<SyntheticBackend>());
  BertScore("a b", {"a b", "c d", "c d"}, *counting);
  EXPECT_EQ(counting->calls(RequestKind::kEmbed), 2);
}

TEST(BertScoreTest, MissingFixtureSurfacesAsFixtureMiss) {
  auto backend = EmbedFixtures({{"cand", Emb({{1, 0}})}});
  try {
    BertScore("cand", {"unknown"}, *backend);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kFixtureMiss);
  }
}

TEST(AnswerSimilarityEmbedTest, BlankIsZeroWithoutBackendCall) {
  auto counting = std::make_shared<CountingBackend>(std::make_shared<SyntheticBackend>());
  EXPECT_EQ(AnswerSimilarityEmbed("", "x", *counting), 0.0);
  EXPECT_EQ(counting->total(), 0);
}

}  // namespace
}  // namespace simpeval
