/*
Copyright 2026 The lfg Authors
Licensed under the Apache License, Version 2.0 (the "License");
you may not use this file except in compliance with the License.
you may obtain a copy of the License at

                http://www.apache.org/licenses/LICENSE-2.0

Unless required by applicable law or agreed to in writing, software
distributed under the License is distributed on an "AS IS" BASIS,
WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
See the License for the specific language governing permissions and
limitations under the License.
*/

#include <gtest/gtest.h>

#include "lfg/metrics.hpp"
#include "lfg/synth.hpp"
#include "test_util.hpp"

namespace lfg {
namespace {

double mean_adjacent_mse(const std::vector<VideoFrame>& frames) {
  double sum = 0.0;
  for (std::size_t i = 1; i < frames.size(); ++i) sum += metrics::mse(frames[i - 1], frames[i]);
  return sum / static_cast<double>(frames.size() - 1);
}

TEST(Synth, Ids) {
  EXPECT_EQ((ContentSpec{ContentClass::kStatic, 3, 64, 64, 61}.id()), "static-s3-64x64x61");
  EXPECT_EQ((ContentSpec{ContentClass::kMixed, 12, 32, 48, 13}.id()), "mixed-s12-32x48x13");
  EXPECT_EQ(parse_content_class("dyntex"), ContentClass::kDyntex);
  EXPECT_EQ(testing::code_of([] { parse_content_class("Static"); }), ErrorCode::kInvalidArgument);
}

TEST(Synth, ShapeAndIndices) {
  const auto frames = synth_sequence({ContentClass::kMixed, 1, 48, 32, 13});
  ASSERT_EQ(frames.size(), 13u);
  for (int i = 0; i < 13; ++i) {
    EXPECT_EQ(frames[static_cast<std::size_t>(i)].index, i);
    EXPECT_EQ(frames[static_cast<std::size_t>(i)].width(), 48);
    EXPECT_EQ(frames[static_cast<std::size_t>(i)].height(), 32);
  }
}

TEST(Synth, Deterministic) {
  for (auto cls : {ContentClass::kStatic, ContentClass::kDyntex, ContentClass::kMixed}) {
    const auto a = synth_sequence({cls, 5, 64, 64, 13});
    const auto b = synth_sequence({cls, 5, 64, 64, 13});
    const auto c = synth_sequence({cls, 6, 64, 64, 13});
    bool differs = false;
    for (std::size_t i = 0; i < a.size(); ++i) {
      EXPECT_TRUE(a[i].same_samples(b[i]));
      differs |= !a[i].same_samples(c[i]);
    }
    EXPECT_TRUE(differs) << to_string(cls);
  }
}

TEST(Synth, TemporalActivityOrdering) {
  for (std::uint64_t seed = 1; seed <= 3; ++seed) {
    const double st = mean_adjacent_mse(synth_sequence({ContentClass::kStatic, seed, 64, 64, 13}));
    const double dy = mean_adjacent_mse(synth_sequence({ContentClass::kDyntex, seed, 64, 64, 13}));
    EXPECT_LT(st, 25.0);
    EXPECT_GE(dy, 10.0 * st);
  }
}

TEST(Synth, Rejections) {
  EXPECT_EQ(testing::code_of([] { synth_sequence({ContentClass::kStatic, 1, 63, 64, 13}); }),
            ErrorCode::kBadDimensions);
  EXPECT_EQ(testing::code_of([] { synth_sequence({ContentClass::kStatic, 1, 0, 64, 13}); }),
            ErrorCode::kBadDimensions);
  EXPECT_EQ(testing::code_of([] { synth_sequence({ContentClass::kStatic, 1, 64, 64, 12}); }),
            ErrorCode::kInvalidArgument);
}

}  // namespace
}  // namespace lfg
