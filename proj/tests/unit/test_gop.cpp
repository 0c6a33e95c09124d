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

#include <algorithm>

#include "lfg/gop.hpp"
#include "test_util.hpp"

namespace lfg {
namespace {

std::vector<int> display_order_of(const std::vector<FramePlan>& plan) {
  std::vector<int> out;
  for (const auto& p : plan) out.push_back(p.display_index);
  return out;
}

std::string types_of(const std::vector<FramePlan>& plan) {
  std::string s;
  for (const auto& p : plan) s += to_char(p.type);
  return s;
}

TEST(PlanGop, SingleFrame) {
  const auto plan = plan_gop(1, 4);
  ASSERT_EQ(plan.size(), 1u);
  EXPECT_EQ(plan[0].type, FrameType::kI);
  EXPECT_EQ(plan[0].ref_fwd, -1);
  EXPECT_EQ(plan[0].ref_bwd, -1);
  EXPECT_TRUE(plan[0].scene_start);
}

TEST(PlanGop, NineFramesGopFour) {
  const auto plan = plan_gop(9, 4);
  EXPECT_EQ(display_order_of(plan), (std::vector<int>{0, 4, 1, 2, 3, 8, 5, 6, 7}));
  EXPECT_EQ(types_of(plan), "IPBBBPBBB");
  for (std::size_t i = 0; i < plan.size(); ++i) EXPECT_EQ(plan[i].coding_order, static_cast<int>(i));
  EXPECT_EQ(plan[1].ref_fwd, 0);
  EXPECT_EQ(plan[3].ref_fwd, 0);
  EXPECT_EQ(plan[3].ref_bwd, 4);
  EXPECT_EQ(plan[6].ref_fwd, 4);
  EXPECT_EQ(plan[6].ref_bwd, 8);
}

TEST(PlanGop, LastFrameClosesTheSequence) {
  const auto plan = plan_gop(7, 4);
  EXPECT_EQ(display_order_of(plan), (std::vector<int>{0, 4, 1, 2, 3, 6, 5}));
  EXPECT_EQ(types_of(plan), "IPBBBPB");
}

TEST(PlanGop, SceneCutRestartsPhase) {
  std::vector<bool> cuts(13, false);
  cuts[6] = true;
  const auto plan = plan_gop(13, 4, cuts);
  EXPECT_EQ(display_order_of(plan), (std::vector<int>{0, 4, 1, 2, 3, 6, 5, 10, 7, 8, 9, 12, 11}));
  EXPECT_EQ(types_of(plan), "IPBBBIBPBBBPB");
  const auto six = std::find_if(plan.begin(), plan.end(),
                                [](const FramePlan& p) { return p.display_index == 6; });
  EXPECT_TRUE(six->scene_start);
  EXPECT_EQ(six->ref_fwd, -1);
}

TEST(PlanGop, EveryFrameAppearsOnce) {
  for (int n = 1; n < 40; ++n) {
    for (int g = 1; g < 7; ++g) {
      auto order = display_order_of(plan_gop(n, g));
      std::sort(order.begin(), order.end());
      for (int i = 0; i < n; ++i) ASSERT_EQ(order[static_cast<std::size_t>(i)], i);
    }
  }
}

TEST(PlanGop, GopLengthOneHasNoBFrames) {
  EXPECT_EQ(types_of(plan_gop(5, 1)), "IPPPP");
}

TEST(PlanGop, Rejections) {
  EXPECT_EQ(testing::code_of([] { plan_gop(5, 0); }), ErrorCode::kInvalidArgument);
  EXPECT_EQ(testing::code_of([] { plan_gop(5, 4, std::vector<bool>(4)); }),
            ErrorCode::kInvalidArgument);
}

}  // namespace
}  // namespace lfg
