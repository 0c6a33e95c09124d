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

#include "lfg/gop.hpp"

#include "lfg/error.hpp"

namespace lfg {

std::vector<FramePlan> plan_gop(int frame_count, int gop_length,
                                const std::vector<bool>& scene_cuts) {
  if (gop_length < 1 || frame_count < 0) {
    throw Error(ErrorCode::kInvalidArgument, "plan_gop: gop_length must be >= 1");
  }
  if (!scene_cuts.empty() && scene_cuts.size() != static_cast<std::size_t>(frame_count)) {
    throw Error(ErrorCode::kInvalidArgument, "plan_gop: one scene-cut flag per frame");
  }
  auto is_cut = [&](int i) {
    return i == 0 || (!scene_cuts.empty() && scene_cuts[static_cast<std::size_t>(i)]);
  };

  std::vector<int> anchors;
  int phase_start = 0;
  for (int i = 0; i < frame_count; ++i) {
    if (is_cut(i)) phase_start = i;
    if (is_cut(i) || (i - phase_start) % gop_length == 0 || i == frame_count - 1) {
      anchors.push_back(i);
    }
  }

  std::vector<FramePlan> plans;
  plans.reserve(static_cast<std::size_t>(frame_count));
  int prev_anchor = -1;
  for (int anchor : anchors) {
    FramePlan a;
    a.display_index = anchor;
    a.scene_start = is_cut(anchor);
    a.type = a.scene_start ? FrameType::kI : FrameType::kP;
    a.ref_fwd = a.type == FrameType::kP ? prev_anchor : -1;
    a.coding_order = static_cast<int>(plans.size());
    plans.push_back(a);
    for (int b = prev_anchor + 1; prev_anchor >= 0 && b < anchor; ++b) {
      FramePlan p;
      p.display_index = b;
      p.type = FrameType::kB;
      p.ref_fwd = prev_anchor;
      p.ref_bwd = anchor;
      p.coding_order = static_cast<int>(plans.size());
      plans.push_back(p);
    }
    prev_anchor = anchor;
  }
  return plans;
}

}  // namespace lfg
