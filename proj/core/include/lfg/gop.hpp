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

#ifndef LFG_GOP_HPP
#define LFG_GOP_HPP

#include <vector>

#include "lfg/types.hpp"

namespace lfg {

struct FramePlan {
  int display_index = 0;
  int coding_order = 0;
  FrameType type = FrameType::kI;
  int ref_fwd = -1;  // display index of the past anchor, -1 if none
  int ref_bwd = -1;  // display index of the future anchor (B frames only)
  bool scene_start = false;  // first frame or detected cut; resets the controller
};

// Non-hierarchical GOP layout. Anchors sit at every gop_length-th frame from
// the start of each scene and on the final frame; frame 0 and every flagged
// scene cut are I, other anchors P, everything between two anchors B.
// Anchors are coded first, then the B frames they close, e.g. display
// 0..8 with gop_length 4 codes as 0,4,1,2,3,8,5,6,7.
// `scene_cuts` may be empty (no cuts) or hold one flag per frame.
// Returns plans in coding order. Throws Error(kInvalidArgument) for
// gop_length < 1 or a flag vector of the wrong size.
std::vector<FramePlan> plan_gop(int frame_count, int gop_length,
                                const std::vector<bool>& scene_cuts = {});

}  // namespace lfg

#endif  // LFG_GOP_HPP
