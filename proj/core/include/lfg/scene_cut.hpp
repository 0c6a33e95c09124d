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

#ifndef LFG_SCENE_CUT_HPP
#define LFG_SCENE_CUT_HPP

#include <array>
#include <cstdint>
#include <span>
#include <vector>

#include "lfg/video_io.hpp"

namespace lfg {

struct LumaHistogram {
  std::array<std::uint32_t, 256> bins{};
  std::uint64_t total = 0;
};

LumaHistogram histogram256(const VideoFrame& frame);

// Normalised L1 distance sum|h1 - h2| / (2 * total), in [0, 1].
// Throws Error(kDimensionMismatch) when the totals differ.
double histogram_difference(const LumaHistogram& a, const LumaHistogram& b);

// True iff the histogram difference strictly exceeds `threshold`.
bool is_cut(const VideoFrame& prev, const VideoFrame& curr, double threshold);

// Per display index: flags[i] = is_cut(frames[i-1], frames[i]); flags[0] = false.
std::vector<bool> detect_scene_cuts(std::span<const VideoFrame> frames, double threshold);

}  // namespace lfg

#endif  // LFG_SCENE_CUT_HPP
