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

#include "lfg/scene_cut.hpp"

#include <cstdlib>

#include "lfg/error.hpp"

namespace lfg {

LumaHistogram histogram256(const VideoFrame& frame) {
  LumaHistogram h;
  for (std::uint8_t s : frame.y.samples()) ++h.bins[s];
  h.total = frame.y.size();
  return h;
}

double histogram_difference(const LumaHistogram& a, const LumaHistogram& b) {
  if (a.total != b.total) {
    throw Error(ErrorCode::kDimensionMismatch, "histogram totals differ");
  }
  if (a.total == 0) return 0.0;
  std::uint64_t l1 = 0;
  for (std::size_t i = 0; i < a.bins.size(); ++i) {
    l1 += a.bins[i] > b.bins[i] ? a.bins[i] - b.bins[i] : b.bins[i] - a.bins[i];
  }
  return static_cast<double>(l1) / (2.0 * static_cast<double>(a.total));
}

bool is_cut(const VideoFrame& prev, const VideoFrame& curr, double threshold) {
  if (prev.width() != curr.width() || prev.height() != curr.height()) {
    throw Error(ErrorCode::kDimensionMismatch, "is_cut: frame sizes differ");
  }
  return histogram_difference(histogram256(prev), histogram256(curr)) > threshold;
}

std::vector<bool> detect_scene_cuts(std::span<const VideoFrame> frames, double threshold) {
  std::vector<bool> flags(frames.size(), false);
  if (frames.empty()) return flags;
  LumaHistogram prev = histogram256(frames[0]);
  for (std::size_t i = 1; i < frames.size(); ++i) {
    LumaHistogram curr = histogram256(frames[i]);
    flags[i] = histogram_difference(prev, curr) > threshold;
    prev = curr;
  }
  return flags;
}

}  // namespace lfg
