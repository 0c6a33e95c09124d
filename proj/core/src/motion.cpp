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

#include "lfg/motion.hpp"

#include <algorithm>
#include <cstdlib>
#include <cstring>
#include <limits>

#include "lfg/bitio.hpp"
#include "lfg/error.hpp"

namespace lfg {

PaddedPlane::PaddedPlane(const Plane& source, int margin)
    : width_(source.width()),
      height_(source.height()),
      margin_(margin),
      stride_(source.width() + 2 * margin),
      data_(static_cast<std::size_t>(stride_) * (source.height() + 2 * margin)) {
  for (int y = -margin; y < height_ + margin; ++y) {
    const int sy = std::clamp(y, 0, height_ - 1);
    const std::uint8_t* src = source.row(sy);
    std::uint8_t* dst = data_.data() + (static_cast<std::ptrdiff_t>(y) + margin) * stride_;
    std::memset(dst, src[0], static_cast<std::size_t>(margin));
    std::memcpy(dst + margin, src, static_cast<std::size_t>(width_));
    std::memset(dst + margin + width_, src[width_ - 1], static_cast<std::size_t>(margin));
  }
}

int mv_bits(MotionVector mv, MotionVector predicted) {
  return se_length(mv.dx - predicted.dx) + se_length(mv.dy - predicted.dy);
}

MotionSearcher::MotionSearcher(int range) : range_(range) {
  if (range < 0) throw Error(ErrorCode::kInvalidArgument, "search range must be >= 0");
  for (int dy = -range; dy <= range; ++dy) {
    for (int dx = -range; dx <= range; ++dx) order_.push_back({dx, dy});
  }
  std::sort(order_.begin(), order_.end(), [](MotionVector a, MotionVector b) {
    const int na = std::abs(a.dx) + std::abs(a.dy);
    const int nb = std::abs(b.dx) + std::abs(b.dy);
    if (na != nb) return na < nb;
    if (a.dy != b.dy) return a.dy < b.dy;
    return a.dx < b.dx;
  });
}

SearchResult MotionSearcher::search(std::span<const std::uint8_t, 256> block, int x, int y,
                                    const PaddedPlane& ref, MotionVector predicted,
                                    rdo::FixedLambda lambda) const {
  if (ref.margin() < range_) {
    throw Error(ErrorCode::kInvalidArgument, "reference padding smaller than search range");
  }
  SearchResult best;
  best.cost = std::numeric_limits<std::int64_t>::max();
  const std::ptrdiff_t stride = ref.stride();
  for (const MotionVector mv : order_) {
    const std::int64_t rate_cost = lambda.milli * mv_bits(mv, predicted);
    if (rate_cost >= best.cost) continue;
    const std::uint8_t* r = ref.at(x + mv.dx, y + mv.dy);
    std::int64_t ssd = 0;
    bool pruned = false;
    for (int row = 0; row < kBlockSize; ++row) {
      const std::uint8_t* s = block.data() + row * kBlockSize;
      std::int32_t acc = 0;
      for (int col = 0; col < kBlockSize; ++col) {
        const std::int32_t d = static_cast<std::int32_t>(s[col]) - r[col];
        acc += d * d;
      }
      ssd += acc;
      r += stride;
      if (ssd * 1000 + rate_cost >= best.cost) {
        pruned = true;
        break;
      }
    }
    if (pruned) continue;
    best.mv = mv;
    best.ssd = ssd;
    best.cost = ssd * 1000 + rate_cost;
  }
  return best;
}

SearchResult motion_search(std::span<const std::uint8_t, 256> block, int x, int y,
                           const PaddedPlane& ref, MotionVector predicted, int range,
                           rdo::FixedLambda lambda) {
  return MotionSearcher(range).search(block, x, y, ref, predicted, lambda);
}

}  // namespace lfg
