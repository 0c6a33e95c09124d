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

#ifndef LFG_MOTION_HPP
#define LFG_MOTION_HPP

#include <cstdint>
#include <span>
#include <vector>

#include "lfg/rdo.hpp"
#include "lfg/types.hpp"
#include "lfg/video_io.hpp"

namespace lfg {

constexpr int kBlockSize = 16;

// Copy of a plane with `margin` samples of edge replication on every side.
class PaddedPlane {
 public:
  PaddedPlane() = default;
  PaddedPlane(const Plane& source, int margin);

  int width() const { return width_; }
  int height() const { return height_; }
  int margin() const { return margin_; }
  std::ptrdiff_t stride() const { return stride_; }

  // Valid for x, y in [-margin, size + margin).
  const std::uint8_t* at(int x, int y) const {
    return data_.data() + (static_cast<std::ptrdiff_t>(y) + margin_) * stride_ + x + margin_;
  }

 private:
  int width_ = 0;
  int height_ = 0;
  int margin_ = 0;
  std::ptrdiff_t stride_ = 0;
  std::vector<std::uint8_t> data_;
};

// Exp-Golomb cost of the motion vector difference mv - predicted.
int mv_bits(MotionVector mv, MotionVector predicted);

struct SearchResult {
  MotionVector mv;
  std::int64_t ssd = 0;
  std::int64_t cost = 0;  // rd_cost_fixed(ssd, mv_bits, lambda)
};

// Exhaustive integer-pel search over [-range, range]^2 minimising
// SSD + lambda * mv_bits. Ties go to the smaller |dx| + |dy|, then the
// smaller dy, then the smaller dx.
class MotionSearcher {
 public:
  explicit MotionSearcher(int range);

  int range() const { return range_; }
  // Candidate displacements in tie-break order.
  std::span<const MotionVector> order() const { return order_; }

  // `block` is the 16x16 source block (row stride 16) located at (x, y).
  SearchResult search(std::span<const std::uint8_t, 256> block, int x, int y,
                      const PaddedPlane& ref, MotionVector predicted,
                      rdo::FixedLambda lambda) const;

 private:
  int range_;
  std::vector<MotionVector> order_;
};

SearchResult motion_search(std::span<const std::uint8_t, 256> block, int x, int y,
                           const PaddedPlane& ref, MotionVector predicted, int range,
                           rdo::FixedLambda lambda);

}  // namespace lfg

#endif  // LFG_MOTION_HPP
