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

#ifndef LFG_RDO_HPP
#define LFG_RDO_HPP

#include <cstddef>
#include <cstdint>
#include <span>

#include "lfg/types.hpp"

namespace lfg::rdo {

struct LambdaQuery {
  int qp = 32;
  FrameType frame_type = FrameType::kB;
  Profile profile = Profile::kH264Like;
  int n_b = 3;       // B frames per GOP, enters the HEVC I-frame factor
  double p = 0.5;    // HEVC P/B constant
};

// Reference-software multiplier as a function of QP:
//   H.264  I: 0.57 * 2^((QP-12)/3)
//          P: 0.85 * 2^((QP-12)/3)
//          B: 0.68 * clip((QP-12)/6, 2, 4) * 2^((QP-12)/3)
//   HEVC   I: (1 - clip(0.05 * N_B, 0, 0.5)) * 0.57 * 2^((QP-12)/3)
//          P: p * 2^((QP-12)/3)
//          B: p * clip((QP-12)/6, 2, 4) * 2^((QP-12)/3)
// Throws Error(kOutOfRange) for qp outside [0, 51] and
// Error(kInvalidArgument) for p <= 0 or n_b < 0.
double lambda_orig(const LambdaQuery& query);

// D + lambda * R.
constexpr double rd_cost(double distortion, double rate_bits, double lambda) {
  return distortion + lambda * rate_bits;
}

struct ModeCandidate {
  BlockMode mode;
  double distortion = 0.0;
  double rate = 0.0;
};

struct ModeChoice {
  BlockMode mode;
  double cost = 0.0;
  std::size_t index = 0;
};

// Argmin of rd_cost; equal costs resolve by mode_rank, then list order.
// Throws Error(kInvalidArgument) on an empty list.
ModeChoice select_mode(std::span<const ModeCandidate> candidates, double lambda);

// Integer form used inside the coding loop. Costs are expressed in
// thousandths: cost = 1000 * SSD + lambda_milli * bits, which equals
// 1000 * rd_cost(SSD, bits, lambda_milli / 1000) without rounding.
struct FixedLambda {
  std::int64_t milli = 0;

  static FixedLambda from(double lambda);
  double value() const { return static_cast<double>(milli) / 1000.0; }
};

constexpr std::int64_t rd_cost_fixed(std::int64_t ssd, std::int64_t bits, FixedLambda lambda) {
  return ssd * 1000 + lambda.milli * bits;
}

struct FixedCandidate {
  BlockMode mode;
  std::int64_t distortion = 0;
  std::int64_t bits = 0;
};

struct FixedChoice {
  BlockMode mode;
  std::int64_t cost = 0;
  std::size_t index = 0;
};

FixedChoice select_mode(std::span<const FixedCandidate> candidates, FixedLambda lambda);

}  // namespace lfg::rdo

#endif  // LFG_RDO_HPP
