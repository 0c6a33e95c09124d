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

#ifndef LFG_ADAPTIVE_LAMBDA_HPP
#define LFG_ADAPTIVE_LAMBDA_HPP

#include "lfg/types.hpp"

namespace lfg::adaptive {

// Power model f(r) = a * r^b + c mapping the P/B distortion ratio to a
// multiplier scale, with a dead band (r1, r2) where no change is made.
struct ControllerParams {
  double a = 2.696;
  double b = 10.06;
  double c = 0.367;
  double r1 = 0.81;
  double r2 = 0.93;
  // Apply f(r) to the formula lambda instead of the previous B lambda.
  // Off by default; the per-step clip still applies.
  bool scale_from_orig = false;

  static ControllerParams for_profile(Profile profile);

  double factor(double ratio) const;
};

// Largest relative change between consecutive B-frame multipliers.
constexpr double kMaxStepDown = 0.95;
constexpr double kMaxStepUp = 1.05;

// Weight of the newest MSE in the distortion index update.
constexpr double kNewestWeight = 0.8;

struct ControllerState {
  ControllerParams params;
  int n_b = 3;
  double d_p = 0.0;
  double d_b = 0.0;
  double lambda_last = 1.0;
  int frames_recorded_p = 0;
  int frames_recorded_b = 0;
};

enum class Decision {
  kWarmup,    // not enough history; formula lambda passed through
  kDeadBand,  // ratio inside (r1, r2); previous lambda reused
  kScaled,    // previous lambda scaled by f(r), then clipped
  kHold,      // B index still zero (lossless B frames); previous lambda reused
};

struct LambdaDecision {
  double lambda = 0.0;
  Decision decision = Decision::kWarmup;
  double ratio = 0.0;   // d_p / d_b when ready, else 0
  double factor = 1.0;  // unclipped lambda_mdf / lambda_last
  bool clipped = false;
};

// Fresh controller: indices zero, lambda_last = lambda_orig_b.
// Throws Error(kInvalidArgument) unless lambda_orig_b > 0, n_b >= 0 and
// 0 <= r1 < r2.
ControllerState make_state(const ControllerParams& params, int n_b, double lambda_orig_b);

// D = MSE if D == 0, else 0.2 D + 0.8 MSE. I frames are rejected with
// Error(kInvalidArgument), as are negative or non-finite values.
void record_distortion(ControllerState& state, FrameType type, double mse);

// At least one P record and n_b B records since the last reset.
bool ready(const ControllerState& state);

LambdaDecision next_b_lambda(ControllerState& state, double lambda_orig_b);

void reset(ControllerState& state, double lambda_orig_b);

}  // namespace lfg::adaptive

#endif  // LFG_ADAPTIVE_LAMBDA_HPP
