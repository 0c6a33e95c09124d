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

#include "lfg/adaptive_lambda.hpp"

#include <cmath>

#include "lfg/error.hpp"

namespace lfg::adaptive {

ControllerParams ControllerParams::for_profile(Profile profile) {
  if (profile == Profile::kHevcLike) {
    return {2.197, 5.196, 0.308, 0.73, 0.89, false};
  }
  return {2.696, 10.06, 0.367, 0.81, 0.93, false};
}

double ControllerParams::factor(double ratio) const { return a * std::pow(ratio, b) + c; }

ControllerState make_state(const ControllerParams& params, int n_b, double lambda_orig_b) {
  if (n_b < 0 || !(params.r1 >= 0.0) || !(params.r1 < params.r2)) {
    throw Error(ErrorCode::kInvalidArgument, "controller: need n_b >= 0 and 0 <= r1 < r2");
  }
  ControllerState state;
  state.params = params;
  state.n_b = n_b;
  reset(state, lambda_orig_b);
  return state;
}

void record_distortion(ControllerState& state, FrameType type, double mse) {
  if (type == FrameType::kI) {
    throw Error(ErrorCode::kInvalidArgument, "controller: I frames carry no distortion index");
  }
  if (!(mse >= 0.0) || !std::isfinite(mse)) {
    throw Error(ErrorCode::kInvalidArgument, "controller: mse must be finite and >= 0");
  }
  double& index = type == FrameType::kP ? state.d_p : state.d_b;
  index = index > 0.0 ? (1.0 - kNewestWeight) * index + kNewestWeight * mse : mse;
  if (type == FrameType::kP) {
    ++state.frames_recorded_p;
  } else {
    ++state.frames_recorded_b;
  }
}

bool ready(const ControllerState& state) {
  return state.frames_recorded_p >= 1 && state.frames_recorded_b >= state.n_b;
}

LambdaDecision next_b_lambda(ControllerState& state, double lambda_orig_b) {
  if (!(lambda_orig_b > 0.0) || !std::isfinite(lambda_orig_b)) {
    throw Error(ErrorCode::kInvalidArgument, "controller: lambda_orig_b must be > 0");
  }
  LambdaDecision out;
  if (!ready(state)) {
    state.lambda_last = lambda_orig_b;
    out.lambda = lambda_orig_b;
    out.decision = Decision::kWarmup;
    return out;
  }
  const double last = state.lambda_last;
  if (state.d_b <= 0.0) {
    // Every recorded B frame was lossless; there is no ratio to act on.
    out.lambda = last;
    out.decision = Decision::kHold;
    return out;
  }
  const double r = state.d_p / state.d_b;
  out.ratio = r;
  if (state.params.r1 < r && r < state.params.r2) {
    out.lambda = last;
    out.decision = Decision::kDeadBand;
    return out;
  }
  const double base = state.params.scale_from_orig ? lambda_orig_b : last;
  double mdf = base * state.params.factor(r);
  out.factor = mdf / last;
  const double lo = kMaxStepDown * last;
  const double hi = kMaxStepUp * last;
  if (mdf < lo) {
    mdf = lo;
    out.clipped = true;
  } else if (mdf > hi) {
    mdf = hi;
    out.clipped = true;
  }
  state.lambda_last = mdf;
  out.lambda = mdf;
  out.decision = Decision::kScaled;
  return out;
}

void reset(ControllerState& state, double lambda_orig_b) {
  if (!(lambda_orig_b > 0.0) || !std::isfinite(lambda_orig_b)) {
    throw Error(ErrorCode::kInvalidArgument, "controller: lambda_orig_b must be > 0");
  }
  state.d_p = 0.0;
  state.d_b = 0.0;
  state.frames_recorded_p = 0;
  state.frames_recorded_b = 0;
  state.lambda_last = lambda_orig_b;
}

}  // namespace lfg::adaptive
