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

#include "lfg/rdo.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "lfg/error.hpp"
#include "lfg/transform.hpp"

namespace lfg::rdo {

namespace {

template <typename Cost, typename Candidates, typename CostFn>
std::size_t argmin_index(const Candidates& candidates, CostFn cost_of) {
  if (candidates.empty()) {
    throw Error(ErrorCode::kInvalidArgument, "select_mode: empty candidate list");
  }
  std::size_t best = 0;
  Cost best_cost = cost_of(candidates[0]);
  for (std::size_t i = 1; i < candidates.size(); ++i) {
    const Cost c = cost_of(candidates[i]);
    if (c < best_cost ||
        (c == best_cost && mode_rank(candidates[i].mode) < mode_rank(candidates[best].mode))) {
      best = i;
      best_cost = c;
    }
  }
  return best;
}

}  // namespace

double lambda_orig(const LambdaQuery& query) {
  if (query.qp < kMinQp || query.qp > kMaxQp) {
    throw Error(ErrorCode::kOutOfRange, "lambda_orig: qp " + std::to_string(query.qp));
  }
  if (!(query.p > 0.0) || query.n_b < 0) {
    throw Error(ErrorCode::kInvalidArgument, "lambda_orig: need p > 0 and n_b >= 0");
  }
  const double base = std::exp2((query.qp - 12) / 3.0);
  const double b_factor = std::clamp((query.qp - 12) / 6.0, 2.0, 4.0);
  if (query.profile == Profile::kH264Like) {
    switch (query.frame_type) {
      case FrameType::kI: return 0.57 * base;
      case FrameType::kP: return 0.85 * base;
      case FrameType::kB: return 0.68 * b_factor * base;
    }
  } else {
    switch (query.frame_type) {
      case FrameType::kI:
        return (1.0 - std::clamp(0.05 * query.n_b, 0.0, 0.5)) * 0.57 * base;
      case FrameType::kP: return query.p * base;
      case FrameType::kB: return query.p * b_factor * base;
    }
  }
  return 0.0;
}

ModeChoice select_mode(std::span<const ModeCandidate> candidates, double lambda) {
  auto cost_of = [lambda](const ModeCandidate& c) {
    return rd_cost(c.distortion, c.rate, lambda);
  };
  const std::size_t i = argmin_index<double>(candidates, cost_of);
  return {candidates[i].mode, cost_of(candidates[i]), i};
}

FixedLambda FixedLambda::from(double lambda) {
  if (!(lambda >= 0.0) || !std::isfinite(lambda)) {
    throw Error(ErrorCode::kInvalidArgument, "lambda must be finite and >= 0");
  }
  return {std::llround(lambda * 1000.0)};
}

FixedChoice select_mode(std::span<const FixedCandidate> candidates, FixedLambda lambda) {
  auto cost_of = [lambda](const FixedCandidate& c) {
    return rd_cost_fixed(c.distortion, c.bits, lambda);
  };
  const std::size_t i = argmin_index<std::int64_t>(candidates, cost_of);
  return {candidates[i].mode, cost_of(candidates[i]), i};
}

}  // namespace lfg::rdo
