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

#ifndef LFG_POWER_FIT_HPP
#define LFG_POWER_FIT_HPP

#include <span>

namespace lfg {

struct PowerPoint {
  double r_pb = 0.0;      // distortion ratio D_P / D_B
  double r_lambda = 0.0;  // lambda_opt / lambda_orig
};

struct FitResult {
  double a = 0.0;
  double b = 0.0;
  double c = 0.0;
  double rss = 0.0;
  int points = 0;

  double operator()(double r) const;
};

struct PowerFitOptions {
  double b_min = 0.1;
  double b_max = 20.0;
  int grid_points = 400;
};

// Least-squares fit of r_lambda = a * r_pb^b + c. For a fixed exponent the
// pair (a, c) is a closed-form linear regression; the exponent is located on
// a grid over [b_min, b_max] and refined by golden-section search around the
// best grid node. Throws Error(kInvalidArgument) for fewer than four points
// or r_pb <= 0 and Error(kDegenerateFit) when every r_pb is equal.
FitResult fit_power(std::span<const PowerPoint> points, const PowerFitOptions& options = {});

}  // namespace lfg

#endif  // LFG_POWER_FIT_HPP
