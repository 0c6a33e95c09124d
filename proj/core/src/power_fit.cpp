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

#include "lfg/power_fit.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "lfg/error.hpp"

namespace lfg {

namespace {

FitResult fit_for_exponent(std::span<const PowerPoint> pts, double b) {
  const double n = static_cast<double>(pts.size());
  double mx = 0.0;
  double my = 0.0;
  for (const auto& p : pts) {
    mx += std::pow(p.r_pb, b);
    my += p.r_lambda;
  }
  mx /= n;
  my /= n;
  double sxx = 0.0;
  double sxy = 0.0;
  for (const auto& p : pts) {
    const double dx = std::pow(p.r_pb, b) - mx;
    sxx += dx * dx;
    sxy += dx * (p.r_lambda - my);
  }
  FitResult f;
  f.b = b;
  f.a = sxx > 0.0 ? sxy / sxx : 0.0;
  f.c = my - f.a * mx;
  for (const auto& p : pts) {
    const double e = p.r_lambda - (f.a * std::pow(p.r_pb, b) + f.c);
    f.rss += e * e;
  }
  f.points = static_cast<int>(pts.size());
  return f;
}

}  // namespace

double FitResult::operator()(double r) const { return a * std::pow(r, b) + c; }

FitResult fit_power(std::span<const PowerPoint> points, const PowerFitOptions& options) {
  if (points.size() < 4) {
    throw Error(ErrorCode::kInvalidArgument, "fit_power: need at least 4 points");
  }
  for (const auto& p : points) {
    if (!(p.r_pb > 0.0) || !std::isfinite(p.r_pb) || !std::isfinite(p.r_lambda)) {
      throw Error(ErrorCode::kInvalidArgument, "fit_power: r_pb must be finite and > 0");
    }
  }
  const auto [lo, hi] = std::minmax_element(points.begin(), points.end(),
      [](const PowerPoint& a, const PowerPoint& b) { return a.r_pb < b.r_pb; });
  if (lo->r_pb == hi->r_pb) {
    throw Error(ErrorCode::kDegenerateFit, "fit_power: all r_pb values are equal");
  }
  if (!(options.b_min < options.b_max) || options.grid_points < 3) {
    throw Error(ErrorCode::kInvalidArgument, "fit_power: bad exponent search options");
  }

  const int n = options.grid_points;
  const double step = (options.b_max - options.b_min) / (n - 1);
  FitResult best = fit_for_exponent(points, options.b_min);
  int best_i = 0;
  for (int i = 1; i < n; ++i) {
    const FitResult f = fit_for_exponent(points, options.b_min + step * i);
    if (f.rss < best.rss) {
      best = f;
      best_i = i;
    }
  }

  // Golden-section refinement inside the bracket of neighbouring nodes.
  double left = options.b_min + step * std::max(best_i - 1, 0);
  double right = options.b_min + step * std::min(best_i + 1, n - 1);
  const double inv_phi = (std::sqrt(5.0) - 1.0) / 2.0;
  double x1 = right - inv_phi * (right - left);
  double x2 = left + inv_phi * (right - left);
  FitResult f1 = fit_for_exponent(points, x1);
  FitResult f2 = fit_for_exponent(points, x2);
  for (int iter = 0; iter < 200 && right - left > 1e-13 * (1.0 + std::fabs(left)); ++iter) {
    if (f1.rss <= f2.rss) {
      right = x2;
      x2 = x1;
      f2 = f1;
      x1 = right - inv_phi * (right - left);
      f1 = fit_for_exponent(points, x1);
    } else {
      left = x1;
      x1 = x2;
      f1 = f2;
      x2 = left + inv_phi * (right - left);
      f2 = fit_for_exponent(points, x2);
    }
  }
  for (const FitResult& f : {f1, f2}) {
    if (f.rss < best.rss) best = f;
  }
  return best;
}

}  // namespace lfg
