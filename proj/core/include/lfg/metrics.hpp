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

#ifndef LFG_METRICS_HPP
#define LFG_METRICS_HPP

#include <array>
#include <cstdint>
#include <span>
#include <vector>

#include "lfg/video_io.hpp"

namespace lfg::metrics {

constexpr double kPsnrCap = 99.0;

// Luma sum of squared differences and its per-pixel mean.
// Throw Error(kDimensionMismatch) for differently sized frames.
std::uint64_t ssd_luma(const VideoFrame& a, const VideoFrame& b);
double mse(const VideoFrame& a, const VideoFrame& b);

// 10 log10(255^2 / mse), capped at 99 dB.
double psnr(double mse);

struct RDPoint {
  double bitrate = 0.0;  // kbit/s
  double psnr = 0.0;     // dB
};

// At least four points, strictly increasing in both bitrate and PSNR.
class RDCurve {
 public:
  // Sorts by bitrate and validates; throws Error(kInvalidCurve).
  explicit RDCurve(std::vector<RDPoint> points);

  std::span<const RDPoint> points() const { return points_; }
  std::size_t size() const { return points_.size(); }

 private:
  std::vector<RDPoint> points_;
};

// Least-squares cubic in the normalised abscissa t = (x - center) / scale.
struct Cubic {
  double center = 0.0;
  double scale = 1.0;
  std::array<double, 4> coef{};  // c0 + c1 t + c2 t^2 + c3 t^3

  double operator()(double x) const;
  // Exact integral over [lo, hi] in x.
  double integral(double lo, double hi) const;
};

// Throws Error(kInvalidCurve) for fewer than four distinct abscissae.
Cubic fit_cubic(std::span<const double> x, std::span<const double> y);

// Average PSNR gain of `test` over `anchor` in dB across the overlapping
// log10-rate interval. Throws Error(kEmptyOverlap).
double bd_psnr(const RDCurve& anchor, const RDCurve& test);

// Average bitrate change of `test` relative to `anchor` in percent across
// the overlapping PSNR interval; negative means savings.
double bd_rate(const RDCurve& anchor, const RDCurve& test);

}  // namespace lfg::metrics

#endif  // LFG_METRICS_HPP
