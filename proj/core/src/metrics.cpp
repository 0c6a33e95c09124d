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

#include "lfg/metrics.hpp"

#include <algorithm>
#include <cmath>

#include "lfg/error.hpp"

namespace lfg::metrics {

namespace {

// Solves the 4x4 system in place with partial pivoting.
std::array<double, 4> solve4(std::array<std::array<double, 5>, 4> m) {
  for (int col = 0; col < 4; ++col) {
    int pivot = col;
    for (int r = col + 1; r < 4; ++r) {
      if (std::fabs(m[r][col]) > std::fabs(m[pivot][col])) pivot = r;
    }
    if (m[pivot][col] == 0.0) {
      throw Error(ErrorCode::kInvalidCurve, "cubic fit: singular normal equations");
    }
    std::swap(m[col], m[pivot]);
    for (int r = col + 1; r < 4; ++r) {
      const double f = m[r][col] / m[col][col];
      for (int c = col; c < 5; ++c) m[r][c] -= f * m[col][c];
    }
  }
  std::array<double, 4> x{};
  for (int r = 3; r >= 0; --r) {
    double acc = m[r][4];
    for (int c = r + 1; c < 4; ++c) acc -= m[r][c] * x[c];
    x[r] = acc / m[r][r];
  }
  return x;
}

struct Interval {
  double lo;
  double hi;
};

Interval overlap(std::span<const double> a, std::span<const double> b) {
  const auto [a_lo, a_hi] = std::minmax_element(a.begin(), a.end());
  const auto [b_lo, b_hi] = std::minmax_element(b.begin(), b.end());
  const Interval iv{std::max(*a_lo, *b_lo), std::min(*a_hi, *b_hi)};
  if (!(iv.hi > iv.lo)) {
    throw Error(ErrorCode::kEmptyOverlap, "bd: curves do not overlap");
  }
  return iv;
}

struct Columns {
  std::vector<double> log_rate;
  std::vector<double> psnr;
};

Columns columns(const RDCurve& curve) {
  Columns c;
  for (const auto& p : curve.points()) {
    c.log_rate.push_back(std::log10(p.bitrate));
    c.psnr.push_back(p.psnr);
  }
  return c;
}

}  // namespace

std::uint64_t ssd_luma(const VideoFrame& a, const VideoFrame& b) {
  if (a.width() != b.width() || a.height() != b.height()) {
    throw Error(ErrorCode::kDimensionMismatch, "mse: frame sizes differ");
  }
  const auto sa = a.y.samples();
  const auto sb = b.y.samples();
  std::uint64_t ssd = 0;
  for (std::size_t i = 0; i < sa.size(); ++i) {
    const int d = static_cast<int>(sa[i]) - static_cast<int>(sb[i]);
    ssd += static_cast<std::uint64_t>(d * d);
  }
  return ssd;
}

double mse(const VideoFrame& a, const VideoFrame& b) {
  return static_cast<double>(ssd_luma(a, b)) / static_cast<double>(a.y.size());
}

double psnr(double mse) {
  constexpr double kPeak2 = 255.0 * 255.0;
  if (mse < kPeak2 * std::pow(10.0, -kPsnrCap / 10.0)) return kPsnrCap;
  return 10.0 * std::log10(kPeak2 / mse);
}

RDCurve::RDCurve(std::vector<RDPoint> points) : points_(std::move(points)) {
  if (points_.size() < 4) {
    throw Error(ErrorCode::kInvalidCurve, "rd curve needs at least 4 points");
  }
  for (const auto& p : points_) {
    if (!(p.bitrate > 0.0) || !std::isfinite(p.bitrate) || !std::isfinite(p.psnr)) {
      throw Error(ErrorCode::kInvalidCurve, "rd curve: bitrate must be > 0 and values finite");
    }
  }
  std::sort(points_.begin(), points_.end(),
            [](const RDPoint& a, const RDPoint& b) { return a.bitrate < b.bitrate; });
  for (std::size_t i = 1; i < points_.size(); ++i) {
    if (!(points_[i].bitrate > points_[i - 1].bitrate)) {
      throw Error(ErrorCode::kInvalidCurve, "rd curve: duplicate bitrate");
    }
    if (!(points_[i].psnr > points_[i - 1].psnr)) {
      throw Error(ErrorCode::kInvalidCurve, "rd curve: psnr not increasing with bitrate");
    }
  }
}

double Cubic::operator()(double x) const {
  const double t = (x - center) / scale;
  return coef[0] + t * (coef[1] + t * (coef[2] + t * coef[3]));
}

double Cubic::integral(double lo, double hi) const {
  auto antiderivative = [this](double x) {
    const double t = (x - center) / scale;
    return t * (coef[0] + t * (coef[1] / 2.0 + t * (coef[2] / 3.0 + t * coef[3] / 4.0)));
  };
  return scale * (antiderivative(hi) - antiderivative(lo));
}

Cubic fit_cubic(std::span<const double> x, std::span<const double> y) {
  if (x.size() != y.size() || x.size() < 4) {
    throw Error(ErrorCode::kInvalidCurve, "cubic fit needs at least 4 (x, y) pairs");
  }
  Cubic fit;
  double sum = 0.0;
  for (double v : x) sum += v;
  fit.center = sum / static_cast<double>(x.size());
  double spread = 0.0;
  for (double v : x) spread = std::max(spread, std::fabs(v - fit.center));
  if (!(spread > 0.0)) {
    throw Error(ErrorCode::kInvalidCurve, "cubic fit: abscissae all equal");
  }
  fit.scale = spread;

  std::array<std::array<double, 5>, 4> normal{};
  for (std::size_t i = 0; i < x.size(); ++i) {
    const double t = (x[i] - fit.center) / fit.scale;
    const double pw[4] = {1.0, t, t * t, t * t * t};
    for (int r = 0; r < 4; ++r) {
      for (int c = 0; c < 4; ++c) normal[r][c] += pw[r] * pw[c];
      normal[r][4] += pw[r] * y[i];
    }
  }
  fit.coef = solve4(normal);
  return fit;
}

double bd_psnr(const RDCurve& anchor, const RDCurve& test) {
  const Columns a = columns(anchor);
  const Columns t = columns(test);
  const Interval iv = overlap(a.log_rate, t.log_rate);
  const Cubic fa = fit_cubic(a.log_rate, a.psnr);
  const Cubic ft = fit_cubic(t.log_rate, t.psnr);
  return (ft.integral(iv.lo, iv.hi) - fa.integral(iv.lo, iv.hi)) / (iv.hi - iv.lo);
}

double bd_rate(const RDCurve& anchor, const RDCurve& test) {
  const Columns a = columns(anchor);
  const Columns t = columns(test);
  const Interval iv = overlap(a.psnr, t.psnr);
  const Cubic fa = fit_cubic(a.psnr, a.log_rate);
  const Cubic ft = fit_cubic(t.psnr, t.log_rate);
  const double delta = (ft.integral(iv.lo, iv.hi) - fa.integral(iv.lo, iv.hi)) / (iv.hi - iv.lo);
  return (std::pow(10.0, delta) - 1.0) * 100.0;
}

}  // namespace lfg::metrics
