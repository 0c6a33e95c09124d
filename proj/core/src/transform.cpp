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

#include "lfg/transform.hpp"

#include <string>

#include "lfg/error.hpp"

namespace lfg {

namespace {

// Walsh functions ordered by number of sign changes.
constexpr std::int32_t kWalsh[8][8] = {
    {1, 1, 1, 1, 1, 1, 1, 1},
    {1, 1, 1, 1, -1, -1, -1, -1},
    {1, 1, -1, -1, -1, -1, 1, 1},
    {1, 1, -1, -1, 1, 1, -1, -1},
    {1, -1, -1, 1, 1, -1, -1, 1},
    {1, -1, -1, 1, -1, 1, 1, -1},
    {1, -1, 1, -1, -1, 1, -1, 1},
    {1, -1, 1, -1, 1, -1, 1, -1},
};

constexpr std::int32_t kQstepBase[6] = {10, 11, 13, 14, 16, 18};

void check_qp(int qp) {
  if (qp < kMinQp || qp > kMaxQp) {
    throw Error(ErrorCode::kOutOfRange, "qp " + std::to_string(qp) + " outside [0, 51]");
  }
}

}  // namespace

const std::array<std::uint8_t, 64> kZigzag8 = {
    0,  1,  8,  16, 9,  2,  3,  10, 17, 24, 32, 25, 18, 11, 4,  5,
    12, 19, 26, 33, 40, 48, 41, 34, 27, 20, 13, 6,  7,  14, 21, 28,
    35, 42, 49, 56, 57, 50, 43, 36, 29, 22, 15, 23, 30, 37, 44, 51,
    58, 59, 52, 45, 38, 31, 39, 46, 53, 60, 61, 54, 47, 55, 62, 63};

Block8 fdct8(const Block8& x) {
  // tmp = W X
  std::int32_t tmp[64];
  for (int k = 0; k < 8; ++k) {
    for (int j = 0; j < 8; ++j) {
      std::int32_t acc = 0;
      for (int n = 0; n < 8; ++n) acc += kWalsh[k][n] * x[n * 8 + j];
      tmp[k * 8 + j] = acc;
    }
  }
  // C = 2 * tmp W^T
  Block8 c{};
  for (int k = 0; k < 8; ++k) {
    for (int l = 0; l < 8; ++l) {
      std::int32_t acc = 0;
      for (int j = 0; j < 8; ++j) acc += tmp[k * 8 + j] * kWalsh[l][j];
      c[k * 8 + l] = 2 * acc;
    }
  }
  return c;
}

Block8 idct8(const Block8& c) {
  // tmp = W^T C
  std::int64_t tmp[64];
  for (int n = 0; n < 8; ++n) {
    for (int l = 0; l < 8; ++l) {
      std::int64_t acc = 0;
      for (int k = 0; k < 8; ++k) acc += kWalsh[k][n] * static_cast<std::int64_t>(c[k * 8 + l]);
      tmp[n * 8 + l] = acc;
    }
  }
  // X = round(tmp W / 128)
  Block8 x{};
  for (int n = 0; n < 8; ++n) {
    for (int j = 0; j < 8; ++j) {
      std::int64_t acc = 0;
      for (int l = 0; l < 8; ++l) acc += tmp[n * 8 + l] * kWalsh[l][j];
      x[n * 8 + j] = static_cast<std::int32_t>((acc + 64) >> 7);
    }
  }
  return x;
}

std::int32_t qstep_q4(int qp) {
  check_qp(qp);
  return kQstepBase[qp % 6] << (qp / 6);
}

double qstep(int qp) { return qstep_q4(qp) / 16.0; }

Block8 quantize(const Block8& coefficients, int qp) {
  const std::int32_t step = qstep_q4(qp);
  const std::int32_t half = step / 2;
  Block8 levels{};
  for (std::size_t i = 0; i < levels.size(); ++i) {
    const std::int32_t c = coefficients[i];
    const std::int32_t mag = ((c < 0 ? -c : c) + half) / step;
    levels[i] = c < 0 ? -mag : mag;
  }
  return levels;
}

Block8 dequantize(const Block8& levels, int qp) {
  const std::int32_t step = qstep_q4(qp);
  Block8 c{};
  for (std::size_t i = 0; i < c.size(); ++i) c[i] = levels[i] * step;
  return c;
}

}  // namespace lfg
