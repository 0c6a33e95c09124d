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

#ifndef LFG_TRANSFORM_HPP
#define LFG_TRANSFORM_HPP

#include <array>
#include <cstdint>

namespace lfg {

constexpr int kTransformSize = 8;
constexpr int kMinQp = 0;
constexpr int kMaxQp = 51;

// Row-major 8x8 block of residual samples or transform coefficients.
using Block8 = std::array<std::int32_t, 64>;

// Sequency-ordered 8x8 Walsh-Hadamard transform with integer output
// C = 2 * W X W^T, i.e. orthonormal coefficients in Q4 fixed point
// (16 units per orthonormal unit). For residuals in [-255, 255] the
// inverse reproduces the input exactly.
Block8 fdct8(const Block8& residual);

// X = round(W^T C W / 128). Exact inverse of fdct8 on its image; for other
// inputs (dequantized coefficients) rounds half up.
Block8 idct8(const Block8& coefficients);

// Quantizer step size for `qp` in Q4 units: base[qp % 6] << (qp / 6) with
// base = {10, 11, 13, 14, 16, 18}, so Qstep(4) = 1.0 and the step doubles
// every 6 QP. Throws Error(kOutOfRange) outside [0, 51].
std::int32_t qstep_q4(int qp);
double qstep(int qp);

// Round to nearest, ties away from zero.
Block8 quantize(const Block8& coefficients, int qp);
Block8 dequantize(const Block8& levels, int qp);

// Zig-zag scan position -> raster index.
extern const std::array<std::uint8_t, 64> kZigzag8;

}  // namespace lfg

#endif  // LFG_TRANSFORM_HPP
