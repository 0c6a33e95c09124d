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

#ifndef LFG_BLOCK_CODER_HPP
#define LFG_BLOCK_CODER_HPP

#include <array>
#include <cstdint>

#include "lfg/bitio.hpp"
#include "lfg/motion.hpp"
#include "lfg/transform.hpp"
#include "lfg/types.hpp"
#include "lfg/video_io.hpp"

// Macroblock layer shared by the encoder and the decoder: prediction,
// residual coding, reconstruction and the block syntax.
namespace lfg::block {

constexpr int kChromaSize = kBlockSize / 2;
// Four 8x8 luma transforms (raster order), then U, then V.
constexpr int kCoeffBlocks = 6;

using Levels = std::array<Block8, kCoeffBlocks>;

struct Pixels {
  std::array<std::uint8_t, kBlockSize * kBlockSize> y{};
  std::array<std::uint8_t, kChromaSize * kChromaSize> u{};
  std::array<std::uint8_t, kChromaSize * kChromaSize> v{};
};

struct Anchor {
  PaddedPlane y;
  PaddedPlane u;
  PaddedPlane v;
};

// Pads a reconstructed picture for motion compensation with a luma
// displacement of up to `range`.
Anchor make_anchor(const VideoFrame& recon, int range);

struct Picture {
  Plane y;
  Plane u;
  Plane v;
};

Pixels extract(const Picture& picture, int x, int y);
void store(Picture& picture, int x, int y, const Pixels& pixels);

// Chroma displacement: floor(mv / 2) per component.
constexpr MotionVector chroma_mv(MotionVector mv) { return {mv.dx >> 1, mv.dy >> 1}; }

// Prediction for the block at luma position (x, y). Intra modes read the
// already reconstructed neighbours in `current`; missing neighbours
// predict 128. SKIP is the co-located block (P) or the rounded average of
// both co-located blocks (B).
Pixels predict(const BlockMode& mode, FrameType type, const Anchor* fwd, const Anchor* bwd,
               const Picture& current, int x, int y);

Levels quantize_residual(const Pixels& source, const Pixels& prediction, int qp);
Pixels reconstruct(const Pixels& prediction, const Levels& levels, int qp);
bool all_zero(const Levels& levels);

struct BlockSyntax {
  BlockMode mode;
  MotionVector mvd_fwd;
  MotionVector mvd_bwd;
  Levels levels{};  // ignored for SKIP
};

// Mode index written after the skip flag.
int mode_index(const BlockMode& mode, FrameType type);

template <typename Sink>
void write_levels(Sink& sink, const Block8& levels) {
  std::uint32_t nonzero = 0;
  for (auto v : levels) nonzero += v != 0;
  put_ue(sink, nonzero);
  std::uint32_t run = 0;
  for (int pos = 0; pos < 64 && nonzero > 0; ++pos) {
    const std::int32_t level = levels[kZigzag8[static_cast<std::size_t>(pos)]];
    if (level == 0) {
      ++run;
      continue;
    }
    put_ue(sink, run);
    put_se(sink, level);
    run = 0;
    --nonzero;
  }
}

// Syntax per block:
//   P/B: skip flag u(1); SKIP ends the block.
//   P: ue(mode) {0 FWD, 1 INTRA}; B: ue(mode) {0 FWD, 1 BWD, 2 BI, 3 INTRA}
//   INTRA: ue(sub-mode) {0 DC, 1 H, 2 V}
//   FWD/BI: se(mvd_fwd.dx) se(mvd_fwd.dy); BWD/BI: se(mvd_bwd.dx) se(mvd_bwd.dy)
//   six coefficient blocks, each ue(count) then count x {ue(zero run) se(level)}
//   in zig-zag order.
template <typename Sink>
void write_block(Sink& sink, FrameType type, const BlockSyntax& syntax) {
  const BlockMode& mode = syntax.mode;
  if (type != FrameType::kI) {
    const bool skip = mode.kind == ModeKind::kSkip;
    sink.put_bit(skip);
    if (skip) return;
    put_ue(sink, static_cast<std::uint32_t>(mode_index(mode, type)));
  }
  if (mode.kind == ModeKind::kIntra) put_ue(sink, static_cast<std::uint32_t>(mode.intra));
  if (mode.uses_fwd()) {
    put_se(sink, syntax.mvd_fwd.dx);
    put_se(sink, syntax.mvd_fwd.dy);
  }
  if (mode.uses_bwd()) {
    put_se(sink, syntax.mvd_bwd.dx);
    put_se(sink, syntax.mvd_bwd.dy);
  }
  for (const auto& b : syntax.levels) write_levels(sink, b);
}

std::uint64_t block_bits(FrameType type, const BlockSyntax& syntax);

// Throws Error(kMalformedCode) for illegal mode indices or coefficient runs.
BlockSyntax read_block(BitReader& reader, FrameType type);

}  // namespace lfg::block

#endif  // LFG_BLOCK_CODER_HPP
