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

#include "lfg/block_coder.hpp"

#include <algorithm>

#include "lfg/error.hpp"

namespace lfg::block {

namespace {

template <std::size_t N>
void copy_block(const PaddedPlane& ref, int x, int y, int size, std::array<std::uint8_t, N>& out) {
  for (int r = 0; r < size; ++r) {
    const std::uint8_t* src = ref.at(x, y + r);
    std::copy(src, src + size, out.begin() + r * size);
  }
}

template <std::size_t N>
void average_into(std::array<std::uint8_t, N>& a, const std::array<std::uint8_t, N>& b) {
  for (std::size_t i = 0; i < N; ++i) {
    a[i] = static_cast<std::uint8_t>((a[i] + b[i] + 1) >> 1);
  }
}

Pixels motion_compensate(const Anchor& ref, int x, int y, MotionVector mv) {
  Pixels p;
  copy_block(ref.y, x + mv.dx, y + mv.dy, kBlockSize, p.y);
  const MotionVector c = chroma_mv(mv);
  copy_block(ref.u, x / 2 + c.dx, y / 2 + c.dy, kChromaSize, p.u);
  copy_block(ref.v, x / 2 + c.dx, y / 2 + c.dy, kChromaSize, p.v);
  return p;
}

template <std::size_t N>
void intra_plane(const Plane& plane, int x, int y, int size, IntraMode mode,
                 std::array<std::uint8_t, N>& out) {
  const bool has_top = y > 0;
  const bool has_left = x > 0;
  switch (mode) {
    case IntraMode::kDc: {
      int sum = 0;
      int count = 0;
      if (has_top) {
        for (int i = 0; i < size; ++i) sum += plane.at(x + i, y - 1);
        count += size;
      }
      if (has_left) {
        for (int i = 0; i < size; ++i) sum += plane.at(x - 1, y + i);
        count += size;
      }
      const auto dc = static_cast<std::uint8_t>(count ? (sum + count / 2) / count : 128);
      out.fill(dc);
      break;
    }
    case IntraMode::kHorizontal:
      for (int r = 0; r < size; ++r) {
        const std::uint8_t v = has_left ? plane.at(x - 1, y + r) : 128;
        std::fill_n(out.begin() + r * size, size, v);
      }
      break;
    case IntraMode::kVertical:
      for (int r = 0; r < size; ++r) {
        for (int c = 0; c < size; ++c) {
          out[static_cast<std::size_t>(r * size + c)] = has_top ? plane.at(x + c, y - 1) : 128;
        }
      }
      break;
  }
}

// Residual block `index` (0-3 luma quadrants, 4 U, 5 V) as signed samples.
Block8 residual_block(const Pixels& src, const Pixels& pred, int index) {
  Block8 r{};
  if (index < 4) {
    const int ox = (index & 1) * 8;
    const int oy = (index >> 1) * 8;
    for (int row = 0; row < 8; ++row) {
      for (int col = 0; col < 8; ++col) {
        const std::size_t i = static_cast<std::size_t>((oy + row) * kBlockSize + ox + col);
        r[static_cast<std::size_t>(row * 8 + col)] = src.y[i] - pred.y[i];
      }
    }
  } else {
    const auto& s = index == 4 ? src.u : src.v;
    const auto& p = index == 4 ? pred.u : pred.v;
    for (std::size_t i = 0; i < 64; ++i) r[i] = s[i] - p[i];
  }
  return r;
}

std::uint8_t clip8(std::int32_t v) { return static_cast<std::uint8_t>(std::clamp(v, 0, 255)); }

}  // namespace

Anchor make_anchor(const VideoFrame& recon, int range) {
  return {PaddedPlane(recon.y, range), PaddedPlane(recon.u, range / 2 + 1),
          PaddedPlane(recon.v, range / 2 + 1)};
}

Pixels extract(const Picture& picture, int x, int y) {
  Pixels p;
  for (int r = 0; r < kBlockSize; ++r) {
    std::copy_n(picture.y.row(y + r) + x, kBlockSize, p.y.begin() + r * kBlockSize);
  }
  for (int r = 0; r < kChromaSize; ++r) {
    std::copy_n(picture.u.row(y / 2 + r) + x / 2, kChromaSize, p.u.begin() + r * kChromaSize);
    std::copy_n(picture.v.row(y / 2 + r) + x / 2, kChromaSize, p.v.begin() + r * kChromaSize);
  }
  return p;
}

void store(Picture& picture, int x, int y, const Pixels& p) {
  for (int r = 0; r < kBlockSize; ++r) {
    std::copy_n(p.y.begin() + r * kBlockSize, kBlockSize, picture.y.row(y + r) + x);
  }
  for (int r = 0; r < kChromaSize; ++r) {
    std::copy_n(p.u.begin() + r * kChromaSize, kChromaSize, picture.u.row(y / 2 + r) + x / 2);
    std::copy_n(p.v.begin() + r * kChromaSize, kChromaSize, picture.v.row(y / 2 + r) + x / 2);
  }
}

Pixels predict(const BlockMode& mode, FrameType type, const Anchor* fwd, const Anchor* bwd,
               const Picture& current, int x, int y) {
  if (!legal_in(mode, type)) {
    throw Error(ErrorCode::kInvalidArgument, "block mode not legal in this frame type");
  }
  switch (mode.kind) {
    case ModeKind::kSkip: {
      Pixels p = motion_compensate(*fwd, x, y, {});
      if (type == FrameType::kB) {
        const Pixels q = motion_compensate(*bwd, x, y, {});
        average_into(p.y, q.y);
        average_into(p.u, q.u);
        average_into(p.v, q.v);
      }
      return p;
    }
    case ModeKind::kInterFwd: return motion_compensate(*fwd, x, y, mode.mv_fwd);
    case ModeKind::kInterBwd: return motion_compensate(*bwd, x, y, mode.mv_bwd);
    case ModeKind::kInterBi: {
      Pixels p = motion_compensate(*fwd, x, y, mode.mv_fwd);
      const Pixels q = motion_compensate(*bwd, x, y, mode.mv_bwd);
      average_into(p.y, q.y);
      average_into(p.u, q.u);
      average_into(p.v, q.v);
      return p;
    }
    case ModeKind::kIntra: {
      Pixels p;
      intra_plane(current.y, x, y, kBlockSize, mode.intra, p.y);
      intra_plane(current.u, x / 2, y / 2, kChromaSize, mode.intra, p.u);
      intra_plane(current.v, x / 2, y / 2, kChromaSize, mode.intra, p.v);
      return p;
    }
  }
  return {};
}

Levels quantize_residual(const Pixels& source, const Pixels& prediction, int qp) {
  Levels levels;
  for (int i = 0; i < kCoeffBlocks; ++i) {
    levels[static_cast<std::size_t>(i)] = quantize(fdct8(residual_block(source, prediction, i)), qp);
  }
  return levels;
}

Pixels reconstruct(const Pixels& prediction, const Levels& levels, int qp) {
  Pixels out = prediction;
  for (int i = 0; i < kCoeffBlocks; ++i) {
    const Block8& lv = levels[static_cast<std::size_t>(i)];
    if (std::all_of(lv.begin(), lv.end(), [](std::int32_t v) { return v == 0; })) continue;
    const Block8 res = idct8(dequantize(lv, qp));
    if (i < 4) {
      const int ox = (i & 1) * 8;
      const int oy = (i >> 1) * 8;
      for (int row = 0; row < 8; ++row) {
        for (int col = 0; col < 8; ++col) {
          const std::size_t p = static_cast<std::size_t>((oy + row) * kBlockSize + ox + col);
          out.y[p] = clip8(prediction.y[p] + res[static_cast<std::size_t>(row * 8 + col)]);
        }
      }
    } else {
      auto& dst = i == 4 ? out.u : out.v;
      const auto& pred = i == 4 ? prediction.u : prediction.v;
      for (std::size_t p = 0; p < 64; ++p) dst[p] = clip8(pred[p] + res[p]);
    }
  }
  return out;
}

bool all_zero(const Levels& levels) {
  for (const auto& b : levels) {
    for (auto v : b) {
      if (v != 0) return false;
    }
  }
  return true;
}

int mode_index(const BlockMode& mode, FrameType type) {
  if (type == FrameType::kP) {
    switch (mode.kind) {
      case ModeKind::kInterFwd: return 0;
      case ModeKind::kIntra: return 1;
      default: break;
    }
  } else if (type == FrameType::kB) {
    switch (mode.kind) {
      case ModeKind::kInterFwd: return 0;
      case ModeKind::kInterBwd: return 1;
      case ModeKind::kInterBi: return 2;
      case ModeKind::kIntra: return 3;
      default: break;
    }
  }
  throw Error(ErrorCode::kInvalidArgument, "no mode index for this mode/frame type");
}

std::uint64_t block_bits(FrameType type, const BlockSyntax& syntax) {
  BitCounter counter;
  write_block(counter, type, syntax);
  return counter.bit_count();
}

BlockSyntax read_block(BitReader& reader, FrameType type) {
  BlockSyntax s;
  if (type == FrameType::kI) {
    s.mode.kind = ModeKind::kIntra;
  } else {
    if (reader.get_bit()) {
      s.mode = BlockMode::skip();
      return s;
    }
    const std::uint32_t idx = get_ue(reader);
    static constexpr ModeKind kP[] = {ModeKind::kInterFwd, ModeKind::kIntra};
    static constexpr ModeKind kB[] = {ModeKind::kInterFwd, ModeKind::kInterBwd,
                                      ModeKind::kInterBi, ModeKind::kIntra};
    if (type == FrameType::kP) {
      if (idx >= 2) throw Error(ErrorCode::kMalformedCode, "bad P mode index");
      s.mode.kind = kP[idx];
    } else {
      if (idx >= 4) throw Error(ErrorCode::kMalformedCode, "bad B mode index");
      s.mode.kind = kB[idx];
    }
  }
  if (s.mode.kind == ModeKind::kIntra) {
    const std::uint32_t sub = get_ue(reader);
    if (sub > 2) throw Error(ErrorCode::kMalformedCode, "bad intra sub-mode");
    s.mode.intra = static_cast<IntraMode>(sub);
  }
  if (s.mode.uses_fwd()) {
    s.mvd_fwd.dx = get_se(reader);
    s.mvd_fwd.dy = get_se(reader);
  }
  if (s.mode.uses_bwd()) {
    s.mvd_bwd.dx = get_se(reader);
    s.mvd_bwd.dy = get_se(reader);
  }
  for (auto& block : s.levels) {
    const std::uint32_t count = get_ue(reader);
    if (count > 64) throw Error(ErrorCode::kMalformedCode, "too many coefficients");
    std::uint64_t pos = 0;
    for (std::uint32_t k = 0; k < count; ++k) {
      pos += get_ue(reader);
      if (pos >= 64) throw Error(ErrorCode::kMalformedCode, "coefficient run overflows block");
      const std::int32_t level = get_se(reader);
      if (level == 0) throw Error(ErrorCode::kMalformedCode, "zero level in run-length pair");
      block[kZigzag8[pos]] = level;
      ++pos;
    }
  }
  return s;
}

}  // namespace lfg::block
