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

#ifndef LFG_TYPES_HPP
#define LFG_TYPES_HPP

#include <cstdint>
#include <string_view>

namespace lfg {

enum class FrameType : std::uint8_t { kI = 0, kP = 1, kB = 2 };

enum class Profile : std::uint8_t { kH264Like, kHevcLike };

char to_char(FrameType type);
std::string_view to_string(Profile profile);
// Accepts "h264" / "hevc" (case-sensitive); throws Error(kInvalidArgument).
Profile parse_profile(std::string_view text);

// Full-pel displacement; the prediction for pixel (x, y) is ref(x + dx, y + dy).
struct MotionVector {
  int dx = 0;
  int dy = 0;

  friend bool operator==(const MotionVector&, const MotionVector&) = default;
};

enum class ModeKind : std::uint8_t { kSkip, kInterFwd, kInterBwd, kInterBi, kIntra };

enum class IntraMode : std::uint8_t { kDc, kHorizontal, kVertical };

// Coding parameters of one 16x16 block.
struct BlockMode {
  ModeKind kind = ModeKind::kSkip;
  MotionVector mv_fwd;  // valid for kInterFwd, kInterBi
  MotionVector mv_bwd;  // valid for kInterBwd, kInterBi
  IntraMode intra = IntraMode::kDc;

  static BlockMode skip() { return {}; }
  static BlockMode fwd(MotionVector mv) { return {ModeKind::kInterFwd, mv, {}, IntraMode::kDc}; }
  static BlockMode bwd(MotionVector mv) { return {ModeKind::kInterBwd, {}, mv, IntraMode::kDc}; }
  static BlockMode bi(MotionVector f, MotionVector b) { return {ModeKind::kInterBi, f, b, IntraMode::kDc}; }
  static BlockMode intra_mode(IntraMode m) { return {ModeKind::kIntra, {}, {}, m}; }

  bool uses_fwd() const { return kind == ModeKind::kInterFwd || kind == ModeKind::kInterBi; }
  bool uses_bwd() const { return kind == ModeKind::kInterBwd || kind == ModeKind::kInterBi; }

  friend bool operator==(const BlockMode&, const BlockMode&) = default;
};

// Tie-break rank: SKIP < INTER_FWD < INTER_BWD < INTER_BI < INTRA(DC < H < V).
constexpr int mode_rank(const BlockMode& mode) {
  return mode.kind == ModeKind::kIntra ? 4 + static_cast<int>(mode.intra)
                                       : static_cast<int>(mode.kind);
}

bool legal_in(const BlockMode& mode, FrameType type);

}  // namespace lfg

#endif  // LFG_TYPES_HPP
