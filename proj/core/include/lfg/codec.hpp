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

#ifndef LFG_CODEC_HPP
#define LFG_CODEC_HPP

#include <cstdint>
#include <filesystem>
#include <optional>
#include <span>
#include <vector>

#include "lfg/adaptive_lambda.hpp"
#include "lfg/gop.hpp"
#include "lfg/rdo.hpp"
#include "lfg/types.hpp"
#include "lfg/video_io.hpp"

namespace lfg {

struct EncoderConfig {
  int qp = 32;
  int gop_length = 4;
  Profile profile = Profile::kH264Like;
  double hevc_p = 0.5;
  // Adapt the B-frame multiplier from the P/B distortion ratio.
  bool adaptive = false;
  // Fixed scale on the B-frame multiplier; must be 1 when adaptive.
  double lambda_scale_k = 1.0;
  int search_range = 16;
  bool detect_scene_cuts = true;
  double scene_cut_threshold = 0.5;
  // Defaults to ControllerParams::for_profile(profile).
  std::optional<adaptive::ControllerParams> controller;
  int frame_rate_num = 25;
  int frame_rate_den = 1;

  int n_b() const { return gop_length - 1; }
  adaptive::ControllerParams controller_params() const;
  rdo::LambdaQuery lambda_query(FrameType type) const;
  // Throws Error(kInvalidArgument) on out-of-range fields.
  void validate() const;
};

struct FrameStats {
  int index = 0;  // display order
  int coding_order = 0;
  FrameType frame_type = FrameType::kI;
  double lambda_used = 0.0;
  double lambda_orig = 0.0;
  std::uint64_t bits = 0;
  double mse_y = 0.0;
  bool scene_start = false;
  // Controller trace; meaningful for B frames of adaptive encodes.
  adaptive::Decision decision = adaptive::Decision::kWarmup;
  double ratio = 0.0;
};

// Serialized layout (big-endian, MSB first):
//   'LFG1' u32 | version u8 | width u16 | height u16 | fps_num u32 | fps_den u32
//   | frame_count u32 | qp u8 | search_range u8 | total_bits u64 | payload
// The payload holds total_bits bits of frame records, zero padded to a byte.
struct Bitstream {
  static constexpr std::uint32_t kMagic = 0x4C464731;  // "LFG1"
  static constexpr std::uint8_t kVersion = 1;
  static constexpr std::size_t kHeaderBytes = 31;

  int width = 0;
  int height = 0;
  int frame_rate_num = 25;
  int frame_rate_den = 1;
  int frame_count = 0;
  int qp = 0;
  int search_range = 0;
  std::uint64_t total_bits = 0;
  std::vector<std::uint8_t> payload;
};

std::vector<std::uint8_t> serialize(const Bitstream& stream);
// Throws Error(kBadMagic / kVersionMismatch / kTruncatedPayload /
// kBitCountMismatch).
Bitstream parse_bitstream(std::span<const std::uint8_t> bytes);
void write_bitstream(const Bitstream& stream, const std::filesystem::path& path);
Bitstream read_bitstream(const std::filesystem::path& path);

// Per-block record offered to an EncodeObserver.
struct BlockTrace {
  int coding_order = 0;
  int display_index = 0;
  FrameType frame_type = FrameType::kI;
  int x = 0;
  int y = 0;
  rdo::FixedLambda lambda;
  MotionVector predicted_fwd;
  MotionVector predicted_bwd;
  std::span<const rdo::FixedCandidate> candidates;  // evaluated, in enumeration order
  BlockMode chosen;
  std::int64_t cost = 0;
};

class EncodeObserver {
 public:
  virtual ~EncodeObserver() = default;
  virtual void on_block(const BlockTrace& trace) = 0;
};

struct EncodeResult {
  Bitstream bitstream;
  std::vector<FrameStats> stats;              // coding order
  std::vector<VideoFrame> reconstruction;     // display order
  std::vector<FramePlan> plan;                // coding order
};

// Requires at least one frame, all with the same even dimensions.
EncodeResult encode_sequence(std::span<const VideoFrame> frames, const EncoderConfig& config,
                             EncodeObserver* observer = nullptr);

// Frames in display order, bit-exact with the encoder reconstruction.
std::vector<VideoFrame> decode_sequence(const Bitstream& stream);

}  // namespace lfg

#endif  // LFG_CODEC_HPP
