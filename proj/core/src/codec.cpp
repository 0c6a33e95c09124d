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

#include "lfg/codec.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <iterator>
#include <string>

#include "lfg/bitio.hpp"
#include "lfg/block_coder.hpp"
#include "lfg/error.hpp"
#include "lfg/metrics.hpp"
#include "lfg/motion.hpp"
#include "lfg/scene_cut.hpp"
#include "lfg/transform.hpp"

namespace lfg {

namespace {

using block::Anchor;
using block::BlockSyntax;
using block::Picture;
using block::Pixels;

int round_up16(int v) { return (v + kBlockSize - 1) / kBlockSize * kBlockSize; }

Plane pad_plane(const Plane& src, int width, int height) {
  Plane out(width, height);
  for (int y = 0; y < height; ++y) {
    const std::uint8_t* s = src.row(std::min(y, src.height() - 1));
    std::uint8_t* d = out.row(y);
    std::copy_n(s, src.width(), d);
    std::fill(d + src.width(), d + width, s[src.width() - 1]);
  }
  return out;
}

Picture pad_picture(const VideoFrame& f, int coded_w, int coded_h) {
  return {pad_plane(f.y, coded_w, coded_h), pad_plane(f.u, coded_w / 2, coded_h / 2),
          pad_plane(f.v, coded_w / 2, coded_h / 2)};
}

Plane crop_plane(const Plane& src, int width, int height) {
  Plane out(width, height);
  for (int y = 0; y < height; ++y) std::copy_n(src.row(y), width, out.row(y));
  return out;
}

VideoFrame crop(const Picture& p, int width, int height, int index) {
  VideoFrame f;
  f.y = crop_plane(p.y, width, height);
  f.u = crop_plane(p.u, width / 2, height / 2);
  f.v = crop_plane(p.v, width / 2, height / 2);
  f.index = index;
  return f;
}

VideoFrame as_frame(const Picture& p) {
  VideoFrame f;
  f.y = p.y;
  f.u = p.u;
  f.v = p.v;
  return f;
}

std::int64_t luma_ssd(const Pixels& a, const Pixels& b) {
  std::int64_t ssd = 0;
  for (std::size_t i = 0; i < a.y.size(); ++i) {
    const int d = a.y[i] - b.y[i];
    ssd += d * d;
  }
  return ssd;
}

double visible_mse(const Plane& source, const Plane& coded) {
  std::uint64_t ssd = 0;
  for (int y = 0; y < source.height(); ++y) {
    const std::uint8_t* s = source.row(y);
    const std::uint8_t* c = coded.row(y);
    for (int x = 0; x < source.width(); ++x) {
      const int d = s[x] - c[x];
      ssd += static_cast<std::uint64_t>(d * d);
    }
  }
  return static_cast<double>(ssd) / static_cast<double>(source.size());
}

MotionVector left_predictor(const BlockMode* left, bool forward) {
  if (left == nullptr) return {};
  if (forward) return left->uses_fwd() ? left->mv_fwd : MotionVector{};
  return left->uses_bwd() ? left->mv_bwd : MotionVector{};
}

MotionVector diff(MotionVector a, MotionVector b) { return {a.dx - b.dx, a.dy - b.dy}; }

constexpr std::uint32_t kFrameTypeCode[] = {0, 1, 2};

void write_frame_header(BitWriter& w, FrameType type, int display_index, rdo::FixedLambda lambda) {
  put_ue(w, kFrameTypeCode[static_cast<int>(type)]);
  put_ue(w, static_cast<std::uint32_t>(display_index));
  const auto milli = static_cast<std::uint64_t>(std::clamp<std::int64_t>(lambda.milli, 0, 0xFFFFFFFF));
  w.put_bits(milli, 32);
}

struct Candidate {
  BlockSyntax syntax;
  Pixels recon;
};

class FrameEncoder {
 public:
  FrameEncoder(const EncoderConfig& config, const MotionSearcher& searcher,
               EncodeObserver* observer)
      : config_(config), searcher_(searcher), observer_(observer) {}

  // Codes one picture into `out` and returns its reconstruction.
  Picture encode(const Picture& source, const FramePlan& plan, const Anchor* fwd,
                 const Anchor* bwd, rdo::FixedLambda lambda, BitWriter& out) const {
    const FrameType type = plan.type;
    Picture recon{Plane(source.y.width(), source.y.height()),
                  Plane(source.u.width(), source.u.height()),
                  Plane(source.v.width(), source.v.height())};
    std::vector<Candidate> candidates;
    std::vector<rdo::FixedCandidate> costs;
    candidates.reserve(7);
    costs.reserve(7);

    for (int y = 0; y < source.y.height(); y += kBlockSize) {
      std::optional<BlockMode> left;
      for (int x = 0; x < source.y.width(); x += kBlockSize) {
        const Pixels src = block::extract(source, x, y);
        const MotionVector pred_f = left_predictor(left ? &*left : nullptr, true);
        const MotionVector pred_b = left_predictor(left ? &*left : nullptr, false);
        candidates.clear();
        costs.clear();

        auto evaluate = [&](const BlockMode& mode) {
          Candidate c;
          c.syntax.mode = mode;
          c.syntax.mvd_fwd = mode.uses_fwd() ? diff(mode.mv_fwd, pred_f) : MotionVector{};
          c.syntax.mvd_bwd = mode.uses_bwd() ? diff(mode.mv_bwd, pred_b) : MotionVector{};
          const Pixels pred = block::predict(mode, type, fwd, bwd, recon, x, y);
          if (mode.kind == ModeKind::kSkip) {
            c.recon = pred;
          } else {
            c.syntax.levels = block::quantize_residual(src, pred, config_.qp);
            c.recon = block::reconstruct(pred, c.syntax.levels, config_.qp);
          }
          const auto bits = static_cast<std::int64_t>(block::block_bits(type, c.syntax));
          costs.push_back({mode, luma_ssd(src, c.recon), bits});
          candidates.push_back(std::move(c));
        };

        if (type != FrameType::kI) {
          evaluate(BlockMode::skip());
          const std::span<const std::uint8_t, 256> luma(src.y);
          const SearchResult sf = searcher_.search(luma, x, y, fwd->y, pred_f, lambda);
          evaluate(BlockMode::fwd(sf.mv));
          if (type == FrameType::kB) {
            const SearchResult sb = searcher_.search(luma, x, y, bwd->y, pred_b, lambda);
            evaluate(BlockMode::bwd(sb.mv));
            evaluate(BlockMode::bi(sf.mv, sb.mv));
          }
        }
        for (IntraMode m : {IntraMode::kDc, IntraMode::kHorizontal, IntraMode::kVertical}) {
          evaluate(BlockMode::intra_mode(m));
        }

        const rdo::FixedChoice choice = rdo::select_mode(costs, lambda);
        const Candidate& best = candidates[choice.index];
        block::write_block(out, type, best.syntax);
        block::store(recon, x, y, best.recon);
        left = best.syntax.mode;

        if (observer_ != nullptr) {
          BlockTrace t;
          t.coding_order = plan.coding_order;
          t.display_index = plan.display_index;
          t.frame_type = type;
          t.x = x;
          t.y = y;
          t.lambda = lambda;
          t.predicted_fwd = pred_f;
          t.predicted_bwd = pred_b;
          t.candidates = costs;
          t.chosen = best.syntax.mode;
          t.cost = choice.cost;
          observer_->on_block(t);
        }
      }
    }
    return recon;
  }

 private:
  const EncoderConfig& config_;
  const MotionSearcher& searcher_;
  EncodeObserver* observer_;
};

// Keeps the two most recent anchors: the newest is the backward (or P)
// reference, the one before it the forward reference of B frames.
class AnchorWindow {
 public:
  void push(Anchor a) {
    older_ = std::move(newer_);
    newer_ = std::move(a);
  }
  const Anchor* newest() const { return newer_ ? &*newer_ : nullptr; }
  const Anchor* previous() const { return older_ ? &*older_ : nullptr; }

 private:
  std::optional<Anchor> newer_;
  std::optional<Anchor> older_;
};

}  // namespace

adaptive::ControllerParams EncoderConfig::controller_params() const {
  return controller.value_or(adaptive::ControllerParams::for_profile(profile));
}

rdo::LambdaQuery EncoderConfig::lambda_query(FrameType type) const {
  return {qp, type, profile, n_b(), hevc_p};
}

void EncoderConfig::validate() const {
  auto fail = [](const std::string& what) {
    throw Error(ErrorCode::kInvalidArgument, "encoder config: " + what);
  };
  if (qp < kMinQp || qp > kMaxQp) fail("qp must be in [0, 51]");
  if (gop_length < 1 || gop_length > 64) fail("gop_length must be in [1, 64]");
  if (!(hevc_p > 0.0)) fail("hevc_p must be > 0");
  if (!(lambda_scale_k > 0.0) || !std::isfinite(lambda_scale_k)) fail("k must be > 0");
  if (adaptive && lambda_scale_k != 1.0) fail("adaptive mode replaces the fixed k scale");
  if (search_range < 0 || search_range > 64) fail("search_range must be in [0, 64]");
  if (!(scene_cut_threshold >= 0.0 && scene_cut_threshold <= 1.0)) {
    fail("scene_cut_threshold must be in [0, 1]");
  }
  if (frame_rate_num <= 0 || frame_rate_den <= 0) fail("frame rate must be positive");
}

EncodeResult encode_sequence(std::span<const VideoFrame> frames, const EncoderConfig& config,
                             EncodeObserver* observer) {
  config.validate();
  if (frames.empty()) throw Error(ErrorCode::kInvalidArgument, "encode: no frames");
  const int width = frames[0].width();
  const int height = frames[0].height();
  check_dimensions(width, height);
  for (const auto& f : frames) {
    if (f.width() != width || f.height() != height) {
      throw Error(ErrorCode::kDimensionMismatch, "encode: frames differ in size");
    }
  }
  const int coded_w = round_up16(width);
  const int coded_h = round_up16(height);
  const int count = static_cast<int>(frames.size());

  EncodeResult result;
  const std::vector<bool> cuts = config.detect_scene_cuts
                                     ? detect_scene_cuts(frames, config.scene_cut_threshold)
                                     : std::vector<bool>{};
  result.plan = plan_gop(count, config.gop_length, cuts);

  const double lambda_i = rdo::lambda_orig(config.lambda_query(FrameType::kI));
  const double lambda_p = rdo::lambda_orig(config.lambda_query(FrameType::kP));
  const double lambda_b = rdo::lambda_orig(config.lambda_query(FrameType::kB));
  adaptive::ControllerState controller =
      adaptive::make_state(config.controller_params(), config.n_b(), lambda_b);

  const MotionSearcher searcher(config.search_range);
  const FrameEncoder frame_encoder(config, searcher, observer);
  AnchorWindow anchors;
  BitWriter payload;
  std::vector<std::optional<VideoFrame>> recon(frames.size());

  for (const FramePlan& plan : result.plan) {
    const VideoFrame& source = frames[static_cast<std::size_t>(plan.display_index)];
    FrameStats st;
    st.index = plan.display_index;
    st.coding_order = plan.coding_order;
    st.frame_type = plan.type;
    st.scene_start = plan.scene_start;

    double lambda = 0.0;
    switch (plan.type) {
      case FrameType::kI:
        if (plan.scene_start) adaptive::reset(controller, lambda_b);
        lambda = st.lambda_orig = lambda_i;
        break;
      case FrameType::kP:
        lambda = st.lambda_orig = lambda_p;
        break;
      case FrameType::kB:
        st.lambda_orig = lambda_b;
        if (config.adaptive) {
          const adaptive::LambdaDecision d = adaptive::next_b_lambda(controller, lambda_b);
          lambda = d.lambda;
          st.decision = d.decision;
          st.ratio = d.ratio;
        } else {
          lambda = config.lambda_scale_k * lambda_b;
        }
        break;
    }
    st.lambda_used = lambda;
    const rdo::FixedLambda fixed = rdo::FixedLambda::from(lambda);

    const std::uint64_t start = payload.bit_count();
    write_frame_header(payload, plan.type, plan.display_index, fixed);
    const Anchor* fwd = plan.type == FrameType::kB ? anchors.previous() : anchors.newest();
    const Anchor* bwd = plan.type == FrameType::kB ? anchors.newest() : nullptr;
    const Picture coded = frame_encoder.encode(pad_picture(source, coded_w, coded_h), plan,
                                               plan.type == FrameType::kI ? nullptr : fwd, bwd,
                                               fixed, payload);
    st.bits = payload.bit_count() - start;
    st.mse_y = visible_mse(source.y, coded.y);

    if (config.adaptive && plan.type != FrameType::kI) {
      adaptive::record_distortion(controller, plan.type, st.mse_y);
    }
    if (plan.type != FrameType::kB) {
      anchors.push(block::make_anchor(as_frame(coded), config.search_range));
    }
    recon[static_cast<std::size_t>(plan.display_index)] =
        crop(coded, width, height, plan.display_index);
    result.stats.push_back(st);
  }

  Bitstream& bs = result.bitstream;
  bs.width = width;
  bs.height = height;
  bs.frame_rate_num = config.frame_rate_num;
  bs.frame_rate_den = config.frame_rate_den;
  bs.frame_count = count;
  bs.qp = config.qp;
  bs.search_range = config.search_range;
  bs.total_bits = payload.bit_count();
  bs.payload = payload.take_bytes();
  result.reconstruction.reserve(frames.size());
  for (auto& r : recon) result.reconstruction.push_back(std::move(*r));
  return result;
}

std::vector<VideoFrame> decode_sequence(const Bitstream& stream) {
  check_dimensions(stream.width, stream.height);
  if (stream.frame_count < 0 || stream.qp < kMinQp || stream.qp > kMaxQp) {
    throw Error(ErrorCode::kMalformedHeader, "decode: bad sequence header");
  }
  if (stream.payload.size() != (stream.total_bits + 7) / 8) {
    throw Error(ErrorCode::kBitCountMismatch, "decode: total_bits disagrees with payload size");
  }
  const int coded_w = round_up16(stream.width);
  const int coded_h = round_up16(stream.height);
  BitReader reader(stream.payload, stream.total_bits);
  AnchorWindow anchors;
  std::vector<std::optional<VideoFrame>> out(static_cast<std::size_t>(stream.frame_count));
  const int range = stream.search_range;

  for (int n = 0; n < stream.frame_count; ++n) {
    const std::uint32_t type_code = get_ue(reader);
    if (type_code > 2) throw Error(ErrorCode::kMalformedCode, "decode: bad frame type");
    const auto type = static_cast<FrameType>(type_code);
    const std::uint32_t display = get_ue(reader);
    if (display >= static_cast<std::uint32_t>(stream.frame_count) || out[display]) {
      throw Error(ErrorCode::kMalformedCode, "decode: bad display index");
    }
    reader.get_bits(32);  // lambda metadata

    const Anchor* fwd = type == FrameType::kB ? anchors.previous() : anchors.newest();
    const Anchor* bwd = type == FrameType::kB ? anchors.newest() : nullptr;
    if ((type != FrameType::kI && fwd == nullptr) || (type == FrameType::kB && bwd == nullptr)) {
      throw Error(ErrorCode::kMalformedCode, "decode: missing reference picture");
    }
    Picture recon{Plane(coded_w, coded_h), Plane(coded_w / 2, coded_h / 2),
                  Plane(coded_w / 2, coded_h / 2)};
    for (int y = 0; y < coded_h; y += kBlockSize) {
      std::optional<BlockMode> left;
      for (int x = 0; x < coded_w; x += kBlockSize) {
        BlockSyntax s = block::read_block(reader, type);
        BlockMode mode = s.mode;
        auto in_range = [range](MotionVector mv) {
          return std::abs(mv.dx) <= range && std::abs(mv.dy) <= range;
        };
        if (mode.uses_fwd()) {
          const MotionVector p = left_predictor(left ? &*left : nullptr, true);
          mode.mv_fwd = {p.dx + s.mvd_fwd.dx, p.dy + s.mvd_fwd.dy};
          if (!in_range(mode.mv_fwd)) throw Error(ErrorCode::kMalformedCode, "decode: mv out of range");
        }
        if (mode.uses_bwd()) {
          const MotionVector p = left_predictor(left ? &*left : nullptr, false);
          mode.mv_bwd = {p.dx + s.mvd_bwd.dx, p.dy + s.mvd_bwd.dy};
          if (!in_range(mode.mv_bwd)) throw Error(ErrorCode::kMalformedCode, "decode: mv out of range");
        }
        const Pixels pred = block::predict(mode, type, fwd, bwd, recon, x, y);
        block::store(recon, x, y,
                     mode.kind == ModeKind::kSkip ? pred
                                                  : block::reconstruct(pred, s.levels, stream.qp));
        left = mode;
      }
    }
    if (type != FrameType::kB) anchors.push(block::make_anchor(as_frame(recon), range));
    out[display] = crop(recon, stream.width, stream.height, static_cast<int>(display));
  }
  if (reader.position() != stream.total_bits) {
    throw Error(ErrorCode::kBitCountMismatch, "decode: payload has trailing bits");
  }
  std::vector<VideoFrame> frames;
  frames.reserve(out.size());
  for (auto& f : out) frames.push_back(std::move(*f));
  return frames;
}

std::vector<std::uint8_t> serialize(const Bitstream& s) {
  BitWriter w;
  w.put_bits(Bitstream::kMagic, 32);
  w.put_bits(Bitstream::kVersion, 8);
  w.put_bits(static_cast<std::uint64_t>(s.width), 16);
  w.put_bits(static_cast<std::uint64_t>(s.height), 16);
  w.put_bits(static_cast<std::uint64_t>(s.frame_rate_num), 32);
  w.put_bits(static_cast<std::uint64_t>(s.frame_rate_den), 32);
  w.put_bits(static_cast<std::uint64_t>(s.frame_count), 32);
  w.put_bits(static_cast<std::uint64_t>(s.qp), 8);
  w.put_bits(static_cast<std::uint64_t>(s.search_range), 8);
  w.put_bits(s.total_bits, 64);
  std::vector<std::uint8_t> bytes = w.take_bytes();
  bytes.insert(bytes.end(), s.payload.begin(), s.payload.end());
  return bytes;
}

Bitstream parse_bitstream(std::span<const std::uint8_t> bytes) {
  if (bytes.size() < 4) throw Error(ErrorCode::kTruncatedPayload, "bitstream: too short");
  BitReader r(bytes.first(std::min(bytes.size(), Bitstream::kHeaderBytes)));
  if (r.get_bits(32) != Bitstream::kMagic) throw Error(ErrorCode::kBadMagic, "bitstream: bad magic");
  if (bytes.size() < Bitstream::kHeaderBytes) {
    throw Error(ErrorCode::kTruncatedPayload, "bitstream: truncated header");
  }
  if (r.get_bits(8) != Bitstream::kVersion) {
    throw Error(ErrorCode::kVersionMismatch, "bitstream: unsupported version");
  }
  Bitstream s;
  s.width = static_cast<int>(r.get_bits(16));
  s.height = static_cast<int>(r.get_bits(16));
  s.frame_rate_num = static_cast<int>(r.get_bits(32));
  s.frame_rate_den = static_cast<int>(r.get_bits(32));
  s.frame_count = static_cast<int>(r.get_bits(32));
  s.qp = static_cast<int>(r.get_bits(8));
  s.search_range = static_cast<int>(r.get_bits(8));
  s.total_bits = r.get_bits(64);
  const auto body = bytes.subspan(Bitstream::kHeaderBytes);
  if (body.size() < (s.total_bits + 7) / 8) {
    throw Error(ErrorCode::kTruncatedPayload, "bitstream: payload shorter than total_bits");
  }
  if (body.size() != (s.total_bits + 7) / 8) {
    throw Error(ErrorCode::kBitCountMismatch, "bitstream: total_bits disagrees with payload");
  }
  s.payload.assign(body.begin(), body.end());
  return s;
}

void write_bitstream(const Bitstream& stream, const std::filesystem::path& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error(ErrorCode::kIo, "cannot create " + path.string());
  const auto bytes = serialize(stream);
  out.write(reinterpret_cast<const char*>(bytes.data()), static_cast<std::streamsize>(bytes.size()));
  if (!out) throw Error(ErrorCode::kIo, "write failed: " + path.string());
}

Bitstream read_bitstream(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::kIo, "cannot open " + path.string());
  std::vector<std::uint8_t> bytes((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
  return parse_bitstream(bytes);
}

}  // namespace lfg
