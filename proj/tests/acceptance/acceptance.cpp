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

// Acceptance checks 1-8. Each prints one PASS/FAIL line; the process exits
// non-zero when any selected criterion fails.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <iostream>
#include <limits>
#include <map>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "lfg/adaptive_lambda.hpp"
#include "lfg/bitio.hpp"
#include "lfg/block_coder.hpp"
#include "lfg/codec.hpp"
#include "lfg/experiment.hpp"
#include "lfg/metrics.hpp"
#include "lfg/motion.hpp"
#include "lfg/power_fit.hpp"
#include "lfg/rdo.hpp"
#include "lfg/synth.hpp"

namespace {

using namespace lfg;
using Clock = std::chrono::steady_clock;

// Tolerances and limits.
constexpr double kLambdaRelTol = 1e-12;
constexpr double kBdShiftRateTol = 0.1;      // percent
constexpr double kBdShiftPsnrTol = 1e-6;     // dB
constexpr double kBdAntisymmetryTol = 1e-9;  // dB
constexpr double kBdTrapezoidTol = 1e-6;     // dB
constexpr double kClassGainTarget = -0.5;    // percent BD-Rate
constexpr double kClassRegressionCap = 0.5;  // percent BD-Rate
constexpr double kFitRssTol = 1e-10;
constexpr double kFitParamTol = 1e-4;
constexpr int kMinCodecSequences = 20;
constexpr int kMinOracleBlocks = 1000;
constexpr int kMinSweepSequences = 9;

struct Outcome {
  bool pass = true;
  std::string detail;
  std::vector<std::string> failures;

  void check(bool ok, const std::string& what) {
    if (ok) return;
    pass = false;
    if (failures.size() < 8) failures.push_back(what);
  }
};

std::string fmt(double v, int precision = 6) {
  std::ostringstream s;
  s.precision(precision);
  s << v;
  return s.str();
}

double rel_err(double got, double want) { return std::abs(got - want) / std::abs(want); }

// ---- 1: formulas and controller examples

void criterion1(Outcome& o) {
  struct Case {
    rdo::LambdaQuery q;
    double want;
  };
  const Profile h = Profile::kH264Like;
  const Profile v = Profile::kHevcLike;
  const Case cases[] = {
      {{27, FrameType::kB, h}, 54.4},
      {{12, FrameType::kI, h}, 0.57},
      {{37, FrameType::kP, h}, 274.158820457124400653},
      {{42, FrameType::kB, h}, 2785.28},
      {{18, FrameType::kB, h}, 0.68 * 2.0 * 4.0},
      {{32, FrameType::kI, v, 3}, 49.2221318194299293131},
      {{32, FrameType::kB, v, 3, 0.5}, 169.322778876607943973},
      {{22, FrameType::kP, v, 3, 0.5}, 5.03968419957949265907},
      {{30, FrameType::kI, v, 20}, 0.5 * 0.57 * 64.0},
  };
  for (const auto& c : cases) {
    const double got = rdo::lambda_orig(c.q);
    o.check(rel_err(got, c.want) <= kLambdaRelTol,
            "lambda_orig qp " + std::to_string(c.q.qp) + " = " + fmt(got, 17));
  }

  using namespace adaptive;
  const auto p264 = ControllerParams::for_profile(h);

  ControllerState s = make_state(p264, 3, 54.4);
  record_distortion(s, FrameType::kB, 7.5);
  o.check(s.d_b == 7.5, "first B record is taken as is");
  s.d_p = 10.0;
  record_distortion(s, FrameType::kP, 5.0);
  o.check(s.d_p == 6.0, "0.2 * 10 + 0.8 * 5 = 6");

  auto primed = [&](double ratio, double last) {
    ControllerState st = make_state(p264, 3, last);
    record_distortion(st, FrameType::kP, 10.0 * ratio);
    for (int i = 0; i < 3; ++i) record_distortion(st, FrameType::kB, 10.0);
    st.lambda_last = last;
    return st;
  };

  ControllerState warm = make_state(p264, 3, 10.0);
  const auto w = next_b_lambda(warm, 54.4);
  o.check(w.decision == Decision::kWarmup && w.lambda == 54.4, "warmup passes lambda_orig through");

  const double last = 61.234567891;
  ControllerState dead = primed(0.85, last);
  const auto d = next_b_lambda(dead, 54.4);
  o.check(d.decision == Decision::kDeadBand && d.lambda == last, "dead band reuses lambda bitwise");

  ControllerState up = primed(1.0, 54.4);
  const auto u = next_b_lambda(up, 54.4);
  o.check(std::abs(u.factor - 3.063) <= 1e-12 && u.clipped && u.lambda == 1.05 * 54.4,
          "r = 1.0 clips to +5%, factor " + fmt(u.factor, 17));

  ControllerState down = primed(0.5, 54.4);
  const auto dn = next_b_lambda(down, 54.4);
  o.check(std::abs(dn.factor - 0.369525562564161) <= 1e-12 && dn.clipped && dn.lambda == 0.95 * 54.4,
          "r = 0.5 clips to -5%, factor " + fmt(dn.factor, 17));

  ControllerState hold = make_state(p264, 3, 54.4);
  record_distortion(hold, FrameType::kP, 3.0);
  for (int i = 0; i < 3; ++i) record_distortion(hold, FrameType::kB, 0.0);
  o.check(next_b_lambda(hold, 54.4).decision == Decision::kHold, "zero B index holds");

  o.detail = std::to_string(std::size(cases)) + " lambda values, 7 controller examples";
}

// ---- 2: codec integrity

std::vector<VideoFrame> noise_sequence(int w, int h, int n, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::vector<VideoFrame> frames;
  VideoFrame base(w, h);
  for (auto* p : {&base.y, &base.u, &base.v}) {
    for (auto& s : p->samples()) s = static_cast<std::uint8_t>(rng() & 0xFF);
  }
  for (int i = 0; i < n; ++i) {
    VideoFrame f = base;
    f.index = i;
    // Partly static, partly redrawn, so every mode family gets exercised.
    for (auto* p : {&f.y, &f.u, &f.v}) {
      for (auto& s : p->samples()) {
        if ((rng() & 3) == 0) s = static_cast<std::uint8_t>(rng() & 0xFF);
      }
    }
    frames.push_back(std::move(f));
  }
  return frames;
}

void criterion2(Outcome& o) {
  const int qps[] = {22, 27, 32, 37, 42};
  int encodes = 0;
  for (int seq = 0; seq < kMinCodecSequences; ++seq) {
    std::vector<VideoFrame> frames;
    if (seq % 2 == 0) {
      frames = noise_sequence(64, 64, 13, 1000 + static_cast<std::uint64_t>(seq));
    } else {
      const ContentClass cls[] = {ContentClass::kStatic, ContentClass::kDyntex, ContentClass::kMixed};
      frames = synth_sequence({cls[seq % 3], static_cast<std::uint64_t>(seq), 64, 64, 13});
    }
    for (int qp : qps) {
      EncoderConfig cfg;
      cfg.qp = qp;
      cfg.profile = seq % 4 < 2 ? Profile::kH264Like : Profile::kHevcLike;
      cfg.adaptive = (seq + qp) % 3 == 0;
      const auto r = encode_sequence(frames, cfg);
      const auto bytes = serialize(r.bitstream);
      const auto decoded = decode_sequence(parse_bitstream(bytes));
      const std::string tag = "seq " + std::to_string(seq) + " qp " + std::to_string(qp);
      bool same = decoded.size() == r.reconstruction.size();
      for (std::size_t i = 0; same && i < decoded.size(); ++i) same = decoded[i].same_samples(r.reconstruction[i]);
      o.check(same, tag + ": decoder output differs from reconstruction");
      std::uint64_t sum = 0;
      for (const auto& st : r.stats) sum += st.bits;
      o.check(sum == r.bitstream.total_bits, tag + ": frame bits do not sum to total_bits");
      o.check(bytes.size() == Bitstream::kHeaderBytes + (r.bitstream.total_bits + 7) / 8,
              tag + ": payload length disagrees with total_bits");
      ++encodes;
    }
  }
  o.detail = std::to_string(kMinCodecSequences) + " sequences, " + std::to_string(encodes) + " encodes";
}

// ---- 3: mode decision oracle

struct Recorder : EncodeObserver {
  struct Entry {
    BlockTrace trace;
    std::vector<rdo::FixedCandidate> candidates;
  };
  std::vector<Entry> entries;
  void on_block(const BlockTrace& t) override {
    entries.push_back({t, std::vector<rdo::FixedCandidate>(t.candidates.begin(), t.candidates.end())});
    entries.back().trace.candidates = {};
  }
};

int se_bits(int v) {
  const std::uint32_t code = v > 0 ? static_cast<std::uint32_t>(2 * v - 1) : static_cast<std::uint32_t>(-2 * v);
  return ue_length(code);
}

// Full-search reference: minimise 1000 * SSD + lambda_milli * mv bits with
// ties on |dx| + |dy|, then dy, then dx.
MotionVector brute_force_mv(const block::Pixels& src, int x, int y, const PaddedPlane& ref, MotionVector pred,
                            int range, rdo::FixedLambda lambda) {
  MotionVector best;
  std::int64_t best_cost = std::numeric_limits<std::int64_t>::max();
  for (int dy = -range; dy <= range; ++dy) {
    for (int dx = -range; dx <= range; ++dx) {
      std::int64_t ssd = 0;
      for (int r = 0; r < 16; ++r) {
        const std::uint8_t* p = ref.at(x + dx, y + dy + r);
        for (int c = 0; c < 16; ++c) {
          const int e = src.y[static_cast<std::size_t>(r * 16 + c)] - p[c];
          ssd += e * e;
        }
      }
      const std::int64_t bits = se_bits(dx - pred.dx) + se_bits(dy - pred.dy);
      const std::int64_t cost = ssd * 1000 + lambda.milli * bits;
      auto key = [](MotionVector m) { return std::make_tuple(std::abs(m.dx) + std::abs(m.dy), m.dy, m.dx); };
      if (cost < best_cost || (cost == best_cost && key({dx, dy}) < key(best))) {
        best_cost = cost;
        best = {dx, dy};
      }
    }
  }
  return best;
}

std::int64_t luma_ssd(const block::Pixels& a, const block::Pixels& b) {
  std::int64_t s = 0;
  for (std::size_t i = 0; i < a.y.size(); ++i) {
    const int d = a.y[i] - b.y[i];
    s += d * d;
  }
  return s;
}

void criterion3(Outcome& o) {
  struct Run {
    ContentClass cls;
    std::uint64_t seed;
    int qp;
    Profile profile;
    bool adaptive;
  };
  const Run runs[] = {
      {ContentClass::kMixed, 1, 22, Profile::kH264Like, false},
      {ContentClass::kDyntex, 2, 32, Profile::kHevcLike, true},
      {ContentClass::kStatic, 3, 27, Profile::kH264Like, true},
      {ContentClass::kMixed, 4, 37, Profile::kHevcLike, false},
      {ContentClass::kDyntex, 5, 42, Profile::kH264Like, false},
      {ContentClass::kStatic, 6, 32, Profile::kHevcLike, false},
  };
  constexpr int kRange = 16;
  int blocks = 0;
  std::map<FrameType, int> per_type;
  for (const auto& run : runs) {
    const auto frames = synth_sequence({run.cls, run.seed, 64, 64, 13});
    EncoderConfig cfg;
    cfg.qp = run.qp;
    cfg.profile = run.profile;
    cfg.adaptive = run.adaptive;
    cfg.search_range = kRange;
    Recorder rec;
    const auto result = encode_sequence(frames, cfg, &rec);
    const auto decoded = decode_sequence(result.bitstream);

    std::map<int, block::Anchor> anchors;
    auto anchor = [&](int display) -> const block::Anchor* {
      if (display < 0) return nullptr;
      auto it = anchors.find(display);
      if (it == anchors.end()) {
        it = anchors.emplace(display, block::make_anchor(decoded[static_cast<std::size_t>(display)], kRange)).first;
      }
      return &it->second;
    };

    const Recorder::Entry* left = nullptr;
    for (const auto& e : rec.entries) {
      const BlockTrace& t = e.trace;
      const FramePlan& plan = result.plan[static_cast<std::size_t>(t.coding_order)];
      const std::string tag = "frame " + std::to_string(t.display_index) + " block (" + std::to_string(t.x) +
                              "," + std::to_string(t.y) + ")";
      if (t.x == 0) left = nullptr;

      // Predicted vectors come from the left neighbour's chosen mode.
      MotionVector pf, pb;
      if (left != nullptr) {
        if (left->trace.chosen.uses_fwd()) pf = left->trace.chosen.mv_fwd;
        if (left->trace.chosen.uses_bwd()) pb = left->trace.chosen.mv_bwd;
      }
      o.check(pf == t.predicted_fwd && pb == t.predicted_bwd, tag + ": predicted mv");

      const VideoFrame& cur = decoded[static_cast<std::size_t>(t.display_index)];
      const block::Picture current{cur.y, cur.u, cur.v};
      const VideoFrame& srcf = frames[static_cast<std::size_t>(t.display_index)];
      const block::Picture source{srcf.y, srcf.u, srcf.v};
      const block::Pixels src = block::extract(source, t.x, t.y);
      const block::Anchor* fwd = anchor(plan.ref_fwd);
      const block::Anchor* bwd = anchor(plan.ref_bwd);

      std::vector<BlockMode> modes;
      if (t.frame_type != FrameType::kI) {
        const MotionVector mf = brute_force_mv(src, t.x, t.y, fwd->y, pf, kRange, t.lambda);
        modes.push_back(BlockMode::skip());
        modes.push_back(BlockMode::fwd(mf));
        if (t.frame_type == FrameType::kB) {
          const MotionVector mb = brute_force_mv(src, t.x, t.y, bwd->y, pb, kRange, t.lambda);
          modes.push_back(BlockMode::bwd(mb));
          modes.push_back(BlockMode::bi(mf, mb));
        }
      }
      for (IntraMode m : {IntraMode::kDc, IntraMode::kHorizontal, IntraMode::kVertical}) {
        modes.push_back(BlockMode::intra_mode(m));
      }
      o.check(modes.size() == e.candidates.size(), tag + ": candidate count");

      std::int64_t best = std::numeric_limits<std::int64_t>::max();
      std::int64_t chosen_cost = -1;
      for (std::size_t i = 0; i < modes.size(); ++i) {
        const BlockMode& m = modes[i];
        o.check(legal_in(m, t.frame_type), tag + ": illegal mode enumerated");
        if (i < e.candidates.size()) o.check(e.candidates[i].mode == m, tag + ": motion search disagrees");
        block::BlockSyntax syn;
        syn.mode = m;
        if (m.uses_fwd()) syn.mvd_fwd = {m.mv_fwd.dx - pf.dx, m.mv_fwd.dy - pf.dy};
        if (m.uses_bwd()) syn.mvd_bwd = {m.mv_bwd.dx - pb.dx, m.mv_bwd.dy - pb.dy};
        const block::Pixels pred = block::predict(m, t.frame_type, fwd, bwd, current, t.x, t.y);
        block::Pixels recon = pred;
        if (m.kind != ModeKind::kSkip) {
          syn.levels = block::quantize_residual(src, pred, cfg.qp);
          recon = block::reconstruct(pred, syn.levels, cfg.qp);
        }
        const auto bits = static_cast<std::int64_t>(block::block_bits(t.frame_type, syn));
        const std::int64_t cost = rdo::rd_cost_fixed(luma_ssd(src, recon), bits, t.lambda);
        best = std::min(best, cost);
        if (m == t.chosen) chosen_cost = cost;
        if (m == t.chosen) {
          o.check(block::extract(current, t.x, t.y).y == recon.y, tag + ": reconstruction of chosen mode");
        }
      }
      o.check(chosen_cost == t.cost, tag + ": recorded cost " + std::to_string(t.cost) + " vs recomputed " +
                                         std::to_string(chosen_cost));
      o.check(best >= t.cost, tag + ": a legal mode is strictly cheaper");
      ++blocks;
      ++per_type[t.frame_type];
      left = &e;
    }
  }
  o.check(blocks >= kMinOracleBlocks, "only " + std::to_string(blocks) + " blocks");
  for (FrameType ft : {FrameType::kI, FrameType::kP, FrameType::kB}) {
    o.check(per_type[ft] > 0, std::string("no blocks of type ") + to_char(ft));
  }
  o.detail = std::to_string(blocks) + " blocks (I " + std::to_string(per_type[FrameType::kI]) + ", P " +
             std::to_string(per_type[FrameType::kP]) + ", B " + std::to_string(per_type[FrameType::kB]) + ")";
}

// ---- 4: BD metrics

double trapezoid_bd_psnr(const metrics::RDCurve& a, const metrics::RDCurve& b) {
  auto fit = [](const metrics::RDCurve& c) {
    std::vector<double> x, y;
    for (const auto& p : c.points()) {
      x.push_back(std::log10(p.bitrate));
      y.push_back(p.psnr);
    }
    return std::make_tuple(metrics::fit_cubic(x, y), x.front(), x.back());
  };
  const auto [fa, a_lo, a_hi] = fit(a);
  const auto [fb, b_lo, b_hi] = fit(b);
  const double lo = std::max(a_lo, b_lo);
  const double hi = std::min(a_hi, b_hi);
  constexpr int kSteps = 200000;
  const double h = (hi - lo) / kSteps;
  double sum = 0.0;
  for (int i = 0; i <= kSteps; ++i) {
    const double x = lo + h * i;
    const double w = (i == 0 || i == kSteps) ? 0.5 : 1.0;
    sum += w * (fb(x) - fa(x));
  }
  return sum * h / (hi - lo);
}

void criterion4(Outcome& o) {
  const metrics::RDCurve a({{120, 30.1}, {260, 33.4}, {530, 36.2}, {1100, 38.9}, {2300, 41.0}});
  std::vector<metrics::RDPoint> doubled, plus_one, other;
  for (const auto& p : a.points()) {
    doubled.push_back({2.0 * p.bitrate, p.psnr});
    plus_one.push_back({p.bitrate, p.psnr + 1.0});
  }
  other = {{100, 29.0}, {240, 33.1}, {600, 36.9}, {1000, 38.2}, {2500, 41.6}};
  const metrics::RDCurve d(doubled), p1(plus_one), b(other);

  o.check(metrics::bd_rate(a, a) == 0.0, "bd_rate(A, A) = " + fmt(metrics::bd_rate(a, a), 17));
  o.check(metrics::bd_psnr(a, a) == 0.0, "bd_psnr(A, A) = " + fmt(metrics::bd_psnr(a, a), 17));
  const double shift = metrics::bd_rate(a, d);
  o.check(std::abs(shift - 100.0) <= kBdShiftRateTol, "2x rate shift gives " + fmt(shift, 10) + " %");
  const double gain = metrics::bd_psnr(a, p1);
  o.check(std::abs(gain - 1.0) <= kBdShiftPsnrTol, "+1 dB shift gives " + fmt(gain, 12));
  const double ab = metrics::bd_psnr(a, b);
  const double ba = metrics::bd_psnr(b, a);
  o.check(std::abs(ab + ba) <= kBdAntisymmetryTol, "antisymmetry residual " + fmt(ab + ba, 6));
  for (const auto& [x, y] : {std::pair{&a, &b}, std::pair{&b, &a}, std::pair{&a, &p1}, std::pair{&d, &b}}) {
    const double exact = metrics::bd_psnr(*x, *y);
    const double trap = trapezoid_bd_psnr(*x, *y);
    o.check(std::abs(exact - trap) <= kBdTrapezoidTol, "trapezoid oracle " + fmt(trap, 12) + " vs " + fmt(exact, 12));
  }
  o.detail = "BD-Rate(2x) " + fmt(shift, 8) + " %, BD-PSNR(+1 dB) " + fmt(gain, 10);
}

// ---- 5: controller traces

void check_trace(Outcome& o, const std::vector<FrameStats>& stats, const std::string& tag) {
  const FrameStats* prev_b = nullptr;
  for (const auto& s : stats) {
    if (s.scene_start) prev_b = nullptr;
    if (s.frame_type != FrameType::kB) continue;
    if (s.decision == adaptive::Decision::kWarmup) {
      o.check(s.lambda_used == s.lambda_orig, tag + ": warmup frame " + std::to_string(s.index) + " not at lambda_orig");
    }
    if (prev_b != nullptr) {
      const double ratio = s.lambda_used / prev_b->lambda_used;
      o.check(ratio >= adaptive::kMaxStepDown * (1 - 1e-15) && ratio <= adaptive::kMaxStepUp * (1 + 1e-15),
              tag + ": B step " + fmt(ratio, 10) + " at frame " + std::to_string(s.index));
      if (s.decision == adaptive::Decision::kDeadBand || s.decision == adaptive::Decision::kHold) {
        o.check(s.lambda_used == prev_b->lambda_used, tag + ": dead band changed lambda at frame " + std::to_string(s.index));
      }
    }
    prev_b = &s;
  }
}

void criterion5(Outcome& o) {
  int encodes = 0;
  int b_frames = 0;
  std::map<adaptive::Decision, int> seen;
  for (Profile profile : {Profile::kH264Like, Profile::kHevcLike}) {
    for (auto cls : {ContentClass::kStatic, ContentClass::kDyntex, ContentClass::kMixed}) {
      for (std::uint64_t seed = 1; seed <= 3; ++seed) {
        const auto frames = synth_sequence({cls, seed, 64, 64, 61});
        for (int qp : {22, 32, 42}) {
          EncoderConfig cfg;
          cfg.qp = qp;
          cfg.profile = profile;
          cfg.adaptive = true;
          const auto r = encode_sequence(frames, cfg);
          check_trace(o, r.stats, std::string(to_string(cls)) + "-s" + std::to_string(seed) + " qp " + std::to_string(qp));
          for (const auto& s : r.stats) {
            if (s.frame_type == FrameType::kB) ++b_frames, ++seen[s.decision];
          }
          ++encodes;
        }
      }
    }
  }

  // Scripted hard cut at frame 25, which is also a GOP anchor position.
  auto frames = synth_sequence({ContentClass::kStatic, 7, 64, 64, 61});
  const auto other = synth_sequence({ContentClass::kDyntex, 7, 64, 64, 61});
  for (std::size_t i = 25; i < frames.size(); ++i) {
    frames[i] = other[i];
    for (auto& s : frames[i].y.samples()) s = static_cast<std::uint8_t>(255 - s / 4);
  }
  EncoderConfig cfg;
  cfg.adaptive = true;
  cfg.qp = 32;
  const auto r = encode_sequence(frames, cfg);
  check_trace(o, r.stats, "scripted cut");
  bool cut_seen = false;
  bool scaled_before = false;
  bool ready_after = false;
  for (const auto& s : r.stats) {
    if (s.index == 25) {
      cut_seen = s.frame_type == FrameType::kI && s.scene_start;
      continue;
    }
    if (s.frame_type != FrameType::kB) continue;
    if (s.index < 25 && s.decision != adaptive::Decision::kWarmup) scaled_before = true;
    if (s.index > 25 && s.index < 29) {
      o.check(s.decision == adaptive::Decision::kWarmup && s.lambda_used == s.lambda_orig,
              "frame " + std::to_string(s.index) + " after the cut is not at lambda_orig");
    }
    if (s.index > 29 && s.index < 33) ready_after |= s.decision != adaptive::Decision::kWarmup;
  }
  o.check(cut_seen, "cut at frame 25 not coded as a scene-start I frame");
  o.check(scaled_before, "controller never left warmup before the cut");
  o.check(ready_after, "controller did not resume once ready");
  o.detail = std::to_string(encodes + 1) + " encodes, " + std::to_string(b_frames) + " B frames (dead band " +
             std::to_string(seen[adaptive::Decision::kDeadBand]) + ", scaled " +
             std::to_string(seen[adaptive::Decision::kScaled]) + ")";
}

// ---- 6: adaptive vs anchor

std::vector<experiment::SequenceInput> corpus(int frames) {
  std::vector<experiment::SequenceInput> seqs;
  for (auto cls : {ContentClass::kStatic, ContentClass::kDyntex, ContentClass::kMixed}) {
    for (std::uint64_t seed = 1; seed <= 3; ++seed) {
      const ContentSpec spec{cls, seed, 64, 64, frames};
      seqs.push_back({spec.id(), std::string(to_string(cls)), "64x64", synth_sequence(spec)});
    }
  }
  return seqs;
}

void criterion6(Outcome& o) {
  const auto seqs = corpus(61);
  const auto qps = experiment::default_compare_qps();
  std::ostringstream detail;
  for (Profile profile : {Profile::kH264Like, Profile::kHevcLike}) {
    experiment::Settings s;
    s.profile = profile;
    const auto res = experiment::compare_adaptive(seqs, qps, s);
    std::map<std::string, double> cls;
    for (const auto& row : res.classes) cls[row.label] = row.bd_rate;
    const std::string name(to_string(profile));
    o.check(cls.count("static") && cls.count("dyntex") && cls.count("mixed"), name + ": missing class rows");
    o.check(cls["static"] <= kClassGainTarget || cls["dyntex"] <= kClassGainTarget,
            name + ": no class reaches " + fmt(kClassGainTarget) + " %");
    for (const auto& [label, v] : cls) {
      o.check(v <= kClassRegressionCap, name + " " + label + " class BD-Rate " + fmt(v, 4) + " % > +" +
                                            fmt(kClassRegressionCap) + " %");
    }
    detail << name << " static " << fmt(cls["static"], 3) << "% dyntex " << fmt(cls["dyntex"], 3) << "% mixed "
           << fmt(cls["mixed"], 3) << "%; ";
  }
  o.detail = detail.str();
  o.detail.resize(o.detail.size() - 2);
}

// ---- 7: sweep correlation

void criterion7(Outcome& o) {
  const auto seqs = corpus(61);
  const auto qps = experiment::default_sweep_qps();
  const auto ks = experiment::default_k_grid();
  const experiment::Settings settings;
  const auto records = experiment::sweep(seqs, qps, ks, settings);
  std::vector<double> r_pb, k_star;
  for (const auto& seq : seqs) {
    std::vector<experiment::SweepRecord> mine;
    for (const auto& r : records) {
      if (r.seq == seq.id) mine.push_back(r);
    }
    r_pb.push_back(experiment::anchor_ratio(mine));
    k_star.push_back(experiment::find_lambda_opt(mine, settings).k_star);
  }
  o.check(static_cast<int>(seqs.size()) >= kMinSweepSequences, "too few sequences");
  const double rho = experiment::spearman(r_pb, k_star);
  o.check(rho > 0.0, "Spearman " + fmt(rho) + " <= 0");
  o.detail = std::to_string(seqs.size()) + " sequences, " + std::to_string(records.size()) +
             " encodes, Spearman " + fmt(rho, 4);
}

// ---- 8: power fit

void criterion8(Outcome& o) {
  std::ostringstream detail;
  for (Profile profile : {Profile::kH264Like, Profile::kHevcLike}) {
    const auto p = adaptive::ControllerParams::for_profile(profile);
    std::vector<PowerPoint> pts;
    for (double r = 0.60; r <= 1.30 + 1e-9; r += 0.05) pts.push_back({r, p.a * std::pow(r, p.b) + p.c});
    const auto fit = fit_power(pts);
    const std::string name(to_string(profile));
    o.check(fit.rss <= kFitRssTol, name + ": rss " + fmt(fit.rss));
    o.check(rel_err(fit.a, p.a) <= kFitParamTol, name + ": a " + fmt(fit.a, 10));
    o.check(rel_err(fit.b, p.b) <= kFitParamTol, name + ": b " + fmt(fit.b, 10));
    o.check(rel_err(fit.c, p.c) <= kFitParamTol, name + ": c " + fmt(fit.c, 10));
    detail << name << " (" << fmt(fit.a, 7) << ", " << fmt(fit.b, 7) << ", " << fmt(fit.c, 7) << ") rss "
           << fmt(fit.rss, 3) << "; ";
  }
  o.detail = detail.str();
  o.detail.resize(o.detail.size() - 2);
}

struct Criterion {
  void (*run)(Outcome&);
  double limit_s;
};

const Criterion kCriteria[] = {
    {criterion1, 1.0},   {criterion2, 60.0},  {criterion3, 60.0},  {criterion4, 1.0},
    {criterion5, 30.0},  {criterion6, 300.0}, {criterion7, 900.0}, {criterion8, 1.0},
};

bool run_one(int n) {
  Outcome o;
  const auto start = Clock::now();
  try {
    kCriteria[n - 1].run(o);
  } catch (const std::exception& e) {
    o.check(false, std::string("exception: ") + e.what());
  }
  const double elapsed = std::chrono::duration<double>(Clock::now() - start).count();
  const double limit = kCriteria[n - 1].limit_s;
  o.check(elapsed < limit, "runtime " + fmt(elapsed, 3) + " s over the " + fmt(limit) + " s limit");
  std::cout << "criterion " << n << ": " << (o.pass ? "PASS" : "FAIL") << "  " << o.detail << "  ["
            << fmt(elapsed, 3) << " s / " << fmt(limit) << " s]\n";
  for (const auto& f : o.failures) std::cout << "    " << f << '\n';
  std::cout.flush();
  return o.pass;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"lfg acceptance checks"};
  int only = 0;
  app.add_option("--criterion,-c", only, "Run a single criterion (1-8)")->check(CLI::Range(1, 8));
  CLI11_PARSE(app, argc, argv);
  bool ok = true;
  for (int n = 1; n <= 8; ++n) {
    if (only == 0 || only == n) ok &= run_one(n);
  }
  return ok ? 0 : 1;
}
