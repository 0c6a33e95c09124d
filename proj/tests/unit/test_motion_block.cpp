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

#include <gtest/gtest.h>

#include <random>

#include "lfg/block_coder.hpp"
#include "lfg/motion.hpp"
#include "test_util.hpp"

namespace lfg {
namespace {

std::array<std::uint8_t, 256> block_at(const Plane& p, int x, int y) {
  std::array<std::uint8_t, 256> b{};
  for (int j = 0; j < 16; ++j) {
    for (int i = 0; i < 16; ++i) b[static_cast<std::size_t>(j * 16 + i)] = p.at(x + i, y + j);
  }
  return b;
}

std::int64_t ssd_at(const std::array<std::uint8_t, 256>& blk, const PaddedPlane& ref, int x, int y) {
  std::int64_t s = 0;
  for (int j = 0; j < 16; ++j) {
    for (int i = 0; i < 16; ++i) {
      const int d = blk[static_cast<std::size_t>(j * 16 + i)] - ref.at(x + i, y + j)[0];
      s += d * d;
    }
  }
  return s;
}

TEST(PaddedPlane, ReplicatesEdges) {
  const auto f = testing::random_frame(32, 16, 3);
  const PaddedPlane p(f.y, 5);
  EXPECT_EQ(p.at(-5, -5)[0], f.y.at(0, 0));
  EXPECT_EQ(p.at(36, 3)[0], f.y.at(31, 3));
  EXPECT_EQ(p.at(7, 20)[0], f.y.at(7, 15));
  EXPECT_EQ(p.at(10, 10)[0], f.y.at(10, 10));
}

TEST(MvBits, ExpGolombOfDifference) {
  EXPECT_EQ(mv_bits({0, 0}, {0, 0}), 2);
  EXPECT_EQ(mv_bits({1, 0}, {0, 0}), 4);
  EXPECT_EQ(mv_bits({3, -2}, {3, -2}), 2);
  EXPECT_EQ(mv_bits({-1, 2}, {0, 0}), 3 + 5);
}

TEST(MotionSearch, SearchOrder) {
  const MotionSearcher s(2);
  const auto order = s.order();
  ASSERT_EQ(order.size(), 25u);
  EXPECT_EQ(order[0], (MotionVector{0, 0}));
  EXPECT_EQ(order[1], (MotionVector{0, -1}));
  EXPECT_EQ(order[2], (MotionVector{-1, 0}));
  EXPECT_EQ(order[3], (MotionVector{1, 0}));
  EXPECT_EQ(order[4], (MotionVector{0, 1}));
}

TEST(MotionSearch, IdenticalBlockAtOrigin) {
  const auto f = testing::textured_frame(64, 64, 1);
  const PaddedPlane ref(f.y, 16);
  const auto blk = block_at(f.y, 16, 16);
  const auto r = motion_search(blk, 16, 16, ref, {0, 0}, 16, rdo::FixedLambda::from(10.0));
  EXPECT_EQ(r.mv, (MotionVector{0, 0}));
  EXPECT_EQ(r.ssd, 0);
}

TEST(MotionSearch, RecoversTranslation) {
  const auto f = testing::random_frame(64, 64, 7);
  const PaddedPlane ref(f.y, 16);
  // The block at (16,16) of the current picture equals the reference at (21,13).
  const auto blk = block_at(f.y, 21, 13);
  const auto r = motion_search(blk, 16, 16, ref, {0, 0}, 16, rdo::FixedLambda::from(4.0));
  EXPECT_EQ(r.mv, (MotionVector{5, -3}));
  EXPECT_EQ(r.ssd, 0);
}

TEST(MotionSearch, MatchesBruteForce) {
  std::mt19937_64 rng(17);
  for (int t = 0; t < 30; ++t) {
    const auto f = testing::random_frame(48, 48, rng());
    const auto g = testing::textured_frame(48, 48, rng());
    const PaddedPlane ref(t % 2 ? f.y : g.y, 6);
    const auto blk = block_at((t % 3 ? g : f).y, 16, 16);
    const MotionVector pred{static_cast<int>(rng() % 5) - 2, static_cast<int>(rng() % 5) - 2};
    const auto lambda = rdo::FixedLambda::from(static_cast<double>(rng() % 4000) / 10.0);
    const auto r = motion_search(blk, 16, 16, ref, pred, 6, lambda);
    std::int64_t best = INT64_MAX;
    MotionVector best_mv;
    int best_key[3] = {0, 0, 0};
    for (int dy = -6; dy <= 6; ++dy) {
      for (int dx = -6; dx <= 6; ++dx) {
        const std::int64_t c =
            rdo::rd_cost_fixed(ssd_at(blk, ref, 16 + dx, 16 + dy), mv_bits({dx, dy}, pred), lambda);
        const int key[3] = {std::abs(dx) + std::abs(dy), dy, dx};
        if (c < best || (c == best && std::lexicographical_compare(key, key + 3, best_key, best_key + 3))) {
          best = c;
          best_mv = {dx, dy};
          std::copy(key, key + 3, best_key);
        }
      }
    }
    EXPECT_EQ(r.cost, best);
    EXPECT_EQ(r.mv, best_mv);
  }
}

TEST(MotionSearch, ZeroLambdaIsPureSsd) {
  const auto f = testing::random_frame(48, 48, 5);
  const auto g = testing::random_frame(48, 48, 6);
  const PaddedPlane ref(f.y, 4);
  const auto blk = block_at(g.y, 16, 16);
  const auto r = motion_search(blk, 16, 16, ref, {4, 4}, 4, rdo::FixedLambda{0});
  std::int64_t best = INT64_MAX;
  for (int dy = -4; dy <= 4; ++dy) {
    for (int dx = -4; dx <= 4; ++dx) best = std::min(best, ssd_at(blk, ref, 16 + dx, 16 + dy));
  }
  EXPECT_EQ(r.ssd, best);
  EXPECT_EQ(r.cost, best * 1000);
}

TEST(MotionSearch, RejectsThinPadding) {
  const auto f = testing::random_frame(32, 32, 1);
  const PaddedPlane ref(f.y, 2);
  const auto blk = block_at(f.y, 0, 0);
  EXPECT_EQ(testing::code_of([&] { motion_search(blk, 0, 0, ref, {}, 4, {}); }),
            ErrorCode::kInvalidArgument);
}

block::Levels random_levels(std::mt19937_64& rng) {
  block::Levels lv{};
  for (auto& b : lv) {
    for (auto& v : b) {
      const auto r = rng() % 10;
      v = r < 7 ? 0 : static_cast<std::int32_t>(rng() % 41) - 20;
    }
  }
  return lv;
}

TEST(BlockSyntax, RoundTripWithExactBitCount) {
  std::mt19937_64 rng(23);
  for (int t = 0; t < 500; ++t) {
    const FrameType type = static_cast<FrameType>(rng() % 3);
    block::BlockSyntax s;
    const MotionVector a{static_cast<int>(rng() % 33) - 16, static_cast<int>(rng() % 33) - 16};
    const MotionVector b{static_cast<int>(rng() % 33) - 16, static_cast<int>(rng() % 33) - 16};
    const BlockMode choices[] = {BlockMode::skip(), BlockMode::fwd(a), BlockMode::bwd(b),
                                 BlockMode::bi(a, b), BlockMode::intra_mode(IntraMode::kHorizontal)};
    do {
      s.mode = choices[rng() % 5];
    } while (!legal_in(s.mode, type));
    if (s.mode.uses_fwd()) s.mvd_fwd = a;
    if (s.mode.uses_bwd()) s.mvd_bwd = b;
    if (s.mode.kind != ModeKind::kSkip) s.levels = random_levels(rng);

    BitWriter w;
    block::write_block(w, type, s);
    EXPECT_EQ(w.bit_count(), block::block_bits(type, s));
    BitReader r(w.bytes(), w.bit_count());
    const auto back = block::read_block(r, type);
    EXPECT_EQ(r.remaining(), 0u);
    EXPECT_EQ(back.mode.kind, s.mode.kind);
    EXPECT_EQ(back.mode.intra, s.mode.intra);
    EXPECT_EQ(back.mvd_fwd, s.mvd_fwd);
    EXPECT_EQ(back.mvd_bwd, s.mvd_bwd);
    EXPECT_EQ(back.levels, s.levels);
  }
}

TEST(BlockSyntax, SkipIsOneBit) {
  block::BlockSyntax s;
  EXPECT_EQ(block::block_bits(FrameType::kP, s), 1u);
  EXPECT_EQ(block::block_bits(FrameType::kB, s), 1u);
}

TEST(BlockSyntax, IllegalModeIndex) {
  BitWriter w;
  w.put_bit(false);
  put_ue(w, 2);  // P frames only know FWD and INTRA
  BitReader r(w.bytes(), w.bit_count());
  EXPECT_EQ(testing::code_of([&] { block::read_block(r, FrameType::kP); }),
            ErrorCode::kMalformedCode);
}

TEST(BlockSyntax, RunPastEndOfBlock) {
  BitWriter w;
  put_ue(w, 0);   // intra DC
  put_ue(w, 1);   // one coefficient
  put_ue(w, 64);  // run beyond the block
  put_se(w, 1);
  BitReader r(w.bytes(), w.bit_count());
  EXPECT_EQ(testing::code_of([&] { block::read_block(r, FrameType::kI); }),
            ErrorCode::kMalformedCode);
}

TEST(Prediction, SkipAndBi) {
  const auto a = testing::random_frame(32, 32, 1);
  const auto b = testing::random_frame(32, 32, 2);
  const auto fa = block::make_anchor(a, 4);
  const auto fb = block::make_anchor(b, 4);
  const block::Picture cur{Plane(32, 32), Plane(16, 16), Plane(16, 16)};
  const auto p = block::predict(BlockMode::skip(), FrameType::kP, &fa, nullptr, cur, 16, 0);
  EXPECT_EQ(p.y[0], a.y.at(16, 0));
  EXPECT_EQ(p.u[9], a.u.at(9, 1));
  const auto s = block::predict(BlockMode::skip(), FrameType::kB, &fa, &fb, cur, 16, 16);
  EXPECT_EQ(s.y[17], (a.y.at(17, 17) + b.y.at(17, 17) + 1) >> 1);
  const auto bi = block::predict(BlockMode::bi({1, 0}, {-3, 1}), FrameType::kB, &fa, &fb, cur, 0, 0);
  EXPECT_EQ(bi.y[0], (a.y.at(1, 0) + b.y.at(0, 1) + 1) >> 1);
  // Chroma uses floor(mv / 2).
  EXPECT_EQ(bi.v[0], (a.v.at(0, 0) + b.v.at(0, 0) + 1) >> 1);
  EXPECT_EQ(block::chroma_mv({-3, 3}), (MotionVector{-2, 1}));
}

TEST(Prediction, IntraNeighbours) {
  block::Picture cur{Plane(32, 32, 0), Plane(16, 16, 0), Plane(16, 16, 0)};
  const auto none = block::predict(BlockMode::intra_mode(IntraMode::kDc), FrameType::kI, nullptr,
                                   nullptr, cur, 0, 0);
  for (auto v : none.y) EXPECT_EQ(v, 128);
  for (int j = 0; j < 16; ++j) cur.y.at(15, j) = static_cast<std::uint8_t>(10 * j);
  const auto h = block::predict(BlockMode::intra_mode(IntraMode::kHorizontal), FrameType::kI,
                                nullptr, nullptr, cur, 16, 0);
  for (int j = 0; j < 16; ++j) EXPECT_EQ(h.y[static_cast<std::size_t>(j * 16 + 7)], 10 * j);
  const auto v = block::predict(BlockMode::intra_mode(IntraMode::kVertical), FrameType::kI,
                                nullptr, nullptr, cur, 16, 0);
  for (auto s : v.y) EXPECT_EQ(s, 128);
}

TEST(Residual, ReconstructionTracksSourceAtLowQp) {
  std::mt19937_64 rng(9);
  block::Pixels src;
  block::Pixels pred;
  for (auto& v : src.y) v = static_cast<std::uint8_t>(rng() % 256);
  for (auto& v : pred.y) v = static_cast<std::uint8_t>(rng() % 256);
  for (auto& v : src.u) v = static_cast<std::uint8_t>(rng() % 256);
  for (auto& v : pred.u) v = 128;
  for (auto& v : src.v) v = static_cast<std::uint8_t>(rng() % 256);
  for (auto& v : pred.v) v = 128;
  const auto lv = block::quantize_residual(src, pred, 0);
  const auto rec = block::reconstruct(pred, lv, 0);
  for (std::size_t i = 0; i < 256; ++i) EXPECT_LE(std::abs(rec.y[i] - src.y[i]), 1);
  EXPECT_TRUE(block::all_zero(block::quantize_residual(src, src, 30)));
}

}  // namespace
}  // namespace lfg
