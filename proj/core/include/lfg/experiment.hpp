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

#ifndef LFG_EXPERIMENT_HPP
#define LFG_EXPERIMENT_HPP

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "lfg/adaptive_lambda.hpp"
#include "lfg/codec.hpp"
#include "lfg/metrics.hpp"
#include "lfg/power_fit.hpp"
#include "lfg/types.hpp"
#include "lfg/video_io.hpp"

namespace lfg::experiment {

struct SequenceInput {
  std::string id;
  std::string cls;    // content class label, e.g. "static"
  std::string group;  // coarser grouping, e.g. "64x64"
  std::vector<VideoFrame> frames;
  int frame_rate_num = 25;
  int frame_rate_den = 1;
};

// Encoder settings shared by every cell of an experiment.
struct Settings {
  Profile profile = Profile::kH264Like;
  double hevc_p = 0.5;
  int gop_length = 4;
  int search_range = 16;
  bool detect_scene_cuts = true;
  double scene_cut_threshold = 0.5;
  std::optional<adaptive::ControllerParams> controller;
  unsigned threads = 1;  // 0 = hardware concurrency

  EncoderConfig encoder_config(int qp, double k, bool adaptive) const;
};

struct SweepRecord {
  std::string seq;
  int qp = 0;
  double k = 1.0;
  bool adaptive = false;
  std::uint64_t bits = 0;
  int frames = 0;
  double bitrate_kbps = 0.0;
  double psnr_y = 0.0;
  double mean_dp = 0.0;  // mean luma MSE of P frames
  double mean_db = 0.0;  // mean luma MSE of B frames
  double r_pb = 0.0;     // mean_dp / mean_db, 0 when either is missing
};

struct RdRun {
  metrics::RDPoint point;
  std::vector<FrameStats> stats;  // coding order
  SweepRecord record;
};

// One encode. PSNR is the mean of per-frame luma PSNR; bitrate is
// total_bits * fps / frames / 1000.
RdRun run_rd_point(const SequenceInput& seq, int qp, double k, bool adaptive,
                   const Settings& settings);

// 15 values spaced by a constant ratio from 0.2 to 5.0; index 7 is exactly 1.
std::vector<double> default_k_grid();

std::vector<int> default_sweep_qps();    // 27 32 37 42
std::vector<int> default_compare_qps();  // 22 27 32 37 42

// Cartesian product over sequences x qps x ks with adaptive off. Records are
// sorted by (seq, qp, k, adaptive) regardless of scheduling.
std::vector<SweepRecord> sweep(std::span<const SequenceInput> sequences, std::span<const int> qps,
                               std::span<const double> ks, const Settings& settings);

void sort_canonical(std::vector<SweepRecord>& records);

struct KScore {
  double k = 1.0;
  double bd_rate = 0.0;
};

struct QpOptimum {
  int qp = 0;
  double k = 1.0;
  double lambda_opt = 0.0;  // k * lambda_orig of a B frame at qp
};

struct LambdaOpt {
  std::string seq;
  double k_star = 1.0;  // also r_lambda
  double bd_rate = 0.0;
  std::vector<KScore> scores;
  std::vector<double> skipped;  // k values whose curve was not monotone
  std::vector<QpOptimum> per_qp;
};

struct LambdaOptOptions {
  // Choose k independently per QP by the PSNR gain over the anchor curve
  // at the same rate, instead of reusing the per-sequence k*.
  bool per_qp = false;
};

// Records of a single sequence with adaptive off. Throws Error(kMissingAnchor)
// when k = 1 does not cover at least four QPs and Error(kInvalidArgument) for
// mixed sequence ids.
LambdaOpt find_lambda_opt(std::span<const SweepRecord> records, const Settings& settings,
                          const LambdaOptOptions& options = {});

// Mean r_pb of the k = 1 anchor rows of one sequence.
double anchor_ratio(std::span<const SweepRecord> records);

struct BdRow {
  std::string level;  // "sequence" | "class" | "group" | "overall"
  std::string label;
  int sequences = 0;
  double bd_psnr = 0.0;
  double bd_rate = 0.0;
};

struct CompareResult {
  std::vector<BdRow> sequences;
  std::vector<BdRow> classes;
  std::vector<BdRow> groups;
  BdRow overall;
  std::vector<SweepRecord> records;
};

// Anchor (k = 1, adaptive off) against adaptive encodes of every sequence at
// every QP. Class, group and overall rows average the per-sequence values.
CompareResult compare_adaptive(std::span<const SequenceInput> sequences, std::span<const int> qps,
                               const Settings& settings);

// Spearman rank correlation with average ranks for ties. NaN when either
// side has no variance. Throws Error(kInvalidArgument) on size mismatch or
// fewer than two samples.
double spearman(std::span<const double> x, std::span<const double> y);

// CSV helpers.
void write_sweep_csv(std::ostream& out, std::span<const SweepRecord> records);
std::vector<SweepRecord> read_sweep_csv(std::istream& in);
void write_frame_stats_csv(std::ostream& out, std::span<const FrameStats> stats);
void write_compare_csv(std::ostream& out, const CompareResult& result);
std::string format_compare_table(const CompareResult& result);
void write_lambda_opt_csv(std::ostream& out, std::span<const LambdaOpt> opts,
                          std::span<const double> ratios);
// Two-column rate/quality files; the header row is optional and columns may
// be named bitrate|bitrate_kbps and psnr|psnr_y.
std::vector<metrics::RDPoint> read_rd_csv(std::istream& in);
// Reads r_pb and r_lambda columns by header name.
std::vector<PowerPoint> read_power_csv(std::istream& in);
void write_fit_csv(std::ostream& out, const FitResult& fit);

}  // namespace lfg::experiment

#endif  // LFG_EXPERIMENT_HPP
