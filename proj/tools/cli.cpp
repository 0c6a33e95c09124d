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

#include "cli.hpp"

#include <CLI11.hpp>

#include <cctype>
#include <charconv>
#include <cmath>
#include <fstream>
#include <iomanip>
#include <ostream>
#include <string>

#include "lfg/codec.hpp"
#include "lfg/config_file.hpp"
#include "lfg/error.hpp"
#include "lfg/metrics.hpp"
#include "lfg/power_fit.hpp"
#include "lfg/synth.hpp"
#include "lfg/video_io.hpp"

namespace lfg::cli {

namespace {

namespace fs = std::filesystem;

// Usage problems found after CLI11 has accepted the arguments.
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

constexpr std::string_view kCommonKeys[] = {
    "profile", "hevc_p", "gop_length", "search_range", "scene_cuts", "scene_cut_threshold",
    "threads", "qps", "synth", "width", "height", "frames", "fps", "inputs", "input_class",
    "controller_a", "controller_b", "controller_c", "controller_r1", "controller_r2",
    "scale_from_orig"};
constexpr std::string_view kSweepKeys[] = {"k_grid", "per_qp", "lambda_opt_out"};
constexpr std::string_view kCompareKeys[] = {"table_out"};

int parse_int(std::string_view text, std::string_view what) {
  int v = 0;
  const auto res = std::from_chars(text.data(), text.data() + text.size(), v);
  if (text.empty() || res.ec != std::errc() || res.ptr != text.data() + text.size()) {
    throw Error(ErrorCode::kConfig, std::string(what) + ": bad integer '" + std::string(text) + "'");
  }
  return v;
}

std::pair<int, int> parse_size(const std::string& text) {
  const auto x = text.find_first_of("xX");
  if (x == std::string::npos) throw UsageError("--size expects WxH, got '" + text + "'");
  try {
    return {parse_int(std::string_view(text).substr(0, x), "width"),
            parse_int(std::string_view(text).substr(x + 1), "height")};
  } catch (const Error&) {
    throw UsageError("--size expects WxH, got '" + text + "'");
  }
}

std::ofstream open_out(const fs::path& path) {
  std::ofstream f(path, std::ios::binary);
  if (!f) throw Error(ErrorCode::kIo, "cannot write " + path.string());
  return f;
}

std::ifstream open_in(const fs::path& path) {
  std::ifstream f(path);
  if (!f) throw Error(ErrorCode::kIo, "cannot open " + path.string());
  return f;
}

bool is_y4m(const fs::path& p) {
  std::string ext = p.extension().string();
  for (auto& c : ext) c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
  return ext == ".y4m";
}

std::string group_of(const std::vector<VideoFrame>& frames) {
  if (frames.empty()) return "empty";
  return std::to_string(frames[0].width()) + "x" + std::to_string(frames[0].height());
}

// "static:3" or "dyntex:1-3".
void add_synth(Plan& plan, const std::string& item, int width, int height, int frames, int fps) {
  const auto colon = item.find(':');
  if (colon == std::string::npos) {
    throw Error(ErrorCode::kConfig,
                "synth: expected class:seed or class:first-last, got '" + item + "'");
  }
  ContentClass cls{};
  try {
    cls = parse_content_class(item.substr(0, colon));
  } catch (const Error& e) {
    throw Error(ErrorCode::kConfig, std::string("synth: ") + e.what());
  }
  const std::string seeds = item.substr(colon + 1);
  const auto dash = seeds.find('-');
  const int first = parse_int(std::string_view(seeds).substr(0, dash), "synth seed");
  const int last = dash == std::string::npos
                       ? first
                       : parse_int(std::string_view(seeds).substr(dash + 1), "synth seed");
  if (first < 0 || last < first) {
    throw Error(ErrorCode::kConfig, "synth: bad seed range '" + seeds + "'");
  }
  for (int s = first; s <= last; ++s) {
    const ContentSpec spec{cls, static_cast<std::uint64_t>(s), width, height, frames};
    experiment::SequenceInput in;
    in.id = spec.id();
    in.cls = std::string(to_string(cls));
    in.frames = synth_sequence(spec);
    in.group = group_of(in.frames);
    in.frame_rate_num = fps;
    plan.sequences.push_back(std::move(in));
  }
}

std::vector<VideoFrame> load_input(const fs::path& path, int width, int height, int& fps_num,
                                   int& fps_den) {
  if (is_y4m(path)) {
    Sequence seq = read_y4m(path);
    fps_num = seq.header.frame_rate_num;
    fps_den = seq.header.frame_rate_den;
    return std::move(seq.frames);
  }
  if (width <= 0 || height <= 0) {
    throw UsageError("raw input " + path.string() + " needs --width and --height");
  }
  return read_raw_yuv(path, width, height);
}

void print_error(std::ostream& err, const Error& e) {
  err << "lfg: error [" << to_string(e.code()) << "]: " << e.what() << '\n';
}

// Subcommand handlers. Each returns an exit code or throws.

struct EncodeArgs {
  std::string input;
  int width = 0;
  int height = 0;
  int fps = 25;
  int qp = 32;
  std::string profile = "h264";
  bool adaptive = false;
  double k = 1.0;
  int gop = 4;
  int search_range = 16;
  bool no_scene_cuts = false;
  std::string out;
  std::string stats;
};

int do_encode(const EncodeArgs& a, std::ostream& out) {
  int fps_num = a.fps;
  int fps_den = 1;
  const auto frames = load_input(a.input, a.width, a.height, fps_num, fps_den);
  EncoderConfig config;
  config.qp = a.qp;
  config.profile = parse_profile(a.profile);
  config.adaptive = a.adaptive;
  config.lambda_scale_k = a.k;
  config.gop_length = a.gop;
  config.search_range = a.search_range;
  config.detect_scene_cuts = !a.no_scene_cuts;
  config.frame_rate_num = fps_num;
  config.frame_rate_den = fps_den;
  if (a.adaptive && a.k != 1.0) throw UsageError("--adaptive and --k are mutually exclusive");

  const EncodeResult res = encode_sequence(frames, config);
  write_bitstream(res.bitstream, a.out);
  if (!a.stats.empty()) {
    auto f = open_out(a.stats);
    experiment::write_frame_stats_csv(f, res.stats);
  }
  double psnr = 0.0;
  for (const auto& s : res.stats) psnr += metrics::psnr(s.mse_y);
  psnr /= static_cast<double>(res.stats.size());
  const double kbps = static_cast<double>(res.bitstream.total_bits) * fps_num / fps_den /
                      static_cast<double>(res.stats.size()) / 1000.0;
  out << "frames " << res.stats.size() << "  bits " << res.bitstream.total_bits << "  "
      << std::fixed << std::setprecision(3) << kbps << " kbps  " << psnr << " dB\n";
  return kExitOk;
}

int do_decode(const std::string& in, const std::string& out_path, std::ostream& out) {
  const Bitstream bs = read_bitstream(in);
  const auto frames = decode_sequence(bs);
  SequenceHeader h;
  h.width = bs.width;
  h.height = bs.height;
  h.frame_rate_num = bs.frame_rate_num;
  h.frame_rate_den = bs.frame_rate_den;
  h.frame_count = bs.frame_count;
  write_y4m(h, frames, out_path);
  out << "decoded " << frames.size() << " frames " << bs.width << "x" << bs.height << '\n';
  return kExitOk;
}

int do_sweep(const std::string& config, const std::string& out_path, std::ostream& out) {
  const Plan plan = load_plan(config, PlanKind::kSweep);
  const auto records = experiment::sweep(plan.sequences, plan.qps, plan.ks, plan.settings);
  {
    auto f = open_out(out_path);
    experiment::write_sweep_csv(f, records);
  }

  std::vector<experiment::LambdaOpt> opts;
  std::vector<double> ratios;
  std::size_t begin = 0;
  while (begin < records.size()) {
    std::size_t end = begin;
    while (end < records.size() && records[end].seq == records[begin].seq) ++end;
    const std::span<const experiment::SweepRecord> rows(records.data() + begin, end - begin);
    opts.push_back(experiment::find_lambda_opt(rows, plan.settings, {plan.per_qp}));
    ratios.push_back(experiment::anchor_ratio(rows));
    out << std::left << std::setw(28) << opts.back().seq << " r_pb " << std::fixed
        << std::setprecision(4) << ratios.back() << "  k* " << opts.back().k_star
        << "  bd_rate " << std::setprecision(3) << opts.back().bd_rate << " %\n";
    begin = end;
  }
  if (!plan.lambda_opt_out.empty()) {
    auto f = open_out(plan.lambda_opt_out);
    experiment::write_lambda_opt_csv(f, opts, ratios);
  }
  if (opts.size() >= 2) {
    std::vector<double> ks;
    for (const auto& o : opts) ks.push_back(o.k_star);
    out << "spearman(r_pb, k*) " << std::setprecision(4) << experiment::spearman(ratios, ks)
        << '\n';
  }
  return kExitOk;
}

int do_fit(const std::string& in, const std::string& out_path, std::ostream& out) {
  auto f = open_in(in);
  const auto points = experiment::read_power_csv(f);
  const FitResult fit = fit_power(points);
  if (!out_path.empty()) {
    auto o = open_out(out_path);
    experiment::write_fit_csv(o, fit);
  }
  out << std::setprecision(6) << "a " << fit.a << "  b " << fit.b << "  c " << fit.c << "  rss "
      << fit.rss << "  n " << fit.points << '\n';
  return kExitOk;
}

int do_bd(const std::string& anchor_path, const std::string& test_path, std::ostream& out) {
  auto fa = open_in(anchor_path);
  auto ft = open_in(test_path);
  const metrics::RDCurve anchor(experiment::read_rd_csv(fa));
  const metrics::RDCurve test(experiment::read_rd_csv(ft));
  out << std::fixed << std::setprecision(4) << "BD-PSNR " << metrics::bd_psnr(anchor, test)
      << " dB\nBD-Rate " << metrics::bd_rate(anchor, test) << " %\n";
  return kExitOk;
}

int do_compare(const std::string& config, const std::string& out_path, std::ostream& out) {
  const Plan plan = load_plan(config, PlanKind::kCompare);
  const auto result = experiment::compare_adaptive(plan.sequences, plan.qps, plan.settings);
  {
    auto f = open_out(out_path);
    experiment::write_compare_csv(f, result);
  }
  const std::string table = experiment::format_compare_table(result);
  if (!plan.table_out.empty()) {
    auto f = open_out(plan.table_out);
    f << table;
  }
  out << table;
  return kExitOk;
}

int do_synth(const std::string& cls, std::uint64_t seed, const std::string& size, int frames,
             int fps, const std::string& out_path, std::ostream& out) {
  const auto [w, h] = parse_size(size);
  const ContentSpec spec{parse_content_class(cls), seed, w, h, frames};
  const auto seq = synth_sequence(spec);
  SequenceHeader hdr;
  hdr.width = w;
  hdr.height = h;
  hdr.frame_rate_num = fps;
  hdr.frame_count = frames;
  write_y4m(hdr, seq, out_path);
  out << spec.id() << " -> " << out_path << '\n';
  return kExitOk;
}

}  // namespace

Plan load_plan(const fs::path& path, PlanKind kind) {
  std::vector<std::string_view> allowed(std::begin(kCommonKeys), std::end(kCommonKeys));
  if (kind == PlanKind::kSweep) {
    allowed.insert(allowed.end(), std::begin(kSweepKeys), std::end(kSweepKeys));
  } else {
    allowed.insert(allowed.end(), std::begin(kCompareKeys), std::end(kCompareKeys));
  }
  const ConfigFile cfg = ConfigFile::load(path, allowed);
  const fs::path base = path.parent_path();
  auto resolve = [&](const std::string& p) { return fs::path(p).is_absolute() ? fs::path(p) : base / p; };

  Plan plan;
  auto& s = plan.settings;
  try {
    s.profile = parse_profile(cfg.get_string("profile", "h264"));
  } catch (const Error& e) {
    throw Error(ErrorCode::kConfig, std::string("profile: ") + e.what());
  }
  s.hevc_p = cfg.get_double("hevc_p", 0.5);
  s.gop_length = cfg.get_int("gop_length", 4);
  s.search_range = cfg.get_int("search_range", 16);
  s.detect_scene_cuts = cfg.get_bool("scene_cuts", true);
  s.scene_cut_threshold = cfg.get_double("scene_cut_threshold", 0.5);
  const int threads = cfg.get_int("threads", 1);
  if (threads < 0) throw Error(ErrorCode::kConfig, "threads must be >= 0");
  s.threads = static_cast<unsigned>(threads);

  const char* ctl_keys[] = {"controller_a", "controller_b", "controller_c", "controller_r1",
                            "controller_r2", "scale_from_orig"};
  if (std::any_of(std::begin(ctl_keys), std::end(ctl_keys),
                  [&](const char* k) { return cfg.has(k); })) {
    auto p = adaptive::ControllerParams::for_profile(s.profile);
    p.a = cfg.get_double("controller_a", p.a);
    p.b = cfg.get_double("controller_b", p.b);
    p.c = cfg.get_double("controller_c", p.c);
    p.r1 = cfg.get_double("controller_r1", p.r1);
    p.r2 = cfg.get_double("controller_r2", p.r2);
    p.scale_from_orig = cfg.get_bool("scale_from_orig", p.scale_from_orig);
    s.controller = p;
  }

  plan.qps = cfg.get_int_list("qps", kind == PlanKind::kSweep ? experiment::default_sweep_qps()
                                                              : experiment::default_compare_qps());
  if (plan.qps.empty()) throw Error(ErrorCode::kConfig, "qps: empty");
  if (kind == PlanKind::kSweep) {
    if (cfg.get_string("k_grid", "default") == "default") {
      plan.ks = experiment::default_k_grid();
    } else {
      plan.ks = cfg.get_double_list("k_grid", {});
    }
    plan.per_qp = cfg.get_bool("per_qp", false);
    if (cfg.has("lambda_opt_out")) plan.lambda_opt_out = resolve(cfg.get_string("lambda_opt_out", ""));
  } else if (cfg.has("table_out")) {
    plan.table_out = resolve(cfg.get_string("table_out", ""));
  }

  const int width = cfg.get_int("width", 64);
  const int height = cfg.get_int("height", 64);
  const int frames = cfg.get_int("frames", 61);
  const int fps = cfg.get_int("fps", 25);
  if (fps <= 0) throw Error(ErrorCode::kConfig, "fps must be > 0");
  for (const auto& item : cfg.get_list("synth")) add_synth(plan, item, width, height, frames, fps);
  const std::string input_class = cfg.get_string("input_class", "file");
  for (const auto& item : cfg.get_list("inputs")) {
    const fs::path p = resolve(item);
    if (!is_y4m(p)) throw Error(ErrorCode::kConfig, "inputs: only .y4m files are accepted: " + item);
    Sequence seq = read_y4m(p);
    experiment::SequenceInput in;
    in.id = p.stem().string();
    in.cls = input_class;
    in.frames = std::move(seq.frames);
    in.group = group_of(in.frames);
    in.frame_rate_num = seq.header.frame_rate_num;
    in.frame_rate_den = seq.header.frame_rate_den;
    plan.sequences.push_back(std::move(in));
  }
  if (plan.sequences.empty()) throw Error(ErrorCode::kConfig, "no sequences: set synth or inputs");
  return plan;
}

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"lfg: toy hybrid video codec and B-frame lambda experiments", "lfg"};
  app.require_subcommand(1);
  int code = kExitOk;
  std::function<int()> action;

  EncodeArgs enc;
  auto* encode = app.add_subcommand("encode", "Encode a y4m or raw 4:2:0 file");
  encode->add_option("--input,-i", enc.input, "Input .y4m or raw .yuv")->required()->check(CLI::ExistingFile);
  encode->add_option("--width", enc.width, "Raw input width");
  encode->add_option("--height", enc.height, "Raw input height");
  encode->add_option("--fps", enc.fps, "Raw input frame rate")->check(CLI::PositiveNumber);
  encode->add_option("--qp", enc.qp, "Quantisation parameter")->check(CLI::Range(0, 51));
  encode->add_option("--profile", enc.profile, "Lambda profile")->check(CLI::IsMember({"h264", "hevc"}));
  encode->add_flag("--adaptive", enc.adaptive, "Adapt the B-frame lambda");
  encode->add_option("--k", enc.k, "Fixed B-frame lambda scale")->check(CLI::PositiveNumber);
  encode->add_option("--gop", enc.gop, "Anchor spacing")->check(CLI::Range(1, 64));
  encode->add_option("--search-range", enc.search_range, "Motion search range")->check(CLI::Range(0, 64));
  encode->add_flag("--no-scene-cuts", enc.no_scene_cuts, "Disable scene-cut detection");
  encode->add_option("--out,-o", enc.out, "Output bitstream")->required();
  encode->add_option("--stats", enc.stats, "Per-frame statistics CSV");
  encode->callback([&] { action = [&] { return do_encode(enc, out); }; });

  std::string dec_in;
  std::string dec_out;
  auto* decode = app.add_subcommand("decode", "Decode a bitstream to y4m");
  decode->add_option("--in,-i", dec_in, "Input bitstream")->required()->check(CLI::ExistingFile);
  decode->add_option("--out,-o", dec_out, "Output .y4m")->required();
  decode->callback([&] { action = [&] { return do_decode(dec_in, dec_out, out); }; });

  std::string sweep_cfg;
  std::string sweep_out;
  auto* sweep = app.add_subcommand("sweep", "Fixed-k lambda sweep and lambda_opt search");
  sweep->add_option("--config,-c", sweep_cfg, "Experiment config")->required()->check(CLI::ExistingFile);
  sweep->add_option("--out,-o", sweep_out, "Sweep CSV")->required();
  sweep->callback([&] { action = [&] { return do_sweep(sweep_cfg, sweep_out, out); }; });

  std::string fit_in;
  std::string fit_out;
  auto* fit = app.add_subcommand("fit", "Fit r_lambda = a * r_pb^b + c");
  fit->add_option("--in,-i", fit_in, "CSV with r_pb and r_lambda columns")->required()->check(CLI::ExistingFile);
  fit->add_option("--out,-o", fit_out, "Fit CSV");
  fit->callback([&] { action = [&] { return do_fit(fit_in, fit_out, out); }; });

  std::string bd_anchor;
  std::string bd_test;
  auto* bd = app.add_subcommand("bd", "BD-PSNR and BD-Rate between two RD curves");
  bd->add_option("--anchor,-a", bd_anchor, "Anchor bitrate,psnr CSV")->required()->check(CLI::ExistingFile);
  bd->add_option("--test,-t", bd_test, "Test bitrate,psnr CSV")->required()->check(CLI::ExistingFile);
  bd->callback([&] { action = [&] { return do_bd(bd_anchor, bd_test, out); }; });

  std::string cmp_cfg;
  std::string cmp_out;
  auto* compare = app.add_subcommand("compare", "Adaptive lambda against the anchor");
  compare->add_option("--config,-c", cmp_cfg, "Experiment config")->required()->check(CLI::ExistingFile);
  compare->add_option("--out,-o", cmp_out, "BD table CSV")->required();
  compare->callback([&] { action = [&] { return do_compare(cmp_cfg, cmp_out, out); }; });

  std::string syn_class;
  std::uint64_t syn_seed = 1;
  std::string syn_size = "64x64";
  int syn_frames = 61;
  int syn_fps = 25;
  std::string syn_out;
  auto* synth = app.add_subcommand("synth", "Generate a synthetic test sequence");
  synth->add_option("--class", syn_class, "Content class")->required()->check(CLI::IsMember({"static", "dyntex", "mixed"}));
  synth->add_option("--seed", syn_seed, "Generator seed");
  synth->add_option("--size", syn_size, "WxH");
  synth->add_option("--frames", syn_frames, "Frame count")->check(CLI::PositiveNumber);
  synth->add_option("--fps", syn_fps, "Frame rate written to the header")->check(CLI::PositiveNumber);
  synth->add_option("--out,-o", syn_out, "Output .y4m")->required();
  synth->callback([&] {
    action = [&] { return do_synth(syn_class, syn_seed, syn_size, syn_frames, syn_fps, syn_out, out); };
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e, out, err);
    return rc == 0 ? kExitOk : kExitUsage;
  }

  try {
    code = action();
  } catch (const UsageError& e) {
    err << "lfg: " << e.what() << '\n';
    return kExitUsage;
  } catch (const Error& e) {
    print_error(err, e);
    return e.code() == ErrorCode::kConfig ? kExitUsage : kExitData;
  } catch (const std::exception& e) {
    err << "lfg: " << e.what() << '\n';
    return kExitData;
  }
  return code;
}

}  // namespace lfg::cli
