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

#include "lfg/experiment.hpp"

#include <algorithm>
#include <atomic>
#include <charconv>
#include <cmath>
#include <exception>
#include <functional>
#include <iomanip>
#include <istream>
#include <limits>
#include <map>
#include <mutex>
#include <numeric>
#include <ostream>
#include <sstream>
#include <thread>
#include <tuple>

#include "lfg/error.hpp"
#include "lfg/rdo.hpp"

namespace lfg::experiment {

namespace {

// Shortest text that parses back to the same double.
std::string num(double v) {
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof buf, v);
  return std::string(buf, res.ptr);
}

double parse_double(std::string_view text, std::string_view what) {
  double v = 0.0;
  while (!text.empty() && text.front() == ' ') text.remove_prefix(1);
  while (!text.empty() && (text.back() == ' ' || text.back() == '\r')) text.remove_suffix(1);
  const auto res = std::from_chars(text.data(), text.data() + text.size(), v);
  if (res.ec != std::errc() || res.ptr != text.data() + text.size()) {
    throw Error(ErrorCode::kMalformedCsv, "csv: bad number for " + std::string(what) + ": '" +
                                        std::string(text) + "'");
  }
  return v;
}

std::vector<std::string> split_csv(const std::string& line) {
  std::vector<std::string> out;
  std::string cell;
  std::istringstream ss(line);
  while (std::getline(ss, cell, ',')) {
    while (!cell.empty() && (cell.back() == '\r' || cell.back() == ' ')) cell.pop_back();
    while (!cell.empty() && cell.front() == ' ') cell.erase(cell.begin());
    out.push_back(cell);
  }
  if (!line.empty() && line.back() == ',') out.emplace_back();
  return out;
}

bool next_row(std::istream& in, std::vector<std::string>& row) {
  std::string line;
  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.find_first_not_of(" \t") == std::string::npos) continue;
    if (line[0] == '#') continue;
    row = split_csv(line);
    return true;
  }
  return false;
}

std::size_t column(const std::vector<std::string>& header, std::initializer_list<const char*> names) {
  for (const char* n : names) {
    const auto it = std::find(header.begin(), header.end(), n);
    if (it != header.end()) return static_cast<std::size_t>(it - header.begin());
  }
  throw Error(ErrorCode::kMalformedCsv, std::string("csv: missing column ") + *names.begin());
}

// Runs job(i) for i in [0, n) on up to `threads` workers; rethrows the first
// failure after all workers stop.
void parallel_for(std::size_t n, unsigned threads, const std::function<void(std::size_t)>& job) {
  if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
  threads = static_cast<unsigned>(std::min<std::size_t>(threads, n));
  if (threads <= 1) {
    for (std::size_t i = 0; i < n; ++i) job(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::mutex mu;
  std::vector<std::thread> pool;
  for (unsigned t = 0; t < threads; ++t) {
    pool.emplace_back([&] {
      for (;;) {
        const std::size_t i = next.fetch_add(1);
        if (i >= n) return;
        try {
          job(i);
        } catch (...) {
          std::lock_guard lock(mu);
          if (!failure) failure = std::current_exception();
          next.store(n);
        }
      }
    });
  }
  for (auto& th : pool) th.join();
  if (failure) std::rethrow_exception(failure);
}

std::vector<const SweepRecord*> rows_for_k(std::span<const SweepRecord> records, double k) {
  std::vector<const SweepRecord*> out;
  for (const auto& r : records) {
    if (!r.adaptive && r.k == k) out.push_back(&r);
  }
  std::sort(out.begin(), out.end(),
            [](const SweepRecord* a, const SweepRecord* b) { return a->qp < b->qp; });
  return out;
}

metrics::RDCurve curve_of(const std::vector<const SweepRecord*>& rows) {
  std::vector<metrics::RDPoint> pts;
  for (const auto* r : rows) pts.push_back({r->bitrate_kbps, r->psnr_y});
  return metrics::RDCurve(std::move(pts));
}

// Prefers larger score, then k closest to 1.
bool better(double score, double k, double best_score, double best_k) {
  if (score != best_score) return score > best_score;
  return std::fabs(k - 1.0) < std::fabs(best_k - 1.0);
}

BdRow average(std::string level, std::string label, const std::vector<BdRow>& rows) {
  BdRow out{std::move(level), std::move(label), 0, 0.0, 0.0};
  for (const auto& r : rows) {
    out.bd_psnr += r.bd_psnr;
    out.bd_rate += r.bd_rate;
    ++out.sequences;
  }
  if (out.sequences > 0) {
    out.bd_psnr /= out.sequences;
    out.bd_rate /= out.sequences;
  }
  return out;
}

}  // namespace

EncoderConfig Settings::encoder_config(int qp, double k, bool adaptive_on) const {
  EncoderConfig c;
  c.qp = qp;
  c.gop_length = gop_length;
  c.profile = profile;
  c.hevc_p = hevc_p;
  c.adaptive = adaptive_on;
  c.lambda_scale_k = k;
  c.search_range = search_range;
  c.detect_scene_cuts = detect_scene_cuts;
  c.scene_cut_threshold = scene_cut_threshold;
  c.controller = controller;
  return c;
}

RdRun run_rd_point(const SequenceInput& seq, int qp, double k, bool adaptive_on,
                   const Settings& settings) {
  EncoderConfig config = settings.encoder_config(qp, k, adaptive_on);
  config.frame_rate_num = seq.frame_rate_num;
  config.frame_rate_den = seq.frame_rate_den;
  if (seq.frame_rate_num <= 0 || seq.frame_rate_den <= 0) {
    throw Error(ErrorCode::kInvalidArgument, "run_rd_point: bad frame rate");
  }
  EncodeResult enc = encode_sequence(seq.frames, config);

  RdRun run;
  SweepRecord& rec = run.record;
  rec.seq = seq.id;
  rec.qp = qp;
  rec.k = k;
  rec.adaptive = adaptive_on;
  rec.bits = enc.bitstream.total_bits;
  rec.frames = static_cast<int>(enc.stats.size());

  double psnr_sum = 0.0;
  double dp = 0.0;
  double db = 0.0;
  int np = 0;
  int nb = 0;
  for (const auto& st : enc.stats) {
    psnr_sum += metrics::psnr(st.mse_y);
    if (st.frame_type == FrameType::kP) {
      dp += st.mse_y;
      ++np;
    } else if (st.frame_type == FrameType::kB) {
      db += st.mse_y;
      ++nb;
    }
  }
  const double fps = static_cast<double>(seq.frame_rate_num) / seq.frame_rate_den;
  rec.bitrate_kbps = static_cast<double>(rec.bits) * fps / rec.frames / 1000.0;
  rec.psnr_y = psnr_sum / rec.frames;
  rec.mean_dp = np > 0 ? dp / np : 0.0;
  rec.mean_db = nb > 0 ? db / nb : 0.0;
  rec.r_pb = (np > 0 && nb > 0 && rec.mean_db > 0.0) ? rec.mean_dp / rec.mean_db : 0.0;

  run.point = {rec.bitrate_kbps, rec.psnr_y};
  run.stats = std::move(enc.stats);
  return run;
}

std::vector<double> default_k_grid() {
  std::vector<double> ks(15);
  for (int i = 0; i < 15; ++i) {
    const double k = 0.2 * std::pow(25.0, i / 14.0);
    ks[static_cast<std::size_t>(i)] = std::round(k * 1e4) / 1e4;
  }
  ks[7] = 1.0;
  return ks;
}

std::vector<int> default_sweep_qps() { return {27, 32, 37, 42}; }
std::vector<int> default_compare_qps() { return {22, 27, 32, 37, 42}; }

void sort_canonical(std::vector<SweepRecord>& records) {
  std::sort(records.begin(), records.end(), [](const SweepRecord& a, const SweepRecord& b) {
    return std::tie(a.seq, a.qp, a.k, a.adaptive) < std::tie(b.seq, b.qp, b.k, b.adaptive);
  });
}

std::vector<SweepRecord> sweep(std::span<const SequenceInput> sequences, std::span<const int> qps,
                               std::span<const double> ks, const Settings& settings) {
  for (double k : ks) {
    if (!(k >= 0.2 && k <= 5.0)) {
      throw Error(ErrorCode::kInvalidArgument, "sweep: k outside [0.2, 5]: " + num(k));
    }
  }
  const std::size_t per_seq = qps.size() * ks.size();
  std::vector<SweepRecord> out(sequences.size() * per_seq);
  parallel_for(out.size(), settings.threads, [&](std::size_t i) {
    const auto& seq = sequences[i / per_seq];
    const std::size_t rest = i % per_seq;
    out[i] = run_rd_point(seq, qps[rest / ks.size()], ks[rest % ks.size()], false, settings).record;
  });
  sort_canonical(out);
  return out;
}

double anchor_ratio(std::span<const SweepRecord> records) {
  double sum = 0.0;
  int n = 0;
  for (const auto& r : records) {
    if (!r.adaptive && r.k == 1.0) {
      sum += r.r_pb;
      ++n;
    }
  }
  if (n == 0) throw Error(ErrorCode::kMissingAnchor, "anchor_ratio: no k = 1 rows");
  return sum / n;
}

LambdaOpt find_lambda_opt(std::span<const SweepRecord> records, const Settings& settings,
                          const LambdaOptOptions& options) {
  if (records.empty()) throw Error(ErrorCode::kMissingAnchor, "find_lambda_opt: no records");
  LambdaOpt out;
  out.seq = records.front().seq;
  std::vector<double> ks;
  for (const auto& r : records) {
    if (r.seq != out.seq) {
      throw Error(ErrorCode::kInvalidArgument, "find_lambda_opt: records span several sequences");
    }
    if (!r.adaptive && std::find(ks.begin(), ks.end(), r.k) == ks.end()) ks.push_back(r.k);
  }
  std::sort(ks.begin(), ks.end());

  const auto anchor_rows = rows_for_k(records, 1.0);
  if (anchor_rows.size() < 4) {
    throw Error(ErrorCode::kMissingAnchor, "find_lambda_opt: k = 1 needs at least 4 QPs");
  }
  const metrics::RDCurve anchor = curve_of(anchor_rows);

  out.k_star = 1.0;
  out.bd_rate = 0.0;
  for (double k : ks) {
    double score = 0.0;
    if (k != 1.0) {
      const auto rows = rows_for_k(records, k);
      try {
        score = metrics::bd_rate(anchor, curve_of(rows));
      } catch (const Error& e) {
        if (e.code() != ErrorCode::kInvalidCurve && e.code() != ErrorCode::kEmptyOverlap) throw;
        out.skipped.push_back(k);
        continue;
      }
    }
    out.scores.push_back({k, score});
    if (better(-score, k, -out.bd_rate, out.k_star)) {
      out.k_star = k;
      out.bd_rate = score;
    }
  }

  auto lambda_b = [&](int qp) {
    rdo::LambdaQuery q{qp, FrameType::kB, settings.profile, settings.gop_length - 1,
                       settings.hevc_p};
    return rdo::lambda_orig(q);
  };

  if (!options.per_qp) {
    for (const auto* r : anchor_rows) {
      out.per_qp.push_back({r->qp, out.k_star, out.k_star * lambda_b(r->qp)});
    }
    return out;
  }

  // PSNR gain over the anchor fit at the same rate, relative to the anchor's
  // own residual at that QP so that k = 1 scores exactly zero.
  std::vector<double> lx;
  std::vector<double> ly;
  for (const auto* r : anchor_rows) {
    lx.push_back(std::log10(r->bitrate_kbps));
    ly.push_back(r->psnr_y);
  }
  const metrics::Cubic fit = metrics::fit_cubic(lx, ly);
  const double lo = *std::min_element(lx.begin(), lx.end());
  const double hi = *std::max_element(lx.begin(), lx.end());
  for (const auto* a : anchor_rows) {
    const double base = a->psnr_y - fit(std::log10(a->bitrate_kbps));
    double best_k = 1.0;
    double best_gain = 0.0;
    for (const auto& r : records) {
      if (r.adaptive || r.qp != a->qp || r.k == 1.0 || !(r.bitrate_kbps > 0.0)) continue;
      const double x = std::log10(r.bitrate_kbps);
      if (x < lo || x > hi) continue;
      const double gain = (r.psnr_y - fit(x)) - base;
      if (better(gain, r.k, best_gain, best_k)) {
        best_gain = gain;
        best_k = r.k;
      }
    }
    out.per_qp.push_back({a->qp, best_k, best_k * lambda_b(a->qp)});
  }
  return out;
}

CompareResult compare_adaptive(std::span<const SequenceInput> sequences, std::span<const int> qps,
                               const Settings& settings) {
  const std::size_t per_seq = qps.size() * 2;
  CompareResult out;
  out.records.resize(sequences.size() * per_seq);
  parallel_for(out.records.size(), settings.threads, [&](std::size_t i) {
    const auto& seq = sequences[i / per_seq];
    const std::size_t rest = i % per_seq;
    out.records[i] = run_rd_point(seq, qps[rest / 2], 1.0, rest % 2 == 1, settings).record;
  });

  std::vector<std::string> class_order;
  std::vector<std::string> group_order;
  std::map<std::string, std::vector<BdRow>> by_class;
  std::map<std::string, std::vector<BdRow>> by_group;
  for (std::size_t s = 0; s < sequences.size(); ++s) {
    std::vector<metrics::RDPoint> anchor_pts;
    std::vector<metrics::RDPoint> test_pts;
    for (std::size_t j = 0; j < per_seq; ++j) {
      const auto& r = out.records[s * per_seq + j];
      (r.adaptive ? test_pts : anchor_pts).push_back({r.bitrate_kbps, r.psnr_y});
    }
    const metrics::RDCurve anchor(std::move(anchor_pts));
    const metrics::RDCurve test(std::move(test_pts));
    BdRow row{"sequence", sequences[s].id, 1, metrics::bd_psnr(anchor, test),
              metrics::bd_rate(anchor, test)};
    out.sequences.push_back(row);
    const auto& cls = sequences[s].cls;
    const auto& grp = sequences[s].group;
    if (!by_class.count(cls)) class_order.push_back(cls);
    if (!by_group.count(grp)) group_order.push_back(grp);
    by_class[cls].push_back(row);
    by_group[grp].push_back(row);
  }
  for (const auto& c : class_order) out.classes.push_back(average("class", c, by_class[c]));
  for (const auto& g : group_order) out.groups.push_back(average("group", g, by_group[g]));
  out.overall = average("overall", "overall", out.sequences);
  sort_canonical(out.records);
  return out;
}

double spearman(std::span<const double> x, std::span<const double> y) {
  if (x.size() != y.size() || x.size() < 2) {
    throw Error(ErrorCode::kInvalidArgument, "spearman: need two equally sized samples (n >= 2)");
  }
  auto ranks = [](std::span<const double> v) {
    std::vector<std::size_t> idx(v.size());
    std::iota(idx.begin(), idx.end(), 0);
    std::sort(idx.begin(), idx.end(), [&](std::size_t a, std::size_t b) { return v[a] < v[b]; });
    std::vector<double> r(v.size());
    for (std::size_t i = 0; i < idx.size();) {
      std::size_t j = i;
      while (j + 1 < idx.size() && v[idx[j + 1]] == v[idx[i]]) ++j;
      const double avg = (static_cast<double>(i) + static_cast<double>(j)) / 2.0 + 1.0;
      for (std::size_t t = i; t <= j; ++t) r[idx[t]] = avg;
      i = j + 1;
    }
    return r;
  };
  const auto rx = ranks(x);
  const auto ry = ranks(y);
  const double n = static_cast<double>(rx.size());
  const double mx = std::accumulate(rx.begin(), rx.end(), 0.0) / n;
  const double my = std::accumulate(ry.begin(), ry.end(), 0.0) / n;
  double sxy = 0.0;
  double sxx = 0.0;
  double syy = 0.0;
  for (std::size_t i = 0; i < rx.size(); ++i) {
    sxy += (rx[i] - mx) * (ry[i] - my);
    sxx += (rx[i] - mx) * (rx[i] - mx);
    syy += (ry[i] - my) * (ry[i] - my);
  }
  if (sxx == 0.0 || syy == 0.0) return std::numeric_limits<double>::quiet_NaN();
  return sxy / std::sqrt(sxx * syy);
}

void write_sweep_csv(std::ostream& out, std::span<const SweepRecord> records) {
  out << "seq,qp,k,adaptive,bits,frames,bitrate_kbps,psnr_y,mean_dp,mean_db,r_pb\n";
  for (const auto& r : records) {
    out << r.seq << ',' << r.qp << ',' << num(r.k) << ',' << (r.adaptive ? 1 : 0) << ','
        << r.bits << ',' << r.frames << ',' << num(r.bitrate_kbps) << ',' << num(r.psnr_y) << ','
        << num(r.mean_dp) << ',' << num(r.mean_db) << ',' << num(r.r_pb) << '\n';
  }
}

std::vector<SweepRecord> read_sweep_csv(std::istream& in) {
  std::vector<std::string> header;
  if (!next_row(in, header)) throw Error(ErrorCode::kMalformedCsv, "sweep csv: empty input");
  const std::size_t c_seq = column(header, {"seq"});
  const std::size_t c_qp = column(header, {"qp"});
  const std::size_t c_k = column(header, {"k"});
  const std::size_t c_ad = column(header, {"adaptive"});
  const std::size_t c_bits = column(header, {"bits"});
  const std::size_t c_frames = column(header, {"frames"});
  const std::size_t c_rate = column(header, {"bitrate_kbps"});
  const std::size_t c_psnr = column(header, {"psnr_y"});
  const std::size_t c_dp = column(header, {"mean_dp"});
  const std::size_t c_db = column(header, {"mean_db"});
  const std::size_t c_r = column(header, {"r_pb"});
  std::vector<SweepRecord> out;
  std::vector<std::string> row;
  while (next_row(in, row)) {
    if (row.size() != header.size()) {
      throw Error(ErrorCode::kMalformedCsv, "sweep csv: row has " + std::to_string(row.size()) +
                                          " cells, header has " + std::to_string(header.size()));
    }
    SweepRecord r;
    r.seq = row[c_seq];
    r.qp = static_cast<int>(parse_double(row[c_qp], "qp"));
    r.k = parse_double(row[c_k], "k");
    r.adaptive = parse_double(row[c_ad], "adaptive") != 0.0;
    r.bits = static_cast<std::uint64_t>(parse_double(row[c_bits], "bits"));
    r.frames = static_cast<int>(parse_double(row[c_frames], "frames"));
    r.bitrate_kbps = parse_double(row[c_rate], "bitrate_kbps");
    r.psnr_y = parse_double(row[c_psnr], "psnr_y");
    r.mean_dp = parse_double(row[c_dp], "mean_dp");
    r.mean_db = parse_double(row[c_db], "mean_db");
    r.r_pb = parse_double(row[c_r], "r_pb");
    out.push_back(std::move(r));
  }
  return out;
}

void write_frame_stats_csv(std::ostream& out, std::span<const FrameStats> stats) {
  std::vector<const FrameStats*> rows;
  for (const auto& s : stats) rows.push_back(&s);
  std::sort(rows.begin(), rows.end(),
            [](const FrameStats* a, const FrameStats* b) { return a->index < b->index; });
  out << "idx,coding_order,type,lambda,bits,mse_y\n";
  for (const auto* s : rows) {
    out << s->index << ',' << s->coding_order << ',' << to_char(s->frame_type) << ','
        << num(s->lambda_used) << ',' << s->bits << ',' << num(s->mse_y) << '\n';
  }
}

void write_compare_csv(std::ostream& out, const CompareResult& result) {
  out << "level,label,sequences,bd_psnr_db,bd_rate_pct\n";
  auto emit = [&](const BdRow& r) {
    out << r.level << ',' << r.label << ',' << r.sequences << ',' << num(r.bd_psnr) << ','
        << num(r.bd_rate) << '\n';
  };
  for (const auto& r : result.sequences) emit(r);
  for (const auto& r : result.classes) emit(r);
  for (const auto& r : result.groups) emit(r);
  emit(result.overall);
}

std::string format_compare_table(const CompareResult& result) {
  std::vector<const BdRow*> rows;
  for (const auto& r : result.sequences) rows.push_back(&r);
  for (const auto& r : result.classes) rows.push_back(&r);
  for (const auto& r : result.groups) rows.push_back(&r);
  rows.push_back(&result.overall);
  std::size_t w = 5;
  for (const auto* r : rows) w = std::max(w, r->label.size());

  std::ostringstream os;
  os << std::left << std::setw(10) << "level" << std::setw(static_cast<int>(w + 2)) << "label"
     << std::right << std::setw(4) << "n" << std::setw(14) << "BD-PSNR(dB)" << std::setw(14)
     << "BD-Rate(%)" << '\n';
  const char* last_level = "";
  for (const auto* r : rows) {
    if (r->level != last_level && *last_level != '\0') os << '\n';
    last_level = r->level.c_str();
    os << std::left << std::setw(10) << r->level << std::setw(static_cast<int>(w + 2)) << r->label
       << std::right << std::setw(4) << r->sequences << std::fixed << std::setprecision(3)
       << std::setw(14) << r->bd_psnr << std::setprecision(2) << std::setw(14) << r->bd_rate
       << '\n';
    os.unsetf(std::ios::floatfield);
  }
  return os.str();
}

void write_lambda_opt_csv(std::ostream& out, std::span<const LambdaOpt> opts,
                          std::span<const double> ratios) {
  if (opts.size() != ratios.size()) {
    throw Error(ErrorCode::kInvalidArgument, "write_lambda_opt_csv: size mismatch");
  }
  out << "seq,r_pb,r_lambda,bd_rate_pct,qp,lambda_opt\n";
  for (std::size_t i = 0; i < opts.size(); ++i) {
    for (const auto& q : opts[i].per_qp) {
      out << opts[i].seq << ',' << num(ratios[i]) << ',' << num(q.k) << ','
          << num(opts[i].bd_rate) << ',' << q.qp << ',' << num(q.lambda_opt) << '\n';
    }
  }
}

std::vector<metrics::RDPoint> read_rd_csv(std::istream& in) {
  std::vector<std::string> row;
  std::vector<metrics::RDPoint> out;
  if (!next_row(in, row)) throw Error(ErrorCode::kMalformedCsv, "rd csv: empty input");
  std::size_t c_rate = 0;
  std::size_t c_psnr = 1;
  std::size_t width = 2;
  double probe = 0.0;
  const auto first = row.empty() ? std::string() : row[0];
  const bool numeric =
      std::from_chars(first.data(), first.data() + first.size(), probe).ec == std::errc();
  if (!numeric) {
    c_rate = column(row, {"bitrate_kbps", "bitrate"});
    c_psnr = column(row, {"psnr_y", "psnr"});
    width = row.size();
  } else {
    if (row.size() != 2) throw Error(ErrorCode::kMalformedCsv, "rd csv: expected two columns");
    out.push_back({parse_double(row[0], "bitrate"), parse_double(row[1], "psnr")});
  }
  while (next_row(in, row)) {
    if (row.size() != width) throw Error(ErrorCode::kMalformedCsv, "rd csv: ragged row");
    out.push_back({parse_double(row[c_rate], "bitrate"), parse_double(row[c_psnr], "psnr")});
  }
  return out;
}

std::vector<PowerPoint> read_power_csv(std::istream& in) {
  std::vector<std::string> header;
  if (!next_row(in, header)) throw Error(ErrorCode::kMalformedCsv, "power csv: empty input");
  const std::size_t c_r = column(header, {"r_pb"});
  const std::size_t c_l = column(header, {"r_lambda"});
  std::vector<PowerPoint> out;
  std::vector<std::string> row;
  while (next_row(in, row)) {
    if (row.size() != header.size()) throw Error(ErrorCode::kMalformedCsv, "power csv: ragged row");
    out.push_back({parse_double(row[c_r], "r_pb"), parse_double(row[c_l], "r_lambda")});
  }
  return out;
}

void write_fit_csv(std::ostream& out, const FitResult& fit) {
  out << "a,b,c,rss,points\n"
      << num(fit.a) << ',' << num(fit.b) << ',' << num(fit.c) << ',' << num(fit.rss) << ','
      << fit.points << '\n';
}

}  // namespace lfg::experiment
