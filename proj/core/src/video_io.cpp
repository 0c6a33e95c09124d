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

#include "lfg/video_io.hpp"

#include <charconv>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <string>
#include <string_view>

#include "lfg/error.hpp"

namespace lfg {

namespace {

constexpr std::string_view kSignature = "YUV4MPEG2";
constexpr std::size_t kMaxHeaderLine = 4096;

// Reads up to and including '\n'. Returns false on clean EOF before any byte.
bool read_line(std::istream& in, std::string& line, bool& terminated) {
  line.clear();
  terminated = false;
  char c;
  while (in.get(c)) {
    if (c == '\n') {
      terminated = true;
      return true;
    }
    line.push_back(c);
    if (line.size() > kMaxHeaderLine) {
      return true;
    }
  }
  return !line.empty();
}

int parse_int(std::string_view text, std::string_view what) {
  int value = 0;
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc() || ptr != text.data() + text.size()) {
    throw Error(ErrorCode::kMalformedHeader,
                "y4m: bad " + std::string(what) + " value '" + std::string(text) + "'");
  }
  return value;
}

bool supported_colourspace(std::string_view tag) {
  return tag == "420" || tag == "420jpeg" || tag == "420paldv" || tag == "420mpeg2";
}

SequenceHeader parse_header_line(std::string_view line) {
  if (line.substr(0, kSignature.size()) != kSignature ||
      (line.size() > kSignature.size() && line[kSignature.size()] != ' ')) {
    throw Error(ErrorCode::kMalformedHeader, "y4m: missing YUV4MPEG2 signature");
  }
  SequenceHeader header;
  bool have_w = false;
  bool have_h = false;
  std::size_t pos = kSignature.size();
  while (pos < line.size()) {
    while (pos < line.size() && line[pos] == ' ') ++pos;
    if (pos >= line.size()) break;
    std::size_t end = line.find(' ', pos);
    if (end == std::string_view::npos) end = line.size();
    std::string_view tag = line.substr(pos, end - pos);
    pos = end;
    const char key = tag[0];
    std::string_view value = tag.substr(1);
    switch (key) {
      case 'W':
        header.width = parse_int(value, "width");
        have_w = true;
        break;
      case 'H':
        header.height = parse_int(value, "height");
        have_h = true;
        break;
      case 'F': {
        const auto colon = value.find(':');
        if (colon == std::string_view::npos) {
          throw Error(ErrorCode::kMalformedHeader, "y4m: frame rate needs num:den");
        }
        header.frame_rate_num = parse_int(value.substr(0, colon), "frame rate");
        header.frame_rate_den = parse_int(value.substr(colon + 1), "frame rate");
        if (header.frame_rate_num <= 0 || header.frame_rate_den <= 0) {
          throw Error(ErrorCode::kMalformedHeader, "y4m: frame rate must be positive");
        }
        break;
      }
      case 'C':
        if (!supported_colourspace(value)) {
          throw Error(ErrorCode::kUnsupportedColourspace,
                      "y4m: colourspace C" + std::string(value) + " not supported");
        }
        break;
      case 'I':
      case 'A':
      case 'X':
        break;
      default:
        throw Error(ErrorCode::kMalformedHeader,
                    "y4m: unknown header tag '" + std::string(tag) + "'");
    }
  }
  if (!have_w || !have_h) {
    throw Error(ErrorCode::kMalformedHeader, "y4m: header lacks W or H");
  }
  check_dimensions(header.width, header.height);
  return header;
}

void read_payload(std::istream& in, VideoFrame& frame) {
  for (Plane* plane : {&frame.y, &frame.u, &frame.v}) {
    auto samples = plane->samples();
    in.read(reinterpret_cast<char*>(samples.data()),
            static_cast<std::streamsize>(samples.size()));
    if (static_cast<std::size_t>(in.gcount()) != samples.size()) {
      throw Error(ErrorCode::kTruncatedPayload, "frame payload truncated");
    }
  }
}

void write_payload(std::ostream& out, const VideoFrame& frame) {
  for (const Plane* plane : {&frame.y, &frame.u, &frame.v}) {
    auto samples = plane->samples();
    out.write(reinterpret_cast<const char*>(samples.data()),
              static_cast<std::streamsize>(samples.size()));
  }
}

}  // namespace

Plane::Plane(int width, int height, std::uint8_t fill)
    : width_(width),
      height_(height),
      samples_(static_cast<std::size_t>(width) * height, fill) {}

VideoFrame::VideoFrame(int width, int height, int index_)
    : y(width, height, 0), u(width / 2, height / 2, 128), v(width / 2, height / 2, 128),
      index(index_) {}

void check_dimensions(int width, int height) {
  if (width <= 0 || height <= 0 || width % 2 != 0 || height % 2 != 0) {
    throw Error(ErrorCode::kBadDimensions,
                "dimensions must be positive and even, got " + std::to_string(width) +
                    "x" + std::to_string(height));
  }
}

Sequence read_y4m(std::istream& in) {
  std::string line;
  bool terminated = false;
  if (!read_line(in, line, terminated) || !terminated) {
    throw Error(ErrorCode::kMalformedHeader, "y4m: missing or unterminated header line");
  }
  Sequence seq;
  seq.header = parse_header_line(line);
  for (;;) {
    if (!read_line(in, line, terminated)) break;
    if (!terminated || line.substr(0, 5) != "FRAME" ||
        (line.size() > 5 && line[5] != ' ')) {
      throw Error(ErrorCode::kMalformedHeader, "y4m: expected FRAME marker");
    }
    VideoFrame frame(seq.header.width, seq.header.height,
                     static_cast<int>(seq.frames.size()));
    read_payload(in, frame);
    seq.frames.push_back(std::move(frame));
  }
  seq.header.frame_count = static_cast<int>(seq.frames.size());
  return seq;
}

Sequence read_y4m(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::kIo, "cannot open " + path.string());
  return read_y4m(in);
}

std::vector<VideoFrame> read_raw_yuv(std::istream& in, int width, int height) {
  check_dimensions(width, height);
  std::vector<VideoFrame> frames;
  const std::size_t frame_size = frame_bytes_420(width, height);
  for (;;) {
    if (in.peek() == std::char_traits<char>::eof()) break;
    VideoFrame frame(width, height, static_cast<int>(frames.size()));
    try {
      read_payload(in, frame);
    } catch (const Error&) {
      throw Error(ErrorCode::kTruncatedPayload,
                  "raw yuv: stream length is not a multiple of " +
                      std::to_string(frame_size) + " bytes");
    }
    frames.push_back(std::move(frame));
  }
  return frames;
}

std::vector<VideoFrame> read_raw_yuv(const std::filesystem::path& path, int width,
                                     int height) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::kIo, "cannot open " + path.string());
  return read_raw_yuv(in, width, height);
}

void write_y4m(const SequenceHeader& header, std::span<const VideoFrame> frames,
               std::ostream& out) {
  check_dimensions(header.width, header.height);
  for (const auto& f : frames) {
    if (f.width() != header.width || f.height() != header.height) {
      throw Error(ErrorCode::kDimensionMismatch, "y4m: frame size differs from header");
    }
  }
  out << kSignature << " W" << header.width << " H" << header.height << " F"
      << header.frame_rate_num << ':' << header.frame_rate_den << " Ip A1:1 C420jpeg\n";
  for (const auto& f : frames) {
    out << "FRAME\n";
    write_payload(out, f);
  }
  if (!out) throw Error(ErrorCode::kIo, "y4m: write failed");
}

void write_y4m(const SequenceHeader& header, std::span<const VideoFrame> frames,
               const std::filesystem::path& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error(ErrorCode::kIo, "cannot create " + path.string());
  write_y4m(header, frames, out);
}

}  // namespace lfg
