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

#ifndef LFG_VIDEO_IO_HPP
#define LFG_VIDEO_IO_HPP

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <span>
#include <vector>

namespace lfg {

// One 8-bit sample plane, row-major without padding.
class Plane {
 public:
  Plane() = default;
  Plane(int width, int height, std::uint8_t fill = 0);

  int width() const { return width_; }
  int height() const { return height_; }
  std::size_t size() const { return samples_.size(); }

  std::uint8_t at(int x, int y) const { return samples_[static_cast<std::size_t>(y) * width_ + x]; }
  std::uint8_t& at(int x, int y) { return samples_[static_cast<std::size_t>(y) * width_ + x]; }

  const std::uint8_t* row(int y) const { return samples_.data() + static_cast<std::size_t>(y) * width_; }
  std::uint8_t* row(int y) { return samples_.data() + static_cast<std::size_t>(y) * width_; }

  std::span<const std::uint8_t> samples() const { return samples_; }
  std::span<std::uint8_t> samples() { return samples_; }

  friend bool operator==(const Plane&, const Plane&) = default;

 private:
  int width_ = 0;
  int height_ = 0;
  std::vector<std::uint8_t> samples_;
};

// Planar 4:2:0 picture. Width and height are even; chroma planes are half size.
struct VideoFrame {
  VideoFrame() = default;
  VideoFrame(int width, int height, int index = 0);

  int width() const { return y.width(); }
  int height() const { return y.height(); }

  Plane y;
  Plane u;
  Plane v;
  int index = 0;

  // Sample equality only; display index is metadata.
  bool same_samples(const VideoFrame& other) const {
    return y == other.y && u == other.u && v == other.v;
  }
};

struct SequenceHeader {
  int width = 0;
  int height = 0;
  int frame_rate_num = 25;
  int frame_rate_den = 1;
  int frame_count = 0;  // 0 = unknown until EOF

  double frame_rate() const {
    return static_cast<double>(frame_rate_num) / frame_rate_den;
  }

  friend bool operator==(const SequenceHeader&, const SequenceHeader&) = default;
};

struct Sequence {
  SequenceHeader header;
  std::vector<VideoFrame> frames;
};

inline std::size_t frame_bytes_420(int width, int height) {
  return static_cast<std::size_t>(width) * height * 3 / 2;
}

Sequence read_y4m(std::istream& in);
Sequence read_y4m(const std::filesystem::path& path);

std::vector<VideoFrame> read_raw_yuv(std::istream& in, int width, int height);
std::vector<VideoFrame> read_raw_yuv(const std::filesystem::path& path,
                                     int width, int height);

void write_y4m(const SequenceHeader& header, std::span<const VideoFrame> frames,
               std::ostream& out);
void write_y4m(const SequenceHeader& header, std::span<const VideoFrame> frames,
               const std::filesystem::path& path);

// Throws unless width/height are positive and even.
void check_dimensions(int width, int height);

}  // namespace lfg

#endif  // LFG_VIDEO_IO_HPP
