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

#include "lfg/synth.hpp"

#include <algorithm>
#include <random>

#include "lfg/error.hpp"

namespace lfg {

namespace {

// mt19937_64 output is fixed by the standard; the distributions are not,
// so integers are drawn with plain modular reduction.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  int uniform(int lo, int hi) {
    const auto span = static_cast<std::uint64_t>(hi - lo + 1);
    return lo + static_cast<int>(engine_() % span);
  }

 private:
  std::mt19937_64 engine_;
};

std::uint64_t mix(std::uint64_t seed, std::uint64_t salt) {
  std::uint64_t z = seed + 0x9E3779B97F4A7C15ull * (salt + 1);
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
  return z ^ (z >> 31);
}

// Zero-mean value noise: uniform lattice values in [-amp, amp] every `cell`
// pixels, bilinearly interpolated in integers.
struct Field {
  int width = 0;
  int height = 0;
  std::vector<int> values;

  int at(int x, int y) const { return values[static_cast<std::size_t>(y) * width + x]; }
};

Field value_noise(Rng& rng, int width, int height, int cell, int amp) {
  const int lw = width / cell + 2;
  const int lh = height / cell + 2;
  std::vector<int> lattice(static_cast<std::size_t>(lw) * lh);
  for (auto& v : lattice) v = rng.uniform(-amp, amp);
  Field f{width, height, std::vector<int>(static_cast<std::size_t>(width) * height)};
  const int c2 = cell * cell;
  for (int y = 0; y < height; ++y) {
    const int gy = y / cell;
    const int fy = y % cell;
    for (int x = 0; x < width; ++x) {
      const int gx = x / cell;
      const int fx = x % cell;
      auto l = [&](int i, int j) { return lattice[static_cast<std::size_t>(j) * lw + i]; };
      const int acc = (cell - fx) * (cell - fy) * l(gx, gy) + fx * (cell - fy) * l(gx + 1, gy) +
                      (cell - fx) * fy * l(gx, gy + 1) + fx * fy * l(gx + 1, gy + 1);
      f.values[static_cast<std::size_t>(y) * width + x] =
          acc >= 0 ? (acc + c2 / 2) / c2 : -((-acc + c2 / 2) / c2);
    }
  }
  return f;
}

std::uint8_t clip8(int v) { return static_cast<std::uint8_t>(std::clamp(v, 0, 255)); }

// Chroma follows the luma structure at reduced contrast.
void derive_chroma(VideoFrame& f) {
  for (int y = 0; y < f.u.height(); ++y) {
    for (int x = 0; x < f.u.width(); ++x) {
      const int l = (f.y.at(2 * x, 2 * y) + f.y.at(2 * x + 1, 2 * y) + f.y.at(2 * x, 2 * y + 1) +
                     f.y.at(2 * x + 1, 2 * y + 1) + 2) / 4 - 128;
      f.u.at(x, y) = clip8(128 + l / 4);
      f.v.at(x, y) = clip8(128 - l / 6);
    }
  }
}

std::vector<VideoFrame> make_static(const ContentSpec& s) {
  Rng rng(mix(s.seed, 1));
  const int cw = s.width + 2;
  const int ch = s.height + 2;
  const Field coarse = value_noise(rng, cw, ch, 16, 24);
  const Field fine = value_noise(rng, cw, ch, 4, 5);
  const int gx = rng.uniform(20, 60);
  const int gy = rng.uniform(10, 40);
  const int base = rng.uniform(70, 110);
  const int period_x = rng.uniform(6, 12);
  const int period_y = rng.uniform(9, 16);
  std::vector<VideoFrame> frames;
  for (int t = 0; t < s.frames; ++t) {
    Rng noise(mix(s.seed, 1000 + static_cast<std::uint64_t>(t)));
    const int ox = (t / period_x) % 2;
    const int oy = (t / period_y) % 2;
    VideoFrame f(s.width, s.height, t);
    for (int y = 0; y < s.height; ++y) {
      for (int x = 0; x < s.width; ++x) {
        const int cx = x + ox;
        const int cy = y + oy;
        const int v = base + gx * cx / cw + gy * cy / ch + coarse.at(cx, cy) + fine.at(cx, cy) +
                      noise.uniform(-2, 2);
        f.y.at(x, y) = clip8(v);
      }
    }
    derive_chroma(f);
    frames.push_back(std::move(f));
  }
  return frames;
}

std::vector<VideoFrame> make_dyntex(const ContentSpec& s) {
  Rng rng(mix(s.seed, 2));
  const Field backdrop = value_noise(rng, s.width, s.height, 16, 20);
  const int base = rng.uniform(100, 150);
  const int cell = rng.uniform(0, 1) == 0 ? 4 : 8;
  const int amp = rng.uniform(28, 40);
  std::vector<VideoFrame> frames;
  for (int t = 0; t < s.frames; ++t) {
    Rng frame_rng(mix(s.seed, 2000 + static_cast<std::uint64_t>(t)));
    const Field motion = value_noise(frame_rng, s.width, s.height, cell, amp);
    VideoFrame f(s.width, s.height, t);
    for (int y = 0; y < s.height; ++y) {
      for (int x = 0; x < s.width; ++x) {
        f.y.at(x, y) = clip8(base + backdrop.at(x, y) + motion.at(x, y));
      }
    }
    derive_chroma(f);
    frames.push_back(std::move(f));
  }
  return frames;
}

struct MovingObject {
  int x, y, w, h, vx, vy, level;
  Field texture;
};

std::vector<VideoFrame> make_mixed(const ContentSpec& s) {
  Rng rng(mix(s.seed, 3));
  const Field background = value_noise(rng, s.width, s.height, 8, 30);
  const int base = rng.uniform(90, 130);
  std::vector<MovingObject> objects;
  const int count = rng.uniform(2, 3);
  for (int i = 0; i < count; ++i) {
    MovingObject o;
    o.w = std::min(s.width, rng.uniform(12, 24));
    o.h = std::min(s.height, rng.uniform(12, 24));
    o.x = rng.uniform(0, s.width - o.w);
    o.y = rng.uniform(0, s.height - o.h);
    do {
      o.vx = rng.uniform(-3, 3);
      o.vy = rng.uniform(-2, 2);
    } while (o.vx == 0 && o.vy == 0);
    o.level = rng.uniform(-60, 60);
    o.texture = value_noise(rng, o.w, o.h, 4, 35);
    objects.push_back(std::move(o));
  }
  std::vector<VideoFrame> frames;
  for (int t = 0; t < s.frames; ++t) {
    Rng noise(mix(s.seed, 3000 + static_cast<std::uint64_t>(t)));
    VideoFrame f(s.width, s.height, t);
    for (int y = 0; y < s.height; ++y) {
      for (int x = 0; x < s.width; ++x) {
        f.y.at(x, y) = clip8(base + background.at(x, y) + noise.uniform(-1, 1));
      }
    }
    for (auto& o : objects) {
      for (int y = 0; y < o.h; ++y) {
        for (int x = 0; x < o.w; ++x) {
          f.y.at(o.x + x, o.y + y) = clip8(base + o.level + o.texture.at(x, y));
        }
      }
      // Bounce off the picture edges.
      if (o.x + o.vx < 0 || o.x + o.vx > s.width - o.w) o.vx = -o.vx;
      if (o.y + o.vy < 0 || o.y + o.vy > s.height - o.h) o.vy = -o.vy;
      o.x = std::clamp(o.x + o.vx, 0, s.width - o.w);
      o.y = std::clamp(o.y + o.vy, 0, s.height - o.h);
    }
    derive_chroma(f);
    frames.push_back(std::move(f));
  }
  return frames;
}

}  // namespace

std::string_view to_string(ContentClass cls) {
  switch (cls) {
    case ContentClass::kStatic: return "static";
    case ContentClass::kDyntex: return "dyntex";
    case ContentClass::kMixed: return "mixed";
  }
  return "?";
}

ContentClass parse_content_class(std::string_view text) {
  if (text == "static") return ContentClass::kStatic;
  if (text == "dyntex") return ContentClass::kDyntex;
  if (text == "mixed") return ContentClass::kMixed;
  throw Error(ErrorCode::kInvalidArgument, "unknown content class '" + std::string(text) + "'");
}

std::string ContentSpec::id() const {
  return std::string(to_string(cls)) + "-s" + std::to_string(seed) + "-" + std::to_string(width) +
         "x" + std::to_string(height) + "x" + std::to_string(frames);
}

std::vector<VideoFrame> synth_sequence(const ContentSpec& spec) {
  check_dimensions(spec.width, spec.height);
  if (spec.frames < 13) throw Error(ErrorCode::kInvalidArgument, "synth: frames must be >= 13");
  switch (spec.cls) {
    case ContentClass::kStatic: return make_static(spec);
    case ContentClass::kDyntex: return make_dyntex(spec);
    case ContentClass::kMixed: return make_mixed(spec);
  }
  return {};
}

}  // namespace lfg
