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

#ifndef LFG_SYNTH_HPP
#define LFG_SYNTH_HPP

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "lfg/video_io.hpp"

namespace lfg {

// Stand-ins for the three content families of the test material.
enum class ContentClass {
  kStatic,  // slow scene: fixed textured gradient, <= 1 pixel drift, mild sensor noise
  kDyntex,  // dynamic texture: band-limited noise redrawn every frame
  kMixed,   // textured objects translating over a static textured background
};

std::string_view to_string(ContentClass cls);
// "static" | "dyntex" | "mixed"; throws Error(kInvalidArgument).
ContentClass parse_content_class(std::string_view text);

struct ContentSpec {
  ContentClass cls = ContentClass::kStatic;
  std::uint64_t seed = 1;
  int width = 64;
  int height = 64;
  int frames = 61;

  // e.g. "static-s3-64x64x61"
  std::string id() const;
};

// Pure function of the ContentSpec; integer arithmetic only, so identical on every
// platform. Throws Error(kBadDimensions) for odd or non-positive sizes and
// Error(kInvalidArgument) for frames < 13.
std::vector<VideoFrame> synth_sequence(const ContentSpec& spec);

}  // namespace lfg

#endif  // LFG_SYNTH_HPP
