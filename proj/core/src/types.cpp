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

#include "lfg/types.hpp"

#include <string>

#include "lfg/error.hpp"

namespace lfg {

char to_char(FrameType type) {
  switch (type) {
    case FrameType::kI: return 'I';
    case FrameType::kP: return 'P';
    case FrameType::kB: return 'B';
  }
  return '?';
}

std::string_view to_string(Profile profile) {
  return profile == Profile::kH264Like ? "h264" : "hevc";
}

Profile parse_profile(std::string_view text) {
  if (text == "h264") return Profile::kH264Like;
  if (text == "hevc") return Profile::kHevcLike;
  throw Error(ErrorCode::kInvalidArgument, "unknown profile '" + std::string(text) + "'");
}

bool legal_in(const BlockMode& mode, FrameType type) {
  switch (mode.kind) {
    case ModeKind::kIntra: return true;
    case ModeKind::kSkip:
    case ModeKind::kInterFwd: return type != FrameType::kI;
    case ModeKind::kInterBwd:
    case ModeKind::kInterBi: return type == FrameType::kB;
  }
  return false;
}

}  // namespace lfg
