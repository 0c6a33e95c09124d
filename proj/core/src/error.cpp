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

#include "lfg/error.hpp"

namespace lfg {

const char* to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::kMalformedHeader: return "malformed header";
    case ErrorCode::kUnsupportedColourspace: return "unsupported colourspace";
    case ErrorCode::kTruncatedPayload: return "truncated payload";
    case ErrorCode::kBadDimensions: return "bad dimensions";
    case ErrorCode::kDimensionMismatch: return "dimension mismatch";
    case ErrorCode::kBadMagic: return "bad magic";
    case ErrorCode::kVersionMismatch: return "version mismatch";
    case ErrorCode::kBitCountMismatch: return "bit count mismatch";
    case ErrorCode::kMalformedCode: return "malformed code";
    case ErrorCode::kOutOfRange: return "out of range";
    case ErrorCode::kInvalidArgument: return "invalid argument";
    case ErrorCode::kInvalidCurve: return "invalid curve";
    case ErrorCode::kEmptyOverlap: return "empty overlap";
    case ErrorCode::kDegenerateFit: return "degenerate fit";
    case ErrorCode::kMissingAnchor: return "missing anchor";
    case ErrorCode::kConfig: return "config error";
    case ErrorCode::kMalformedCsv: return "malformed csv";
    case ErrorCode::kIo: return "i/o error";
  }
  return "unknown";
}

}  // namespace lfg
