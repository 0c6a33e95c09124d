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

#ifndef LFG_ERROR_HPP
#define LFG_ERROR_HPP

#include <stdexcept>
#include <string>

namespace lfg {

enum class ErrorCode {
  kMalformedHeader,
  kUnsupportedColourspace,
  kTruncatedPayload,
  kBadDimensions,
  kDimensionMismatch,
  kBadMagic,
  kVersionMismatch,
  kBitCountMismatch,
  kMalformedCode,
  kOutOfRange,
  kInvalidArgument,
  kInvalidCurve,
  kEmptyOverlap,
  kDegenerateFit,
  kMissingAnchor,
  kConfig,
  kMalformedCsv,
  kIo,
};

const char* to_string(ErrorCode code);

// Single exception type for the library; callers dispatch on code().
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace lfg

#endif  // LFG_ERROR_HPP
