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

#include "lfg/bitio.hpp"

#include "lfg/error.hpp"

namespace lfg {

void BitWriter::put_bits(std::uint64_t value, int count) {
  for (int i = count - 1; i >= 0; --i) {
    const unsigned bit = static_cast<unsigned>((value >> i) & 1u);
    const unsigned shift = 7u - static_cast<unsigned>(bit_count_ & 7u);
    if (shift == 7u) bytes_.push_back(0);
    bytes_.back() = static_cast<std::uint8_t>(bytes_.back() | (bit << shift));
    ++bit_count_;
  }
}

BitReader::BitReader(std::span<const std::uint8_t> data, std::uint64_t limit_bits)
    : data_(data), limit_(limit_bits) {
  if (limit_bits > static_cast<std::uint64_t>(data.size()) * 8) {
    throw Error(ErrorCode::kTruncatedPayload, "bit limit exceeds buffer");
  }
}

std::uint64_t BitReader::get_bits(int count) {
  if (static_cast<std::uint64_t>(count) > remaining()) {
    throw Error(ErrorCode::kTruncatedPayload, "read past end of bitstream");
  }
  std::uint64_t value = 0;
  for (int i = 0; i < count; ++i) {
    const std::uint8_t byte = data_[pos_ >> 3];
    const unsigned bit = (byte >> (7u - static_cast<unsigned>(pos_ & 7u))) & 1u;
    value = (value << 1) | bit;
    ++pos_;
  }
  return value;
}

std::uint32_t get_ue(BitReader& reader) {
  int zeros = 0;
  while (!reader.get_bit()) {
    if (++zeros > 32) {
      throw Error(ErrorCode::kMalformedCode, "exp-golomb prefix too long");
    }
  }
  const std::uint64_t suffix = reader.get_bits(zeros);
  const std::uint64_t value = ((std::uint64_t{1} << zeros) | suffix) - 1;
  if (value > 0xFFFFFFFFull) {
    throw Error(ErrorCode::kMalformedCode, "exp-golomb value overflows 32 bits");
  }
  return static_cast<std::uint32_t>(value);
}

std::int32_t get_se(BitReader& reader) { return ue_to_se(get_ue(reader)); }

}  // namespace lfg
