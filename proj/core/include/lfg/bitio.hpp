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

#ifndef LFG_BITIO_HPP
#define LFG_BITIO_HPP

#include <bit>
#include <cstdint>
#include <span>
#include <vector>

namespace lfg {

// MSB-first bit packer. bit_count() is exact; the final byte is zero padded.
class BitWriter {
 public:
  void put_bits(std::uint64_t value, int count);
  void put_bit(bool bit) { put_bits(bit ? 1 : 0, 1); }

  std::uint64_t bit_count() const { return bit_count_; }
  const std::vector<std::uint8_t>& bytes() const { return bytes_; }
  std::vector<std::uint8_t> take_bytes() { return std::move(bytes_); }

 private:
  std::vector<std::uint8_t> bytes_;
  std::uint64_t bit_count_ = 0;
};

// Drop-in sink for BitWriter that only counts. Used to price candidates
// with the exact syntax the writer would emit.
class BitCounter {
 public:
  void put_bits(std::uint64_t, int count) { bit_count_ += static_cast<std::uint64_t>(count); }
  void put_bit(bool) { ++bit_count_; }
  std::uint64_t bit_count() const { return bit_count_; }

 private:
  std::uint64_t bit_count_ = 0;
};

// Reads at most `limit_bits` bits from `data`; reading past it throws
// Error(kTruncatedPayload).
class BitReader {
 public:
  BitReader(std::span<const std::uint8_t> data, std::uint64_t limit_bits);
  explicit BitReader(std::span<const std::uint8_t> data)
      : BitReader(data, static_cast<std::uint64_t>(data.size()) * 8) {}

  std::uint64_t get_bits(int count);
  bool get_bit() { return get_bits(1) != 0; }

  std::uint64_t position() const { return pos_; }
  std::uint64_t limit() const { return limit_; }
  std::uint64_t remaining() const { return limit_ - pos_; }

 private:
  std::span<const std::uint8_t> data_;
  std::uint64_t limit_;
  std::uint64_t pos_ = 0;
};

// Order-0 Exp-Golomb: value v is written as (n-1) zeros then the n-bit
// binary form of v+1.
constexpr int ue_length(std::uint32_t value) {
  const std::uint64_t v = static_cast<std::uint64_t>(value) + 1;
  const int n = 64 - std::countl_zero(v);
  return 2 * n - 1;
}

// Signed mapping 0, 1, -1, 2, -2, ... -> 0, 1, 2, 3, 4, ...
constexpr std::uint32_t se_to_ue(std::int32_t value) {
  return value > 0 ? static_cast<std::uint32_t>(2 * static_cast<std::int64_t>(value) - 1)
                   : static_cast<std::uint32_t>(-2 * static_cast<std::int64_t>(value));
}

constexpr std::int32_t ue_to_se(std::uint32_t code) {
  return (code & 1u) ? static_cast<std::int32_t>((static_cast<std::uint64_t>(code) + 1) / 2)
                     : -static_cast<std::int32_t>(code / 2);
}

constexpr int se_length(std::int32_t value) { return ue_length(se_to_ue(value)); }

template <typename Sink>
void put_ue(Sink& sink, std::uint32_t value) {
  const std::uint64_t v = static_cast<std::uint64_t>(value) + 1;
  const int n = 64 - std::countl_zero(v);
  sink.put_bits(0, n - 1);
  sink.put_bits(v, n);
}

template <typename Sink>
void put_se(Sink& sink, std::int32_t value) {
  put_ue(sink, se_to_ue(value));
}

// Throws Error(kMalformedCode) for prefixes longer than 32 zeros.
std::uint32_t get_ue(BitReader& reader);
std::int32_t get_se(BitReader& reader);

}  // namespace lfg

#endif  // LFG_BITIO_HPP
