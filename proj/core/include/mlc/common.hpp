/*
Copyright 2026 the mlcodec authors

Licensed under the Apache License, Version 2.0 (the "License");
you may not use this file except in compliance with the License.
You may obtain a copy of the License at

    http://www.apache.org/licenses/LICENSE-2.0

Unless required by applicable law or agreed to in writing, software
distributed under the License is distributed on an "AS IS" BASIS,
WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
See the License for the specific language governing permissions and
limitations under the License.
*/

#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace mlc {

// Thrown when the codestream violates a normative constraint. Carries the byte
// offset (into the input file) closest to where the violation was detected.
class IllFormed : public std::runtime_error {
 public:
  IllFormed(const std::string& msg, size_t offset)
      : std::runtime_error(msg + " (offset " + std::to_string(offset) + ")"),
        offset_(offset) {}
  size_t offset() const { return offset_; }

 private:
  size_t offset_;
};

// Thrown for well-formed inputs that use features outside this decoder.
class Unsupported : public std::runtime_error {
 public:
  explicit Unsupported(const std::string& msg) : std::runtime_error(msg) {}
};

inline constexpr size_t kGroupDim = 256;

// One-based index of the most significant set bit; 0 for 0.
inline int ilog2(uint64_t v) { return std::bit_width(v); }

inline int64_t unpack_signed(uint64_t u) {
  return (u & 1) ? -int64_t((u >> 1) + 1) : int64_t(u >> 1);
}

inline uint64_t pack_signed(int64_t v) {
  return v >= 0 ? uint64_t(v) << 1 : (uint64_t(-(v + 1)) << 1) + 1;
}

inline int64_t median3(int64_t a, int64_t b, int64_t c) {
  return std::max(std::min(a, b), std::min(std::max(a, b), c));
}

inline uint32_t ceil_div(uint32_t a, uint32_t b) { return (a + b - 1) / b; }

// Shift that keeps working for the negative shift counts some channel
// bookkeeping produces (a negative shift never reaches sample indexing).
inline uint32_t shift_right_ceil(uint32_t v, int s) {
  if (s <= 0) return v;
  return (v + ((uint32_t(1) << s) - 1)) >> s;
}

}  // namespace mlc
