// Copyright 2026 The rainbow-turan Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef RT_COLOR_SET_HPP_
#define RT_COLOR_SET_HPP_

#include <array>
#include <bit>
#include <cstdint>
#include <vector>

#include "rt/colored_graph.hpp"

namespace rt {

// Bitset over color ids. Ids below 128 live in two inline words; larger ids
// spill into a heap vector sized at construction.
class ColorSet {
 public:
  static constexpr int kInlineBits = 128;

  ColorSet() = default;
  explicit ColorSet(int capacity) {
    if (capacity > kInlineBits) spill_.assign((capacity - kInlineBits + 63) / 64, 0);
  }

  bool test(Color c) const {
    if (c < kInlineBits) return (inline_[c >> 6] >> (c & 63)) & 1u;
    const int i = c - kInlineBits;
    return (spill_[i >> 6] >> (i & 63)) & 1u;
  }
  void set(Color c) { word(c) |= bit(c); }
  void reset(Color c) { word(c) &= ~bit(c); }

  int count() const {
    int total = std::popcount(inline_[0]) + std::popcount(inline_[1]);
    for (auto w : spill_) total += std::popcount(w);
    return total;
  }

  // Low 128 bits, for hashing small palettes.
  std::uint64_t low() const { return inline_[0]; }
  std::uint64_t high() const { return inline_[1]; }

  friend bool operator==(const ColorSet&, const ColorSet&) = default;

 private:
  static std::uint64_t bit(Color c) {
    return std::uint64_t{1} << ((c < kInlineBits ? c : c - kInlineBits) & 63);
  }
  std::uint64_t& word(Color c) {
    return c < kInlineBits ? inline_[c >> 6] : spill_[(c - kInlineBits) >> 6];
  }

  std::array<std::uint64_t, 2> inline_{};
  std::vector<std::uint64_t> spill_;
};

}  // namespace rt

#endif  // RT_COLOR_SET_HPP_
