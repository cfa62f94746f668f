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

#ifndef RT_CONSTRUCTIONS_HPP_
#define RT_CONSTRUCTIONS_HPP_

#include <cstdint>
#include <string>
#include <vector>

#include "rt/colored_graph.hpp"
#include "rt/rational.hpp"

namespace rt {

// An element of the binary vector space of dimension k, stored as the
// integer whose bits are its coordinates.
class VectorLabel {
 public:
  VectorLabel(int k, std::uint32_t bits);

  int dimension() const { return k_; }
  std::uint32_t bits() const { return bits_; }

  // Addition and subtraction coincide in characteristic 2.
  friend VectorLabel operator+(VectorLabel a, VectorLabel b);
  friend VectorLabel operator-(VectorLabel a, VectorLabel b) { return a + b; }
  friend bool operator==(const VectorLabel&, const VectorLabel&) = default;

 private:
  int k_;
  std::uint32_t bits_;
};

// Largest dimension the generators accept; 2^k vertices per side.
inline constexpr int kMaxDimension = 12;

// K_{2^k,2^k}: side A vertices 0..2^k-1 and side B vertices 2^k..2^{k+1}-1,
// each labeled by its offset within the side; edge uv gets color u - v.
// Proper with 2^k colors and free of rainbow paths of length 2^k.
ColoredGraph bipartite_f2k(int k);

// K_{2^k} on labels 0..2^k-1; edge uv gets color id (u + v) - 1 over the
// 2^k - 1 nonzero vectors. Free of rainbow paths of length 2^k - 1.
ColoredGraph maamoun_meyniel(int k);

// floor(n / 2^{k+1}) shared-palette copies of bipartite_f2k(k) plus isolated
// vertices up to n.
ColoredGraph blowup_f2k(int k, int n);

// 4^k * floor(n / 2^{k+1}), the edge count of blowup_f2k(k, n).
std::int64_t lower_bound_edges(int k, std::int64_t n);

// Coefficients of n in the bounds on the rainbow Turan number of P_{k+1}.
struct BoundTableRow {
  int k = 0;
  Rational lower;          // k/2
  Rational upper_new;      // 9k/7 + 2
  std::int64_t upper_old;  // ceil((3k+1)/2)
  Rational eg_baseline;    // k/2, the ordinary Turan coefficient

  // -1, 0, 1 as upper_new is below, equal to, or above upper_old.
  int compare_upper() const;
};

std::vector<BoundTableRow> bound_table(int k_max);
std::string bound_table_csv(const std::vector<BoundTableRow>& rows);

}  // namespace rt

#endif  // RT_CONSTRUCTIONS_HPP_
