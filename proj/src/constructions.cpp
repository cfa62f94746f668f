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

#include "rt/constructions.hpp"

#include <iomanip>
#include <sstream>

#include "rt/errors.hpp"

namespace rt {
namespace {

void require_dimension(int k, const char* what) {
  if (k < 2) {
    throw PreconditionError(std::string(what) +
                            " needs k >= 2: the colors sum to zero only for k >= 2, which is what "
                            "rules out the long rainbow path");
  }
  if (k > kMaxDimension) {
    throw PreconditionError(std::string(what) + " supports k <= " + std::to_string(kMaxDimension));
  }
}

}  // namespace

VectorLabel::VectorLabel(int k, std::uint32_t bits) : k_(k), bits_(bits) {
  if (k < 0 || k > 31 || bits >= (std::uint32_t{1} << k)) {
    throw PreconditionError("vector label out of range");
  }
}

VectorLabel operator+(VectorLabel a, VectorLabel b) {
  if (a.k_ != b.k_) throw PreconditionError("vector labels of different dimension");
  return VectorLabel(a.k_, a.bits_ ^ b.bits_);
}

ColoredGraph bipartite_f2k(int k) {
  require_dimension(k, "bipartite_f2k");
  const int side = 1 << k;
  Skeleton skeleton = complete_bipartite(side, side);
  std::vector<Color> colors;
  colors.reserve(skeleton.edges.size());
  for (const auto& e : skeleton.edges) {
    const VectorLabel u(k, static_cast<std::uint32_t>(e.u));
    const VectorLabel v(k, static_cast<std::uint32_t>(e.v - side));
    colors.push_back(static_cast<Color>((u - v).bits()));
  }
  return ColoredGraph::from_skeleton(skeleton, colors);
}

ColoredGraph maamoun_meyniel(int k) {
  require_dimension(k, "maamoun_meyniel");
  const int n = 1 << k;
  Skeleton skeleton = complete_graph(n);
  std::vector<Color> colors;
  colors.reserve(skeleton.edges.size());
  for (const auto& e : skeleton.edges) {
    const VectorLabel sum = VectorLabel(k, e.u) + VectorLabel(k, e.v);
    colors.push_back(static_cast<Color>(sum.bits()) - 1);
  }
  return ColoredGraph::from_skeleton(skeleton, colors);
}

ColoredGraph blowup_f2k(int k, int n) {
  if (n < 0) throw PreconditionError("vertex count must be non-negative");
  const ColoredGraph base = bipartite_f2k(k);
  const int copies = n / base.vertex_count();
  std::vector<ColoredGraph> parts(copies, base);
  const int rest = n - copies * base.vertex_count();
  if (rest > 0) {
    parts.push_back(ColoredGraph::create(rest, {}, std::vector<Side>(rest, Side::kA)));
  }
  return disjoint_union(parts, /*share_colors=*/true);
}

std::int64_t lower_bound_edges(int k, std::int64_t n) {
  if (k < 2) throw PreconditionError("lower_bound_edges needs k >= 2");
  if (n < 0) throw PreconditionError("vertex count must be non-negative");
  if (k > 30) throw PreconditionError("k too large");
  const std::int64_t side = std::int64_t{1} << k;
  return side * side * (n / (2 * side));
}

int BoundTableRow::compare_upper() const {
  const Rational old_value(upper_old);
  if (upper_new < old_value) return -1;
  if (upper_new > old_value) return 1;
  return 0;
}

std::vector<BoundTableRow> bound_table(int k_max) {
  if (k_max < 1) throw PreconditionError("k_max must be at least 1");
  std::vector<BoundTableRow> rows;
  for (int k = 1; k <= k_max; ++k) {
    BoundTableRow row;
    row.k = k;
    row.lower = rat(k, 2);
    row.upper_new = degree_threshold(k);
    row.upper_old = ceil(rat(3 * k + 1, 2));
    row.eg_baseline = rat(k, 2);
    rows.push_back(row);
  }
  return rows;
}

std::string bound_table_csv(const std::vector<BoundTableRow>& rows) {
  std::ostringstream out;
  out << "k,lower,upper_new,upper_new_decimal,upper_old,eg_baseline,new_vs_old\n";
  out << std::fixed << std::setprecision(6);
  for (const auto& row : rows) {
    const int cmp = row.compare_upper();
    out << row.k << ',' << to_string(row.lower) << ',' << to_string(row.upper_new) << ','
        << to_double(row.upper_new) << ',' << row.upper_old << ',' << to_string(row.eg_baseline)
        << ',' << (cmp < 0 ? "<" : cmp == 0 ? "=" : ">") << '\n';
  }
  return out.str();
}

}  // namespace rt
