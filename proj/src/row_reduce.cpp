// Copyright 2026 The wulist Authors.
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

#include <limits>
#include <map>

#include "wulist/errors.hpp"
#include "wulist/ratinterp.hpp"

namespace wulist {
namespace {

constexpr std::int64_t kMinusInf = std::numeric_limits<std::int64_t>::min();

std::int64_t row_degree(const std::vector<Poly>& row,
                        std::span<const std::int64_t> shifts) {
  std::int64_t best = kMinusInf;
  for (std::size_t j = 0; j < row.size(); ++j) {
    if (row[j].is_zero()) continue;
    best = std::max(best, 2 * std::int64_t{row[j].degree().value()} + shifts[j]);
  }
  return best;
}

// row -= c x^k * other
void sub_scaled(std::vector<Poly>& row, const std::vector<Poly>& other, Elem c,
                std::size_t k) {
  for (std::size_t j = 0; j < row.size(); ++j)
    if (!other[j].is_zero()) row[j] -= other[j].scaled(c).shifted(k);
}

}  // namespace

int leading_position(const std::vector<Poly>& row,
                     std::span<const std::int64_t> shifts_twice) {
  const std::int64_t d = row_degree(row, shifts_twice);
  if (d == kMinusInf) return -1;
  for (std::size_t j = row.size(); j-- > 0;)
    if (!row[j].is_zero() &&
        2 * std::int64_t{row[j].degree().value()} + shifts_twice[j] == d)
      return static_cast<int>(j);
  return -1;
}

bool is_weak_popov(const PolyMatrix& m,
                   std::span<const std::int64_t> shifts_twice) {
  std::vector<bool> seen(shifts_twice.size(), false);
  for (const auto& row : m) {
    const int lp = leading_position(row, shifts_twice);
    if (lp < 0) continue;
    if (seen[static_cast<std::size_t>(lp)]) return false;
    seen[static_cast<std::size_t>(lp)] = true;
  }
  return true;
}

RowReduction row_reduce(PolyMatrix m, std::span<const std::int64_t> shifts_twice,
                        bool want_transform) {
  const std::size_t nu = m.size();
  for (const auto& row : m)
    if (row.size() != nu || shifts_twice.size() != nu)
      throw UsageError("row_reduce expects a square matrix and matching shifts");
  if (nu == 0) throw UsageError("row_reduce on an empty matrix");
  const Field& f = [&]() -> const Field& {
    for (const auto& row : m)
      for (const Poly& p : row)
        if (p.field_ptr() != nullptr) return p.field();
    throw UsageError("row_reduce on a matrix without a field");
  }();

  RowReduction out;
  if (want_transform) {
    out.transform.assign(nu, std::vector<Poly>(nu, Poly(f)));
    for (std::size_t i = 0; i < nu; ++i)
      out.transform[i][i] = Poly::constant(f, 1);
  }

  // Mulders-Storjohann: while two rows share a leading position, cancel the
  // leading term of the one with larger (or equal) degree there.
  std::vector<int> lp(nu);
  for (std::size_t i = 0; i < nu; ++i) {
    lp[i] = leading_position(m[i], shifts_twice);
    if (lp[i] < 0) throw UsageError("row_reduce: singular matrix");
  }
  for (;;) {
    std::map<int, std::size_t> owner;
    std::size_t a = nu, b = nu;
    for (std::size_t i = 0; i < nu && a == nu; ++i) {
      auto [it, fresh] = owner.emplace(lp[i], i);
      if (!fresh) {
        a = it->second;
        b = i;
      }
    }
    if (a == nu) break;
    const std::size_t col = static_cast<std::size_t>(lp[a]);
    if (m[a][col].degree() < m[b][col].degree()) std::swap(a, b);
    // Row a has the larger degree in the shared column: reduce it by row b.
    const int k = m[a][col].degree().value() - m[b][col].degree().value();
    const Elem c = f.div(m[a][col].lead(), m[b][col].lead());
    sub_scaled(m[a], m[b], c, static_cast<std::size_t>(k));
    if (want_transform)
      sub_scaled(out.transform[a], out.transform[b], c, static_cast<std::size_t>(k));
    lp[a] = leading_position(m[a], shifts_twice);
    if (lp[a] < 0) throw UsageError("row_reduce: singular matrix");
  }

  out.row_degrees_twice.resize(nu);
  std::size_t best = 0;
  for (std::size_t i = 0; i < nu; ++i) {
    out.row_degrees_twice[i] = row_degree(m[i], shifts_twice);
    if (out.row_degrees_twice[i] < out.row_degrees_twice[best]) best = i;
  }
  out.shortest_row = best;
  out.reduced = std::move(m);
  return out;
}

}  // namespace wulist
