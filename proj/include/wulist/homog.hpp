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

#ifndef WULIST_HOMOG_HPP
#define WULIST_HOMOG_HPP

#include <cstdint>
#include <vector>

#include "wulist/halfint.hpp"
#include "wulist/poly.hpp"

namespace wulist {

/// Q(x, y, z) = sum_{i=0}^{ell} Q_i(x) y^i z^(ell - i): homogeneous of
/// degree ell in (y, z) with coefficients in F[x].
class HomogPoly {
 public:
  HomogPoly(const Field& f, int ell);
  HomogPoly(int ell, std::vector<Poly> coeffs);

  /// y^a z^b scaled by c(x).
  static HomogPoly monomial(const Poly& c, int ydeg, int zdeg);

  const Field& field() const { return *field_; }
  int ell() const { return static_cast<int>(c_.size()) - 1; }
  /// Coefficient of y^i z^(ell - i).
  const Poly& operator[](int i) const { return c_[static_cast<std::size_t>(i)]; }
  Poly& operator[](int i) { return c_[static_cast<std::size_t>(i)]; }
  const std::vector<Poly>& coeffs() const { return c_; }

  bool is_zero() const;
  /// Largest i with Q_i != 0 (the y-degree); -1 for zero.
  int ydegree() const;

  /// max_i (deg Q_i + i*w2 + (ell - i)*w1), doubled to stay integral.
  /// Undefined for the zero polynomial.
  std::int64_t wdeg_twice(HalfInt w1, HalfInt w2) const;
  /// Largest x-degree over all coefficients (-1 for zero).
  int max_xdeg() const;

  /// sum_i Q_i(x) Y(x)^i Z(x)^(ell - i).
  Poly substitute(const Poly& y, const Poly& z) const;

  HomogPoly& operator+=(const HomogPoly& b);
  HomogPoly& operator-=(const HomogPoly& b);
  friend HomogPoly operator*(const HomogPoly& a, const HomogPoly& b);
  friend HomogPoly operator*(const Poly& c, const HomogPoly& a);
  friend bool operator==(const HomogPoly& a, const HomogPoly& b) {
    return a.c_ == b.c_;
  }

  /// a^e for e >= 0 (a^0 is the constant 1 of degree 0).
  HomogPoly pow(int e) const;

 private:
  const Field* field_;
  std::vector<Poly> c_;
};

}  // namespace wulist

#endif  // WULIST_HOMOG_HPP
