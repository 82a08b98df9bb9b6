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

#include "wulist/homog.hpp"

#include <algorithm>
#include <limits>

#include "wulist/errors.hpp"

namespace wulist {

HomogPoly::HomogPoly(const Field& f, int ell)
    : field_(&f), c_(static_cast<std::size_t>(ell + 1), Poly(f)) {
  if (ell < 0) throw UsageError("homogeneous degree must be non-negative");
}

HomogPoly::HomogPoly(int ell, std::vector<Poly> coeffs)
    : field_(nullptr), c_(std::move(coeffs)) {
  if (ell < 0 || c_.size() != static_cast<std::size_t>(ell + 1))
    throw UsageError("homogeneous polynomial needs ell+1 coefficients");
  for (const Poly& c : c_)
    if (c.field_ptr() != nullptr) field_ = c.field_ptr();
  if (field_ == nullptr) throw UsageError("homogeneous polynomial has no field");
  for (Poly& c : c_)
    if (c.field_ptr() == nullptr) c = Poly(*field_);
}

HomogPoly HomogPoly::monomial(const Poly& c, int ydeg, int zdeg) {
  HomogPoly h(c.field(), ydeg + zdeg);
  h[ydeg] = c;
  return h;
}

bool HomogPoly::is_zero() const {
  return std::all_of(c_.begin(), c_.end(),
                     [](const Poly& p) { return p.is_zero(); });
}

int HomogPoly::ydegree() const {
  for (int i = ell(); i >= 0; --i)
    if (!(*this)[i].is_zero()) return i;
  return -1;
}

std::int64_t HomogPoly::wdeg_twice(HalfInt w1, HalfInt w2) const {
  std::int64_t best = std::numeric_limits<std::int64_t>::min();
  for (int i = 0; i <= ell(); ++i) {
    const Poly& q = (*this)[i];
    if (q.is_zero()) continue;
    const std::int64_t v =
        2 * q.degree().value() + i * w2.twice() + (ell() - i) * w1.twice();
    best = std::max(best, v);
  }
  return best;
}

int HomogPoly::max_xdeg() const {
  int best = -1;
  for (const Poly& q : c_) best = std::max(best, q.degree().value_or(-1));
  return best;
}

Poly HomogPoly::substitute(const Poly& y, const Poly& z) const {
  const Field& f = *field_;
  // Powers of y and z up to ell.
  std::vector<Poly> ypow{Poly::constant(f, 1)}, zpow{Poly::constant(f, 1)};
  for (int i = 0; i < ell(); ++i) {
    ypow.push_back(ypow.back() * y);
    zpow.push_back(zpow.back() * z);
  }
  Poly acc(f);
  for (int i = 0; i <= ell(); ++i) {
    const Poly& q = (*this)[i];
    if (q.is_zero()) continue;
    acc += q * ypow[static_cast<std::size_t>(i)] *
           zpow[static_cast<std::size_t>(ell() - i)];
  }
  return acc;
}

HomogPoly& HomogPoly::operator+=(const HomogPoly& b) {
  if (b.ell() != ell()) throw UsageError("adding forms of different degree");
  for (std::size_t i = 0; i < c_.size(); ++i) c_[i] += b.c_[i];
  return *this;
}

HomogPoly& HomogPoly::operator-=(const HomogPoly& b) {
  if (b.ell() != ell()) throw UsageError("subtracting forms of different degree");
  for (std::size_t i = 0; i < c_.size(); ++i) c_[i] -= b.c_[i];
  return *this;
}

HomogPoly operator*(const HomogPoly& a, const HomogPoly& b) {
  HomogPoly r(*a.field_, a.ell() + b.ell());
  for (int i = 0; i <= a.ell(); ++i) {
    if (a[i].is_zero()) continue;
    for (int j = 0; j <= b.ell(); ++j) {
      if (b[j].is_zero()) continue;
      r[i + j] += a[i] * b[j];
    }
  }
  return r;
}

HomogPoly operator*(const Poly& c, const HomogPoly& a) {
  HomogPoly r = a;
  for (Poly& q : r.c_) q = c * q;
  return r;
}

HomogPoly HomogPoly::pow(int e) const {
  HomogPoly r = HomogPoly::monomial(Poly::constant(*field_, 1), 0, 0);
  for (int i = 0; i < e; ++i) r = r * *this;
  return r;
}

}  // namespace wulist
