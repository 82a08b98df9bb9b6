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

#include "wulist/poly.hpp"

#include <algorithm>

#include "wulist/errors.hpp"

namespace wulist {
namespace {

using Coeffs = std::vector<Elem>;

void add_into(const Field& f, Coeffs& acc, std::span<const Elem> b,
              std::size_t offset) {
  if (acc.size() < b.size() + offset) acc.resize(b.size() + offset, 0);
  for (std::size_t i = 0; i < b.size(); ++i)
    acc[i + offset] = f.add(acc[i + offset], b[i]);
}

void sub_into(const Field& f, Coeffs& acc, std::span<const Elem> b,
              std::size_t offset) {
  if (acc.size() < b.size() + offset) acc.resize(b.size() + offset, 0);
  for (std::size_t i = 0; i < b.size(); ++i)
    acc[i + offset] = f.sub(acc[i + offset], b[i]);
}

Coeffs schoolbook(const Field& f, std::span<const Elem> a,
                  std::span<const Elem> b) {
  if (a.empty() || b.empty()) return {};
  Coeffs r(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j)
      r[i + j] = f.add(r[i + j], f.mul(a[i], b[j]));
  }
  return r;
}

Coeffs karatsuba(const Field& f, std::span<const Elem> a,
                 std::span<const Elem> b) {
  if (a.size() < kKaratsubaThreshold || b.size() < kKaratsubaThreshold)
    return schoolbook(f, a, b);
  const std::size_t half = std::max(a.size(), b.size()) / 2;
  auto lo = [half](std::span<const Elem> s) {
    return s.subspan(0, std::min(half, s.size()));
  };
  auto hi = [half](std::span<const Elem> s) {
    return s.size() > half ? s.subspan(half) : std::span<const Elem>{};
  };
  const auto a0 = lo(a), a1 = hi(a), b0 = lo(b), b1 = hi(b);
  Coeffs z0 = karatsuba(f, a0, b0);
  Coeffs z2 = karatsuba(f, a1, b1);
  Coeffs sa(a0.begin(), a0.end()), sb(b0.begin(), b0.end());
  add_into(f, sa, a1, 0);
  add_into(f, sb, b1, 0);
  Coeffs z1 = karatsuba(f, sa, sb);
  sub_into(f, z1, z0, 0);
  sub_into(f, z1, z2, 0);
  Coeffs r(a.size() + b.size() - 1, 0);
  add_into(f, r, z0, 0);
  add_into(f, r, z1, half);
  add_into(f, r, z2, 2 * half);
  r.resize(a.size() + b.size() - 1);
  return r;
}

}  // namespace

Poly::Poly(const Field& f, std::vector<Elem> coeffs)
    : field_(&f), c_(std::move(coeffs)) {
  for (Elem c : c_) f.check(c);
  trim();
}

Poly Poly::constant(const Field& f, Elem c) { return Poly(f, {c}); }

Poly Poly::monomial(const Field& f, Elem c, std::size_t k) {
  std::vector<Elem> v(k + 1, 0);
  v[k] = c;
  return Poly(f, std::move(v));
}

Poly Poly::from_roots(const Field& f, std::span<const Elem> roots) {
  Poly r = constant(f, 1);
  for (Elem a : roots) r *= Poly(f, {f.neg(a), 1});
  return r;
}

const Field& Poly::field() const {
  if (field_ == nullptr) throw UsageError("polynomial is not bound to a field");
  return *field_;
}

void Poly::trim() {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

const Field* Poly::bind(const Poly& other) const {
  if (field_ == nullptr) return other.field_;
  if (other.field_ == nullptr || other.field_ == field_) return field_;
  if (!(*field_ == *other.field_))
    throw UsageError("polynomials over different fields");
  return field_;
}

Elem Poly::eval(Elem x) const {
  if (c_.empty()) return 0;
  const Field& f = *field_;
  Elem acc = 0;
  for (std::size_t i = c_.size(); i-- > 0;) acc = f.add(f.mul(acc, x), c_[i]);
  return acc;
}

Poly Poly::derivative() const {
  if (c_.size() <= 1) return truncated(0);
  const Field& f = *field_;
  std::vector<Elem> d(c_.size() - 1);
  for (std::size_t i = 1; i < c_.size(); ++i)
    d[i - 1] = f.mul(f.from_int(static_cast<std::int64_t>(i)), c_[i]);
  return Poly(f, std::move(d));
}

Poly Poly::shifted(std::size_t k) const {
  Poly r = *this;
  if (!r.c_.empty()) r.c_.insert(r.c_.begin(), k, 0);
  return r;
}

Poly Poly::truncated(std::size_t n) const {
  Poly r = *this;
  if (r.c_.size() > n) r.c_.resize(n);
  r.trim();
  return r;
}

Poly Poly::shifted_down(std::size_t k) const {
  Poly r = *this;
  r.c_.erase(r.c_.begin(), r.c_.begin() + std::min(k, r.c_.size()));
  return r;
}

Poly Poly::compose_shift(Elem c) const {
  if (c_.empty() || c == 0) return *this;
  const Field& f = *field_;
  // In-place Taylor shift by repeated Horner steps.
  std::vector<Elem> a = c_;
  const std::size_t n = a.size();
  for (std::size_t i = 0; i + 1 < n; ++i)
    for (std::size_t j = n - 1; j-- > i;) a[j] = f.add(a[j], f.mul(c, a[j + 1]));
  return Poly(f, std::move(a));
}

Poly Poly::scaled(Elem c) const {
  Poly r = *this;
  if (c_.empty()) return r;
  if (c == 0) {
    r.c_.clear();
    return r;
  }
  const Field& f = *field_;
  for (Elem& v : r.c_) v = f.mul(v, c);
  return r;
}

Poly Poly::monic() const {
  if (c_.empty()) return *this;
  return scaled(field_->inv(c_.back()));
}

Poly& Poly::operator+=(const Poly& b) {
  field_ = bind(b);
  if (b.c_.empty()) return *this;
  add_into(*field_, c_, b.c_, 0);
  trim();
  return *this;
}

Poly& Poly::operator-=(const Poly& b) {
  field_ = bind(b);
  if (b.c_.empty()) return *this;
  sub_into(*field_, c_, b.c_, 0);
  trim();
  return *this;
}

Poly& Poly::operator*=(const Poly& b) {
  *this = *this * b;
  return *this;
}

Poly Poly::operator-() const {
  Poly r = *this;
  if (field_ != nullptr)
    for (Elem& v : r.c_) v = field_->neg(v);
  return r;
}

Poly operator*(const Poly& a, const Poly& b) {
  const Field* f = a.bind(b);
  Poly r;
  r.field_ = f;
  if (a.c_.empty() || b.c_.empty()) return r;
  r.c_ = karatsuba(*f, a.c_, b.c_);
  r.trim();
  return r;
}

Poly mul_schoolbook(const Poly& a, const Poly& b) {
  if (a.is_zero() || b.is_zero()) return Poly(a.field_ptr() ? a.field() : b.field());
  const Field& f = a.field();
  return Poly(f, schoolbook(f, a.coeffs(), b.coeffs()));
}

std::ostream& operator<<(std::ostream& os, const Poly& p) {
  os << '[';
  for (std::size_t i = 0; i < p.c_.size(); ++i) os << (i ? " " : "") << p.c_[i];
  return os << ']';
}

std::pair<Poly, Poly> divmod(const Poly& a, const Poly& b) {
  if (b.is_zero()) throw ArithmeticError("polynomial division by zero");
  const Field& f = b.field();
  if (a.degree() < b.degree()) return {Poly(f), a.field_ptr() ? a : Poly(f)};
  std::vector<Elem> rem = a.coeffs();
  const std::size_t db = b.size() - 1;
  std::vector<Elem> quo(rem.size() - db, 0);
  const Elem lead_inv = f.inv(b.lead());
  for (std::size_t k = rem.size(); k-- > db;) {
    const Elem c = f.mul(rem[k], lead_inv);
    if (c == 0) continue;
    quo[k - db] = c;
    for (std::size_t i = 0; i <= db; ++i)
      rem[k - db + i] = f.sub(rem[k - db + i], f.mul(c, b[i]));
  }
  rem.resize(db);
  return {Poly(f, std::move(quo)), Poly(f, std::move(rem))};
}

Poly operator/(const Poly& a, const Poly& b) { return divmod(a, b).first; }
Poly operator%(const Poly& a, const Poly& b) { return divmod(a, b).second; }

Poly gcd(Poly a, Poly b) {
  while (!b.is_zero()) {
    Poly r = a % b;
    a = std::move(b);
    b = std::move(r);
  }
  return a.monic();
}

}  // namespace wulist
