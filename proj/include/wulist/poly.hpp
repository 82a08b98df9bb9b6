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

#ifndef WULIST_POLY_HPP
#define WULIST_POLY_HPP

#include <cstddef>
#include <ostream>
#include <span>
#include <utility>
#include <vector>

#include "wulist/degree.hpp"
#include "wulist/galois.hpp"

namespace wulist {

/// Dense univariate polynomial over a Field, constant term first.
///
/// Always trimmed: the coefficient vector is empty for the zero polynomial
/// and otherwise ends in a nonzero coefficient. Holds a non-owning pointer to
/// its field, which must outlive it. A default-constructed Poly is an
/// unbound zero that adopts the field of whatever it is combined with.
class Poly {
 public:
  Poly() = default;
  explicit Poly(const Field& f) : field_(&f) {}
  Poly(const Field& f, std::vector<Elem> coeffs);

  static Poly constant(const Field& f, Elem c);
  static Poly monomial(const Field& f, Elem c, std::size_t k);
  /// The polynomial x.
  static Poly x(const Field& f) { return monomial(f, 1, 1); }
  /// prod (x - r) over the given roots.
  static Poly from_roots(const Field& f, std::span<const Elem> roots);

  const Field& field() const;
  const Field* field_ptr() const { return field_; }

  Degree degree() const {
    return c_.empty() ? Degree() : Degree(static_cast<int>(c_.size()) - 1);
  }
  bool is_zero() const { return c_.empty(); }
  bool is_one() const { return c_.size() == 1 && c_[0] == 1; }
  /// Coefficient of x^i, zero beyond the degree.
  Elem operator[](std::size_t i) const { return i < c_.size() ? c_[i] : 0; }
  Elem lead() const { return c_.empty() ? 0 : c_.back(); }
  const std::vector<Elem>& coeffs() const { return c_; }
  std::size_t size() const { return c_.size(); }

  Elem eval(Elem x) const;
  Poly derivative() const;
  /// Multiply by x^k.
  Poly shifted(std::size_t k) const;
  /// Reduce modulo x^n.
  Poly truncated(std::size_t n) const;
  /// Divide by x^k, dropping the low terms.
  Poly shifted_down(std::size_t k) const;
  /// a(x + c).
  Poly compose_shift(Elem c) const;
  Poly scaled(Elem c) const;
  /// Divide by the leading coefficient; the zero polynomial stays zero.
  Poly monic() const;

  Poly& operator+=(const Poly& b);
  Poly& operator-=(const Poly& b);
  Poly& operator*=(const Poly& b);
  Poly operator-() const;

  friend Poly operator+(Poly a, const Poly& b) { return a += b; }
  friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
  friend Poly operator*(const Poly& a, const Poly& b);
  friend bool operator==(const Poly& a, const Poly& b) { return a.c_ == b.c_; }

  friend std::ostream& operator<<(std::ostream& os, const Poly& p);

 private:
  void trim();
  const Field* bind(const Poly& other) const;

  const Field* field_ = nullptr;
  std::vector<Elem> c_;
};

/// Quotient and remainder; throws ArithmeticError for a zero divisor.
std::pair<Poly, Poly> divmod(const Poly& a, const Poly& b);
Poly operator/(const Poly& a, const Poly& b);
Poly operator%(const Poly& a, const Poly& b);

/// Monic greatest common divisor (zero when both inputs are zero).
Poly gcd(Poly a, Poly b);

/// Product threshold (in coefficients) above which Karatsuba is used.
inline constexpr std::size_t kKaratsubaThreshold = 32;

/// Schoolbook product, kept as the reference for the Karatsuba path.
Poly mul_schoolbook(const Poly& a, const Poly& b);

}  // namespace wulist

#endif  // WULIST_POLY_HPP
