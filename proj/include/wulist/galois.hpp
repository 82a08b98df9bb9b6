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

#ifndef WULIST_GALOIS_HPP
#define WULIST_GALOIS_HPP

#include <cstdint>
#include <memory>
#include <vector>

namespace wulist {

/// Element of GF(p^m) in its integer encoding.
///
/// The encoding is the base-p number whose digits are the coefficients of
/// the residue polynomial, constant term in the least significant digit. For
/// p = 2 this is the familiar bit-vector encoding (bit 0 = constant term).
using Elem = std::uint32_t;

/// Description of a finite field: characteristic, degree and modulus.
struct FieldSpec {
  std::uint32_t p = 2;
  std::uint32_t m = 1;
  // m+1 coefficients over GF(p), constant term first, monic. Empty for m = 1.
  std::vector<std::uint32_t> modulus;

  friend bool operator==(const FieldSpec&, const FieldSpec&) = default;
};

/// Largest field order the table-driven arithmetic accepts.
inline constexpr std::uint64_t kMaxFieldOrder = std::uint64_t{1} << 20;

/// Default modulus for GF(p^m): the shipped primitive polynomial for p = 2,
/// m <= 12; otherwise the first primitive polynomial in lexicographic order.
std::vector<std::uint32_t> default_modulus(std::uint32_t p, std::uint32_t m);

/// Whether a monic polynomial over GF(p) (constant term first) is
/// irreducible. Exhaustive trial division; intended for small m.
bool is_irreducible_over_prime(std::uint32_t p,
                               const std::vector<std::uint32_t>& poly);

/// Exact arithmetic in GF(p^m).
///
/// Immutable after construction. Multiplication goes through log/antilog
/// tables built from the reference polynomial arithmetic; inverses are
/// computed once by the extended Euclidean algorithm on representations.
class Field {
 public:
  /// Validates the spec (prime p, irreducible monic modulus, order within
  /// kMaxFieldOrder) and builds the tables. Throws UsageError.
  explicit Field(FieldSpec spec);

  /// GF(p^m) with the default modulus.
  static std::shared_ptr<const Field> make(std::uint32_t p, std::uint32_t m);
  static std::shared_ptr<const Field> make(FieldSpec spec);

  const FieldSpec& spec() const { return spec_; }
  std::uint32_t characteristic() const { return spec_.p; }
  std::uint32_t degree() const { return spec_.m; }
  std::uint32_t order() const { return order_; }

  bool contains(Elem a) const { return a < order_; }
  /// Throws UsageError when `a` is not a valid encoding.
  void check(Elem a) const;

  Elem zero() const { return 0; }
  Elem one() const { return 1; }
  /// The residue of the integer n in the prime subfield.
  Elem from_int(std::int64_t n) const;
  /// A fixed generator of the multiplicative group.
  Elem primitive() const { return primitive_; }

  Elem add(Elem a, Elem b) const {
    if (spec_.p == 2) return a ^ b;
    if (spec_.m == 1) {
      Elem s = a + b;
      return s >= spec_.p ? s - spec_.p : s;
    }
    return add_digits(a, b);
  }
  Elem neg(Elem a) const {
    if (spec_.p == 2 || a == 0) return a;
    if (spec_.m == 1) return spec_.p - a;
    return neg_digits(a);
  }
  Elem sub(Elem a, Elem b) const { return add(a, neg(b)); }
  Elem mul(Elem a, Elem b) const {
    if (a == 0 || b == 0) return 0;
    std::uint32_t s = log_[a] + log_[b];
    if (s >= order_ - 1) s -= order_ - 1;
    return exp_[s];
  }
  /// Throws ArithmeticError on zero.
  Elem inv(Elem a) const;
  /// Throws ArithmeticError when b is zero.
  Elem div(Elem a, Elem b) const { return mul(a, inv(b)); }
  Elem pow(Elem a, std::uint64_t e) const;

  /// Unique square root in characteristic 2 (a^(2^(m-1))). Throws
  /// UsageError in odd characteristic.
  Elem sqrt(Elem a) const;

  /// All elements in encoding order (lexicographic on digit vectors).
  std::vector<Elem> elements() const;

  /// Reference arithmetic on digit vectors, independent of the tables.
  Elem mul_reference(Elem a, Elem b) const;
  Elem inv_reference(Elem a) const;

  std::vector<std::uint32_t> digits(Elem a) const;
  Elem from_digits(const std::vector<std::uint32_t>& d) const;

  friend bool operator==(const Field& a, const Field& b) {
    return a.spec_ == b.spec_;
  }

 private:
  Elem add_digits(Elem a, Elem b) const;
  Elem neg_digits(Elem a) const;

  FieldSpec spec_;
  std::uint32_t order_ = 0;
  Elem primitive_ = 0;
  std::vector<std::uint32_t> log_;
  std::vector<Elem> exp_;
  std::vector<Elem> inv_;
};

using FieldPtr = std::shared_ptr<const Field>;

}  // namespace wulist

#endif  // WULIST_GALOIS_HPP
