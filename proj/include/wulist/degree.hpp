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

#ifndef WULIST_DEGREE_HPP
#define WULIST_DEGREE_HPP

#include <compare>
#include <ostream>

namespace wulist {

/// Polynomial degree with a distinguished -infinity for the zero polynomial.
///
/// -infinity compares below every integer and absorbs addition, so degree
/// arithmetic on the zero polynomial never wraps into a real value.
class Degree {
 public:
  constexpr Degree() = default;  // -infinity
  constexpr explicit Degree(int d) : finite_(true), value_(d) {}

  static constexpr Degree neg_inf() { return Degree(); }

  constexpr bool is_neg_inf() const { return !finite_; }
  constexpr bool is_finite() const { return finite_; }
  /// Undefined for -infinity; callers check is_finite() first.
  constexpr int value() const { return value_; }
  /// Value, or `fallback` for -infinity.
  constexpr int value_or(int fallback) const {
    return finite_ ? value_ : fallback;
  }

  friend constexpr bool operator==(Degree a, Degree b) {
    return a.finite_ == b.finite_ && (!a.finite_ || a.value_ == b.value_);
  }
  friend constexpr std::strong_ordering operator<=>(Degree a, Degree b) {
    if (!a.finite_ || !b.finite_) return a.finite_ <=> b.finite_;
    return a.value_ <=> b.value_;
  }
  friend constexpr bool operator==(Degree a, int b) { return a == Degree(b); }
  friend constexpr std::strong_ordering operator<=>(Degree a, int b) {
    return a <=> Degree(b);
  }

  friend constexpr Degree operator+(Degree a, Degree b) {
    if (!a.finite_ || !b.finite_) return Degree();
    return Degree(a.value_ + b.value_);
  }
  friend constexpr Degree operator+(Degree a, int b) {
    return a.finite_ ? Degree(a.value_ + b) : Degree();
  }
  friend constexpr Degree operator-(Degree a, int b) {
    return a.finite_ ? Degree(a.value_ - b) : Degree();
  }

  friend std::ostream& operator<<(std::ostream& os, Degree d) {
    if (!d.finite_) return os << "-inf";
    return os << d.value_;
  }

 private:
  bool finite_ = false;
  int value_ = 0;
};

}  // namespace wulist

#endif  // WULIST_DEGREE_HPP
