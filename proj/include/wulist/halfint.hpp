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

#ifndef WULIST_HALFINT_HPP
#define WULIST_HALFINT_HPP

#include <compare>
#include <cstdint>
#include <string>

namespace wulist {

/// Exact rational with denominator 1 or 2, stored as twice its value.
class HalfInt {
 public:
  constexpr HalfInt() = default;
  constexpr HalfInt(int v) : twice_(2 * std::int64_t{v}) {}  // NOLINT
  static constexpr HalfInt from_twice(std::int64_t t) {
    HalfInt h;
    h.twice_ = t;
    return h;
  }
  /// n / 2.
  static constexpr HalfInt half_of(std::int64_t n) { return from_twice(n); }

  constexpr std::int64_t twice() const { return twice_; }
  constexpr bool is_integer() const { return twice_ % 2 == 0; }
  constexpr std::int64_t floor() const {
    return twice_ >= 0 ? twice_ / 2 : -((-twice_ + 1) / 2);
  }
  constexpr std::int64_t ceil() const { return -HalfInt::from_twice(-twice_).floor(); }
  double to_double() const { return static_cast<double>(twice_) / 2.0; }

  /// "3", "-1", "1/2", "-3/2".
  std::string str() const {
    if (is_integer()) return std::to_string(twice_ / 2);
    return std::to_string(twice_) + "/2";
  }

  friend constexpr HalfInt operator+(HalfInt a, HalfInt b) {
    return from_twice(a.twice_ + b.twice_);
  }
  friend constexpr HalfInt operator-(HalfInt a, HalfInt b) {
    return from_twice(a.twice_ - b.twice_);
  }
  friend constexpr HalfInt operator-(HalfInt a) { return from_twice(-a.twice_); }
  friend constexpr HalfInt operator*(std::int64_t k, HalfInt a) {
    return from_twice(k * a.twice_);
  }
  friend constexpr bool operator==(HalfInt, HalfInt) = default;
  friend constexpr auto operator<=>(HalfInt a, HalfInt b) {
    return a.twice_ <=> b.twice_;
  }

 private:
  std::int64_t twice_ = 0;
};

}  // namespace wulist

#endif  // WULIST_HALFINT_HPP
