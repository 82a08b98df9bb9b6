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

#include "wulist/galois.hpp"

#include <algorithm>
#include <array>
#include <string>
#include <utility>

#include "wulist/errors.hpp"

namespace wulist {
namespace {

using Digits = std::vector<std::uint32_t>;

bool is_prime(std::uint32_t p) {
  if (p < 2) return false;
  for (std::uint32_t d = 2; d * d <= p; ++d)
    if (p % d == 0) return false;
  return true;
}

std::uint32_t inv_mod_prime(std::uint32_t a, std::uint32_t p) {
  // Extended Euclid on integers.
  std::int64_t r0 = p, r1 = a % p, t0 = 0, t1 = 1;
  while (r1 != 0) {
    std::int64_t q = r0 / r1;
    std::tie(r0, r1) = std::pair{r1, r0 - q * r1};
    std::tie(t0, t1) = std::pair{t1, t0 - q * t1};
  }
  if (r0 != 1) throw ArithmeticError("element has no inverse modulo p");
  t0 %= static_cast<std::int64_t>(p);
  if (t0 < 0) t0 += p;
  return static_cast<std::uint32_t>(t0);
}

// Dense polynomials over GF(p), constant term first, trimmed.
void trim(Digits& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

Digits poly_mod(Digits a, const Digits& b, std::uint32_t p) {
  trim(a);
  const std::uint32_t lead_inv = inv_mod_prime(b.back(), p);
  while (a.size() >= b.size()) {
    const std::uint64_t c = std::uint64_t{a.back()} * lead_inv % p;
    const std::size_t shift = a.size() - b.size();
    for (std::size_t i = 0; i < b.size(); ++i) {
      const std::uint64_t t = c * b[i] % p;
      a[shift + i] = static_cast<std::uint32_t>((a[shift + i] + p - t) % p);
    }
    trim(a);
  }
  return a;
}

Digits poly_mul(const Digits& a, const Digits& b, std::uint32_t p) {
  if (a.empty() || b.empty()) return {};
  Digits r(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j)
      r[i + j] = static_cast<std::uint32_t>(
          (r[i + j] + std::uint64_t{a[i]} * b[j]) % p);
  trim(r);
  return r;
}

Digits poly_mulmod(const Digits& a, const Digits& b, const Digits& f,
                   std::uint32_t p) {
  return poly_mod(poly_mul(a, b, p), f, p);
}

Digits poly_powmod(Digits base, std::uint64_t e, const Digits& f,
                   std::uint32_t p) {
  Digits result{1};
  base = poly_mod(std::move(base), f, p);
  while (e > 0) {
    if (e & 1) result = poly_mulmod(result, base, f, p);
    base = poly_mulmod(base, base, f, p);
    e >>= 1;
  }
  return result;
}

std::vector<std::uint64_t> prime_factors(std::uint64_t n) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) {
      out.push_back(d);
      while (n % d == 0) n /= d;
    }
  }
  if (n > 1) out.push_back(n);
  return out;
}

std::uint64_t checked_order(std::uint32_t p, std::uint32_t m) {
  std::uint64_t q = 1;
  for (std::uint32_t i = 0; i < m; ++i) {
    q *= p;
    if (q > kMaxFieldOrder)
      throw UsageError("field order " + std::to_string(p) + "^" +
                       std::to_string(m) + " exceeds supported range");
  }
  return q;
}

// x has multiplicative order p^m - 1 modulo f (f irreducible, degree m).
bool x_is_primitive(std::uint32_t p, const Digits& f) {
  const std::uint32_t m = static_cast<std::uint32_t>(f.size() - 1);
  const std::uint64_t group = checked_order(p, m) - 1;
  const Digits x{0, 1};
  for (std::uint64_t r : prime_factors(group)) {
    if (poly_powmod(x, group / r, f, p) == Digits{1}) return false;
  }
  return true;
}

// Primitive polynomials over GF(2) for m = 1..12, bit i = coefficient of x^i.
constexpr std::array<std::uint32_t, 13> kBinaryPrimitive = {
    0,     0x3,   0x7,   0xB,   0x13,  0x25,  0x43,
    0x83,  0x11D, 0x211, 0x409, 0x805, 0x1053};

}  // namespace

bool is_irreducible_over_prime(std::uint32_t p, const Digits& poly_in) {
  Digits f = poly_in;
  trim(f);
  if (f.size() < 2) return false;
  if (f.size() == 2) return true;
  const std::uint32_t m = static_cast<std::uint32_t>(f.size() - 1);
  // Trial division by every monic polynomial of degree 1..m/2.
  for (std::uint32_t d = 1; d <= m / 2; ++d) {
    const std::uint64_t count = checked_order(p, d);
    for (std::uint64_t code = 0; code < count; ++code) {
      Digits g(d + 1, 0);
      std::uint64_t c = code;
      for (std::uint32_t i = 0; i < d; ++i) {
        g[i] = static_cast<std::uint32_t>(c % p);
        c /= p;
      }
      g[d] = 1;
      if (poly_mod(f, g, p).empty()) return false;
    }
  }
  return true;
}

Digits default_modulus(std::uint32_t p, std::uint32_t m) {
  if (!is_prime(p)) throw UsageError("characteristic must be prime");
  if (m == 0) throw UsageError("extension degree must be positive");
  if (m == 1) return {};
  if (p == 2 && m < kBinaryPrimitive.size()) {
    Digits f(m + 1, 0);
    for (std::uint32_t i = 0; i <= m; ++i) f[i] = (kBinaryPrimitive[m] >> i) & 1;
    return f;
  }
  const std::uint64_t count = checked_order(p, m);
  for (std::uint64_t code = 0; code < count; ++code) {
    Digits f(m + 1, 0);
    std::uint64_t c = code;
    for (std::uint32_t i = 0; i < m; ++i) {
      f[i] = static_cast<std::uint32_t>(c % p);
      c /= p;
    }
    f[m] = 1;
    if (f[0] == 0) continue;
    if (is_irreducible_over_prime(p, f) && x_is_primitive(p, f)) return f;
  }
  throw InternalError("no primitive polynomial found");
}

Field::Field(FieldSpec spec) : spec_(std::move(spec)) {
  if (!is_prime(spec_.p)) throw UsageError("characteristic must be prime");
  if (spec_.m == 0) throw UsageError("extension degree must be positive");
  order_ = static_cast<std::uint32_t>(checked_order(spec_.p, spec_.m));
  if (spec_.m == 1) {
    spec_.modulus.clear();
  } else {
    if (spec_.modulus.empty()) spec_.modulus = default_modulus(spec_.p, spec_.m);
    if (spec_.modulus.size() != spec_.m + 1)
      throw UsageError("modulus must have m+1 coefficients");
    for (std::uint32_t c : spec_.modulus)
      if (c >= spec_.p) throw UsageError("modulus coefficient out of range");
    if (spec_.modulus.back() != 1) throw UsageError("modulus must be monic");
    if (!is_irreducible_over_prime(spec_.p, spec_.modulus))
      throw UsageError("modulus is reducible over GF(p)");
  }

  inv_.assign(order_, 0);
  for (Elem a = 1; a < order_; ++a) inv_[a] = inv_reference(a);

  // Find a generator of the multiplicative group and build log tables.
  log_.assign(order_, 0);
  exp_.assign(order_, 0);
  if (order_ == 2) {
    primitive_ = 1;
    exp_[0] = 1;
    exp_[1] = 1;
    return;
  }
  for (Elem g = 2; g < order_; ++g) {
    Elem acc = 1;
    std::uint32_t k = 0;
    bool ok = true;
    for (; k < order_ - 1; ++k) {
      if (k > 0 && acc == 1) {
        ok = false;
        break;
      }
      exp_[k] = acc;
      log_[acc] = k;
      acc = mul_reference(acc, g);
    }
    if (ok && acc == 1) {
      primitive_ = g;
      exp_[order_ - 1] = 1;
      return;
    }
  }
  throw InternalError("multiplicative group has no generator");
}

std::shared_ptr<const Field> Field::make(std::uint32_t p, std::uint32_t m) {
  return std::make_shared<const Field>(FieldSpec{p, m, {}});
}

std::shared_ptr<const Field> Field::make(FieldSpec spec) {
  return std::make_shared<const Field>(std::move(spec));
}

void Field::check(Elem a) const {
  if (!contains(a))
    throw UsageError("value " + std::to_string(a) + " is not an element of GF(" +
                     std::to_string(order_) + ")");
}

Elem Field::from_int(std::int64_t n) const {
  std::int64_t r = n % static_cast<std::int64_t>(spec_.p);
  if (r < 0) r += spec_.p;
  return static_cast<Elem>(r);
}

Elem Field::inv(Elem a) const {
  if (a == 0) throw ArithmeticError("inverse of zero");
  return inv_[a];
}

Elem Field::pow(Elem a, std::uint64_t e) const {
  if (e == 0) return 1;
  if (a == 0) return 0;
  const std::uint64_t k = (std::uint64_t{log_[a]} * (e % (order_ - 1))) %
                          (order_ - 1);
  return exp_[k];
}

Elem Field::sqrt(Elem a) const {
  if (spec_.p != 2) throw UsageError("square root requires characteristic 2");
  return pow(a, std::uint64_t{1} << (spec_.m - 1));
}

std::vector<Elem> Field::elements() const {
  std::vector<Elem> out(order_);
  for (Elem a = 0; a < order_; ++a) out[a] = a;
  return out;
}

std::vector<std::uint32_t> Field::digits(Elem a) const {
  Digits d(spec_.m, 0);
  for (std::uint32_t i = 0; i < spec_.m; ++i) {
    d[i] = a % spec_.p;
    a /= spec_.p;
  }
  return d;
}

Elem Field::from_digits(const std::vector<std::uint32_t>& d) const {
  Elem a = 0;
  for (std::size_t i = d.size(); i-- > 0;) a = a * spec_.p + d[i];
  return a;
}

Elem Field::add_digits(Elem a, Elem b) const {
  Elem r = 0, place = 1;
  for (std::uint32_t i = 0; i < spec_.m; ++i) {
    const std::uint32_t s = (a % spec_.p + b % spec_.p) % spec_.p;
    r += s * place;
    place *= spec_.p;
    a /= spec_.p;
    b /= spec_.p;
  }
  return r;
}

Elem Field::neg_digits(Elem a) const {
  Elem r = 0, place = 1;
  for (std::uint32_t i = 0; i < spec_.m; ++i) {
    const std::uint32_t d = a % spec_.p;
    r += ((spec_.p - d) % spec_.p) * place;
    place *= spec_.p;
    a /= spec_.p;
  }
  return r;
}

Elem Field::mul_reference(Elem a, Elem b) const {
  if (spec_.m == 1)
    return static_cast<Elem>(std::uint64_t{a} * b % spec_.p);
  Digits da = digits(a), db = digits(b);
  trim(da);
  trim(db);
  Digits r = poly_mulmod(da, db, spec_.modulus, spec_.p);
  r.resize(spec_.m, 0);
  return from_digits(r);
}

Elem Field::inv_reference(Elem a) const {
  if (a == 0) throw ArithmeticError("inverse of zero");
  if (spec_.m == 1) return inv_mod_prime(a, spec_.p);
  // Extended Euclid in GF(p)[x]: track t with t*a = r mod f.
  const std::uint32_t p = spec_.p;
  Digits r0 = spec_.modulus, r1 = digits(a), t0, t1{1};
  trim(r1);
  auto sub_scaled = [p](Digits x, const Digits& y, std::uint32_t c,
                        std::size_t shift) {
    if (x.size() < y.size() + shift) x.resize(y.size() + shift, 0);
    for (std::size_t i = 0; i < y.size(); ++i) {
      const std::uint64_t t = std::uint64_t{c} * y[i] % p;
      x[i + shift] = static_cast<std::uint32_t>((x[i + shift] + p - t) % p);
    }
    trim(x);
    return x;
  };
  while (r1.size() > 1) {
    // One full division step r0 = q*r1 + r, mirrored on t.
    while (r0.size() >= r1.size()) {
      const std::uint32_t c = static_cast<std::uint32_t>(
          std::uint64_t{r0.back()} * inv_mod_prime(r1.back(), p) % p);
      const std::size_t shift = r0.size() - r1.size();
      r0 = sub_scaled(r0, r1, c, shift);
      t0 = sub_scaled(t0, t1, c, shift);
    }
    std::swap(r0, r1);
    std::swap(t0, t1);
  }
  if (r1.empty()) throw ArithmeticError("modulus is not irreducible");
  const std::uint32_t c = inv_mod_prime(r1[0], p);
  for (auto& v : t1) v = static_cast<std::uint32_t>(std::uint64_t{v} * c % p);
  t1.resize(spec_.m, 0);
  return from_digits(t1);
}

}  // namespace wulist
