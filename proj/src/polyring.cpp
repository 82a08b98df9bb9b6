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

#include "wulist/polyring.hpp"

#include <set>

#include "wulist/errors.hpp"

namespace wulist {

EATrace ea_full(const Poly& p, const Poly& q) {
  if (!(p.degree() > q.degree()))
    throw UsageError("extended Euclid requires deg p > deg q");
  const Field& f = p.field();
  EATrace t{p, q, {}};
  t.rows.push_back({p, Poly::constant(f, 1), Poly(f), Poly(f)});
  t.rows.push_back({q, Poly(f), Poly::constant(f, 1), Poly(f)});
  while (!t.rows.back().s.is_zero()) {
    const EARow& a = t.rows[t.rows.size() - 2];
    const EARow& b = t.rows.back();
    auto [quo, rem] = divmod(a.s, b.s);
    EARow next{std::move(rem), a.u - quo * b.u, a.v - quo * b.v, quo};
    t.rows.push_back(std::move(next));
  }
  return t;
}

Poly lagrange(std::span<const Elem> xs, std::span<const Elem> ys,
              const Field& f) {
  if (xs.size() != ys.size())
    throw UsageError("lagrange: abscissae and values differ in length");
  if (std::set<Elem>(xs.begin(), xs.end()).size() != xs.size())
    throw UsageError("lagrange: repeated abscissa");
  const Poly full = Poly::from_roots(f, xs);
  const Poly dfull = full.derivative();
  Poly r(f);
  for (std::size_t i = 0; i < xs.size(); ++i) {
    if (ys[i] == 0) continue;
    // full / (x - x_i), scaled so that it is 1 at x_i.
    Poly basis = full / Poly(f, {f.neg(xs[i]), 1});
    r += basis.scaled(f.div(ys[i], dfull.eval(xs[i])));
  }
  return r;
}

Poly mod_inverse(const Poly& a, const Poly& g) {
  const Field& f = g.field();
  if (a.is_zero()) throw ArithmeticError("inverse of zero residue");
  Poly r0 = g, r1 = a % g, t0(f), t1 = Poly::constant(f, 1);
  while (!r1.is_zero()) {
    auto [quo, rem] = divmod(r0, r1);
    r0 = std::move(r1);
    r1 = std::move(rem);
    Poly t = t0 - quo * t1;
    t0 = std::move(t1);
    t1 = std::move(t);
  }
  if (r0.degree() != 0) throw ArithmeticError("residue is not invertible");
  return (t0.scaled(f.inv(r0.lead()))) % g;
}

Poly mod_pow(Poly base, std::uint64_t e, const Poly& g) {
  const Field& f = g.field();
  Poly result = Poly::constant(f, 1) % g;
  base = base % g;
  while (e > 0) {
    if (e & 1) result = (result * base) % g;
    base = (base * base) % g;
    e >>= 1;
  }
  return result;
}

Poly mod_sqrt_char2(const Poly& a, const Poly& g) {
  const Field& f = g.field();
  if (f.characteristic() != 2)
    throw UsageError("modular square root requires characteristic 2");
  const int t = g.degree().value_or(0);
  if (t < 1) throw UsageError("modular square root needs deg g >= 1");
  Poly r = a % g;
  const std::uint64_t squarings = std::uint64_t{f.degree()} * t - 1;
  for (std::uint64_t i = 0; i < squarings; ++i) r = (r * r) % g;
  if ((r * r) % g != a % g)
    throw ArithmeticError("modulus is reducible: square root failed");
  return r;
}

bool is_irreducible(const Poly& g) {
  const Field& f = g.field();
  const int t = g.degree().value_or(-1);
  if (t < 1) return false;
  if (t == 1) return true;
  const Poly x = Poly::x(f);
  Poly frob = x % g;
  for (int i = 1; i <= t / 2; ++i) {
    frob = mod_pow(frob, f.order(), g);
    if (!gcd(frob - x, g).is_one()) return false;
  }
  return true;
}

std::vector<Elem> roots_among(const Poly& a, std::span<const Elem> candidates) {
  std::vector<Elem> out;
  for (Elem c : candidates)
    if (a.eval(c) == 0) out.push_back(c);
  return out;
}

}  // namespace wulist
