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

#ifndef WULIST_POLYRING_HPP
#define WULIST_POLYRING_HPP

#include <span>
#include <vector>

#include "wulist/poly.hpp"

namespace wulist {

/// One row of the extended Euclidean algorithm: s = u*p + v*q.
struct EARow {
  Poly s;
  Poly u;
  Poly v;
  Poly quotient;  // zero for rows 0 and 1
};

/// Full remainder/cofactor sequence of the extended Euclidean algorithm.
///
/// rows[0] = (p, 1, 0), rows[1] = (q, 0, 1), and the last row has s = 0.
/// For every row i >= 1:
///   deg s_i is strictly decreasing,
///   u_i v_{i-1} - u_{i-1} v_i = (-1)^i,
///   s_i = u_i p + v_i q,
///   deg p = deg v_i + deg s_{i-1}.
struct EATrace {
  Poly p;
  Poly q;
  std::vector<EARow> rows;

  /// Index N of the last nonzero remainder (the gcd).
  std::size_t gcd_index() const { return rows.size() - 2; }
};

/// Runs the extended Euclidean algorithm to completion.
/// Requires deg p > deg q; throws UsageError otherwise.
EATrace ea_full(const Poly& p, const Poly& q);

/// Unique polynomial of degree < n through (xs[i], ys[i]).
/// Throws UsageError on repeated abscissae or length mismatch.
Poly lagrange(std::span<const Elem> xs, std::span<const Elem> ys,
              const Field& f);

/// b with a*b = 1 mod g. Throws ArithmeticError when gcd(a, g) != 1.
Poly mod_inverse(const Poly& a, const Poly& g);

/// (base^e) mod g by square-and-multiply.
Poly mod_pow(Poly base, std::uint64_t e, const Poly& g);

/// T with T^2 = a mod g in characteristic 2, g irreducible of degree t over
/// GF(2^m); computed as a^(2^(mt-1)) mod g. Throws UsageError in odd
/// characteristic and ArithmeticError if the postcondition fails (reducible
/// g).
Poly mod_sqrt_char2(const Poly& a, const Poly& g);

/// Irreducibility over the base field by the gcd-with-Frobenius test:
/// gcd(x^(q^i) - x mod g, g) = 1 for i = 1..deg(g)/2.
bool is_irreducible(const Poly& g);

/// All roots of a nonzero polynomial among `candidates`, by evaluation.
std::vector<Elem> roots_among(const Poly& a, std::span<const Elem> candidates);

}  // namespace wulist

#endif  // WULIST_POLYRING_HPP
