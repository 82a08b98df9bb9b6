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

#ifndef WULIST_KEYEQ_HPP
#define WULIST_KEYEQ_HPP

#include <cstddef>

#include "wulist/poly.hpp"
#include "wulist/polyring.hpp"

namespace wulist {

/// Module term order on x^i y^j (j in {0, 1}): weighted degree i + mu*j,
/// ties broken with x above y, so x^mu > y > x^(mu-1).
struct TermOrder {
  int mu = 0;
};

/// Monomial x^xdeg y^ydeg.
struct Monomial {
  int xdeg = 0;
  int ydeg = 0;
  friend bool operator==(const Monomial&, const Monomial&) = default;
};

/// -1, 0, 1 as a <, =, > b under the order.
int compare(const Monomial& a, const Monomial& b, TermOrder ord);

/// c0(x) + y*c1(x), an element of F[x] + yF[x].
struct PairPoly {
  Poly c0;
  Poly c1;

  bool is_zero() const { return c0.is_zero() && c1.is_zero(); }
  friend PairPoly operator+(const PairPoly& a, const PairPoly& b) {
    return {a.c0 + b.c0, a.c1 + b.c1};
  }
  friend PairPoly operator-(const PairPoly& a, const PairPoly& b) {
    return {a.c0 - b.c0, a.c1 - b.c1};
  }
  friend PairPoly operator*(const Poly& f, const PairPoly& h) {
    return {f * h.c0, f * h.c1};
  }
  friend bool operator==(const PairPoly&, const PairPoly&) = default;
};

/// Leading monomial of a nonzero h under the order. Throws UsageError on 0.
Monomial leading_term(const PairPoly& h, TermOrder ord);

/// Gröbner basis {h1, h2} of M = [p, y - q] under a (1, mu) order, labelled
/// so that h1 leads in y-degree 0 and h2 in y-degree 1.
struct GrobnerPair {
  PairPoly h1;
  PairPoly h2;
  TermOrder order;
  Poly p;
  Poly q;
  // EA iteration i at which the algorithm stopped; h2 comes from row i.
  std::size_t stop_index = 0;

  int xdeg1() const { return leading_term(h1, order).xdeg; }
  int xdeg2() const { return leading_term(h2, order).xdeg; }
};

/// Membership of h in M = [p, y - q]: returns a with h = a*p + b*(y - q)
/// (b is then h.c1). `member` is false when h is not in M.
struct Membership {
  bool member = false;
  Poly a;
  Poly b;
};
Membership membership(const PairPoly& h, const Poly& p, const Poly& q);

/// {h1, h2} generates M and the leading y-degrees differ.
bool is_groebner_pair(const PairPoly& h1, const PairPoly& h2, const Poly& p,
                      const Poly& q, TermOrder ord);

/// Runs the EA on (p, q) and stops at the first i >= 1 with
/// deg s_i < deg v_i + mu; h1 = s_{i-1} - v_{i-1} y, h2 = s_i - v_i y.
/// Requires deg p > deg q (q may be zero) and mu >= 0.
GrobnerPair solve_key_equation(const Poly& p, const Poly& q, int mu);
/// Same, reusing an already computed trace.
GrobnerPair solve_key_equation(const EATrace& trace, int mu);

/// Which side of the expansion delta - y*gamma leads.
enum class LeadingSide { gamma_side, delta_side };

/// Degree bounds for f1, f2 in delta - y*gamma = f1 h1 + f2 h2.
///
/// gamma_side (delta <_mu y*gamma): deg f1 <= deg gamma + mu - xdeg(h1) - 1
///                                  and deg f2 == deg gamma - xdeg(h2).
/// delta_side (delta >_mu y*gamma): deg f1 == deg delta - xdeg(h1)
///                                  and deg f2 <= deg delta - mu - xdeg(h2).
/// The bound passed as `leading_deg` is deg gamma or deg delta accordingly.
struct CofactorBounds {
  int bound_f1 = 0;
  int bound_f2 = 0;
  bool f1_exact = false;
  bool f2_exact = false;
};
CofactorBounds cofactor_bounds(const GrobnerPair& pair, int leading_deg,
                               LeadingSide side);

/// Division of h by {h1, h2} under the pair's order.
struct PairDivision {
  Poly f1;
  Poly f2;
  PairPoly remainder;
};
PairDivision divide(const PairPoly& h, const GrobnerPair& pair);

}  // namespace wulist

#endif  // WULIST_KEYEQ_HPP
