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

#include "wulist/keyeq.hpp"

#include <utility>

#include "wulist/errors.hpp"

namespace wulist {

int compare(const Monomial& a, const Monomial& b, TermOrder ord) {
  const int wa = a.xdeg + ord.mu * a.ydeg;
  const int wb = b.xdeg + ord.mu * b.ydeg;
  if (wa != wb) return wa < wb ? -1 : 1;
  // Equal weight: the pure-x monomial is larger.
  if (a.ydeg != b.ydeg) return a.ydeg > b.ydeg ? -1 : 1;
  return 0;
}

Monomial leading_term(const PairPoly& h, TermOrder ord) {
  if (h.is_zero()) throw UsageError("leading term of zero");
  if (h.c1.is_zero()) return {h.c0.degree().value(), 0};
  if (h.c0.is_zero()) return {h.c1.degree().value(), 1};
  const Monomial m0{h.c0.degree().value(), 0};
  const Monomial m1{h.c1.degree().value(), 1};
  return compare(m0, m1, ord) > 0 ? m0 : m1;
}

Membership membership(const PairPoly& h, const Poly& p, const Poly& q) {
  // h = a p + b (y - q) forces b = c1 and a p = c0 + c1 q.
  auto [a, rem] = divmod(h.c0 + h.c1 * q, p);
  return {rem.is_zero(), std::move(a), h.c1};
}

bool is_groebner_pair(const PairPoly& h1, const PairPoly& h2, const Poly& p,
                      const Poly& q, TermOrder ord) {
  if (h1.is_zero() || h2.is_zero() || p.is_zero()) return false;
  if (leading_term(h1, ord).ydeg == leading_term(h2, ord).ydeg) return false;
  const Membership m1 = membership(h1, p, q);
  const Membership m2 = membership(h2, p, q);
  if (!m1.member || !m2.member) return false;
  // Same module iff the expression matrix is unimodular.
  const Poly det = m1.a * m2.b - m1.b * m2.a;
  return det.degree() == 0;
}

GrobnerPair solve_key_equation(const Poly& p, const Poly& q, int mu) {
  return solve_key_equation(ea_full(p, q), mu);
}

GrobnerPair solve_key_equation(const EATrace& trace, int mu) {
  if (mu < 0) throw UsageError("term order weight mu must be non-negative");
  for (std::size_t i = 1; i < trace.rows.size(); ++i) {
    const EARow& row = trace.rows[i];
    if (row.s.degree() < row.v.degree() + mu) {
      const EARow& prev = trace.rows[i - 1];
      GrobnerPair g{{prev.s, -prev.v}, {row.s, -row.v}, TermOrder{mu},
                    trace.p, trace.q, i};
      if (leading_term(g.h1, g.order).ydeg != 0) std::swap(g.h1, g.h2);
      return g;
    }
  }
  throw InternalError("EA trace ended without meeting the halting rule");
}

CofactorBounds cofactor_bounds(const GrobnerPair& pair, int leading_deg,
                               LeadingSide side) {
  const int mu = pair.order.mu;
  if (side == LeadingSide::gamma_side)
    return {leading_deg + mu - pair.xdeg1() - 1, leading_deg - pair.xdeg2(),
            false, true};
  return {leading_deg - pair.xdeg1(), leading_deg - mu - pair.xdeg2(), true,
          false};
}

PairDivision divide(const PairPoly& h, const GrobnerPair& pair) {
  const Field& f = pair.p.field();
  PairDivision out{Poly(f), Poly(f), {Poly(f), Poly(f)}};
  const Monomial lt1 = leading_term(pair.h1, pair.order);
  const Monomial lt2 = leading_term(pair.h2, pair.order);
  auto lead_coeff = [](const PairPoly& g, const Monomial& m) {
    return m.ydeg == 0 ? g.c0.lead() : g.c1.lead();
  };
  const Elem lc1 = lead_coeff(pair.h1, lt1);
  const Elem lc2 = lead_coeff(pair.h2, lt2);
  PairPoly rest = h;
  while (!rest.is_zero()) {
    const Monomial lt = leading_term(rest, pair.order);
    const Elem lc = lead_coeff(rest, lt);
    const Monomial& div_lt = lt.ydeg == lt1.ydeg ? lt1 : lt2;
    if (lt.xdeg < div_lt.xdeg) {
      // Irreducible leading term: move it to the remainder.
      PairPoly term{Poly(f), Poly(f)};
      (lt.ydeg == 0 ? term.c0 : term.c1) = Poly::monomial(f, lc, lt.xdeg);
      out.remainder = out.remainder + term;
      rest = rest - term;
      continue;
    }
    const bool use_first = lt.ydeg == lt1.ydeg;
    const Elem c = f.div(lc, use_first ? lc1 : lc2);
    const Poly step = Poly::monomial(f, c, lt.xdeg - div_lt.xdeg);
    rest = rest - step * (use_first ? pair.h1 : pair.h2);
    (use_first ? out.f1 : out.f2) += step;
  }
  return out;
}

}  // namespace wulist
