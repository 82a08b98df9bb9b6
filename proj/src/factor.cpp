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

#include <algorithm>

#include "ratinterp_detail.hpp"
#include "wulist/errors.hpp"
#include "wulist/polyring.hpp"
#include "wulist/ratinterp.hpp"

namespace wulist {
namespace {

// Divides every coefficient by the largest common power of x.
void strip_x(std::vector<Poly>& c) {
  std::size_t m = SIZE_MAX;
  for (const Poly& p : c) {
    if (p.is_zero()) continue;
    std::size_t low = 0;
    while (p[low] == 0) ++low;
    m = std::min(m, low);
  }
  if (m == SIZE_MAX || m == 0) return;
  for (Poly& p : c) p = p.shifted_down(m);
}

void rr(std::vector<Poly> c, int depth, std::vector<Elem>& prefix,
        const std::vector<Elem>& elements, const Field& f,
        std::vector<std::vector<Elem>>& out) {
  if (static_cast<int>(prefix.size()) == depth) {
    out.push_back(prefix);
    return;
  }
  strip_x(c);
  std::vector<Elem> at0(c.size());
  for (std::size_t i = 0; i < c.size(); ++i) at0[i] = c[i][0];
  const Poly u(f, at0);
  if (u.degree() < 1) return;
  for (Elem g : roots_among(u, elements)) {
    // c(x, x W + g)
    std::vector<Poly> next = detail::shift_variable(c, g, f);
    for (std::size_t b = 0; b < next.size(); ++b) next[b] = next[b].shifted(b);
    prefix.push_back(g);
    rr(std::move(next), depth, prefix, elements, f, out);
    prefix.pop_back();
  }
}

int floor_nonneg(HalfInt w) { return static_cast<int>(std::max<std::int64_t>(w.floor(), 0)); }

bool within(const Poly& p, HalfInt w) {
  return p.is_zero() || p.degree().value() <= w.floor();
}

std::optional<LinearFactor> normalise(Poly f1, Poly f2) {
  const Field& f = f1.field_ptr() ? f1.field() : f2.field();
  if (f1.is_zero() && f2.is_zero()) return std::nullopt;
  if (!gcd(f1, f2).is_one()) return std::nullopt;
  const Elem k = f.inv(f1.is_zero() ? f2.lead() : f1.lead());
  return LinearFactor{f1.scaled(k), f2.scaled(k)};
}

}  // namespace

std::vector<std::vector<Elem>> series_roots(const std::vector<Poly>& bivariate,
                                            int depth, const Field& f) {
  std::vector<std::vector<Elem>> out;
  if (std::all_of(bivariate.begin(), bivariate.end(),
                  [](const Poly& p) { return p.is_zero(); }))
    throw UsageError("series roots of the zero polynomial");
  std::vector<Elem> prefix;
  const std::vector<Elem> elements = f.elements();
  std::vector<Poly> c = bivariate;
  for (Poly& p : c)
    if (p.field_ptr() == nullptr) p = Poly(f);
  rr(std::move(c), depth, prefix, elements, f, out);
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::optional<std::pair<Poly, Poly>> pade(const Poly& series, int n,
                                          int num_bound, int den_bound) {
  const Field& f = series.field();
  if (n < 1 || num_bound < 0 || den_bound < 0)
    throw UsageError("pade: bounds must be non-negative and n positive");
  const Poly xn = Poly::monomial(f, 1, static_cast<std::size_t>(n));
  const Poly phi = series.truncated(static_cast<std::size_t>(n));
  const EATrace t = ea_full(xn, phi);
  for (std::size_t i = 1; i < t.rows.size(); ++i) {
    const EARow& row = t.rows[i];
    if (row.s.degree() > num_bound) continue;
    const Poly g = gcd(row.s, row.v);
    Poly num = row.s / g, den = row.v / g;
    if (den.is_zero() || den[0] == 0 || den.degree() > den_bound) return std::nullopt;
    if ((den * phi).truncated(static_cast<std::size_t>(n)) != num) return std::nullopt;
    const Elem k = f.inv(den[0]);
    return std::pair{num.scaled(k), den.scaled(k)};
  }
  return std::nullopt;
}

bool divides(const LinearFactor& fac, const HomogPoly& Q) {
  return Q.substitute(-fac.f2, fac.f1).is_zero();
}

bool factor_less(const LinearFactor& a, const LinearFactor& b) {
  if (a.f1.coeffs() != b.f1.coeffs()) return a.f1.coeffs() < b.f1.coeffs();
  return a.f2.coeffs() < b.f2.coeffs();
}

std::vector<LinearFactor> find_linear_factors(const HomogPoly& Q, HalfInt w1,
                                              HalfInt w2) {
  if (Q.is_zero()) throw UsageError("factoring the zero form");
  const Field& f = Q.field();
  const int ell = Q.ell();
  const int W1 = floor_nonneg(w1), W2 = floor_nonneg(w2);
  const int N = W1 + W2 + 1;
  std::vector<LinearFactor> found;
  auto consider = [&](Poly f1, Poly f2) {
    if (!within(f1, w1) || !within(f2, w2)) return;
    auto fac = normalise(std::move(f1), std::move(f2));
    if (fac && divides(*fac, Q)) found.push_back(std::move(*fac));
  };

  // Chart z = 1: roots Y = -f2/f1 with f1(0) != 0.
  std::vector<Poly> yc(static_cast<std::size_t>(ell + 1));
  for (int i = 0; i <= ell; ++i) yc[static_cast<std::size_t>(i)] = Q[i];
  for (const auto& root : series_roots(yc, N, f))
    if (auto pq = pade(Poly(f, root), N, W2, W1)) consider(pq->second, -pq->first);

  // Chart y = 1: roots Z = -f1/f2 with f2(0) != 0.
  std::vector<Poly> zc(static_cast<std::size_t>(ell + 1));
  for (int i = 0; i <= ell; ++i) zc[static_cast<std::size_t>(ell - i)] = Q[i];
  for (const auto& root : series_roots(zc, N, f))
    if (auto pq = pade(Poly(f, root), N, W1, W2)) consider(-pq->first, pq->second);

  std::sort(found.begin(), found.end(), factor_less);
  found.erase(std::unique(found.begin(), found.end()), found.end());
  return found;
}

}  // namespace wulist
