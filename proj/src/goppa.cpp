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

#include "wulist/goppa.hpp"

#include <algorithm>
#include <cmath>
#include <exception>
#include <set>

#include "wulist/errors.hpp"
#include "wulist/polyring.hpp"
#include "wulist/ratinterp.hpp"
#include "wulist/rng.hpp"

namespace wulist {
namespace {

std::vector<Elem> to_vec(std::span<const Elem> r) { return {r.begin(), r.end()}; }

void check_binary(std::span<const Elem> r) {
  for (Elem v : r)
    if (v > 1) throw UsageError("binary word expected");
}

Poly hat(const PairPoly& h) {
  const Poly x = Poly::x(h.c0.field());
  return h.c0 * h.c0 + x * h.c1 * h.c1;
}

struct Decoder {
  const GoppaCode& code;
  std::vector<Elem> r;
  int tau;

  std::optional<Candidate> correct(Poly lambda, int max_deg) const {
    if (lambda.is_zero()) return std::nullopt;
    lambda = lambda.monic();
    const int deg = lambda.degree().value();
    if (deg > max_deg || deg > tau) return std::nullopt;
    Candidate c;
    c.codeword = r;
    for (std::size_t i = 0; i < code.support().size(); ++i) {
      if (lambda.eval(code.support()[i]) != 0) continue;
      c.codeword[i] ^= 1;
      c.error_positions.push_back(i);
      c.error_values.push_back(1);
    }
    if (static_cast<int>(c.error_positions.size()) != deg) return std::nullopt;
    if (!is_member(code, c.codeword)) return std::nullopt;
    return c;
  }
};

void add_unique(std::vector<Candidate>& out, Candidate c) {
  for (const auto& x : out)
    if (x.codeword == c.codeword) return;
  out.push_back(std::move(c));
}

}  // namespace

BitMatrix gf2_nullspace(const BitMatrix& in, std::size_t cols) {
  BitMatrix m = in;
  std::vector<std::size_t> pivots;
  std::size_t row = 0;
  for (std::size_t c = 0; c < cols && row < m.size(); ++c) {
    std::size_t p = row;
    while (p < m.size() && !m[p][c]) ++p;
    if (p == m.size()) continue;
    std::swap(m[p], m[row]);
    for (std::size_t i = 0; i < m.size(); ++i)
      if (i != row && m[i][c])
        for (std::size_t j = 0; j < cols; ++j) m[i][j] ^= m[row][j];
    pivots.push_back(c);
    ++row;
  }
  std::vector<char> is_pivot(cols, 0);
  for (auto c : pivots) is_pivot[c] = 1;
  BitMatrix basis;
  for (std::size_t free = 0; free < cols; ++free) {
    if (is_pivot[free]) continue;
    std::vector<std::uint8_t> v(cols, 0);
    v[free] = 1;
    for (std::size_t i = 0; i < pivots.size(); ++i) v[pivots[i]] = m[i][free];
    basis.push_back(std::move(v));
  }
  return basis;
}

GoppaCode::GoppaCode(FieldPtr field, Poly g, std::vector<Elem> support)
    : field_(std::move(field)), g_(std::move(g)), support_(std::move(support)) {
  if (!field_) throw UsageError("Goppa code needs a field");
  const Field& f = *field_;
  if (f.characteristic() != 2) throw UsageError("Goppa code needs characteristic 2");
  if (g_.field_ptr() != nullptr && !(g_.field() == f))
    throw UsageError("Goppa polynomial is over a different field");
  if (g_.degree() < 1) throw UsageError("Goppa polynomial needs degree >= 1");
  if (!is_irreducible(g_)) throw UsageError("Goppa polynomial is not irreducible");
  if (support_.empty()) throw UsageError("support is empty");
  std::set<Elem> seen;
  for (Elem a : support_) {
    f.check(a);
    if (!seen.insert(a).second) throw UsageError("support elements must be distinct");
    if (g_.eval(a) == 0) throw UsageError("Goppa polynomial vanishes on the support");
  }
  const Poly x = Poly::x(f);
  const int t = this->t();
  const int m = this->m();
  inv_.reserve(support_.size());
  for (Elem a : support_) inv_.push_back(mod_inverse(x - Poly::constant(f, a), g_));
  parity_.assign(static_cast<std::size_t>(m * t), std::vector<std::uint8_t>(support_.size(), 0));
  for (std::size_t i = 0; i < support_.size(); ++i)
    for (int j = 0; j < t; ++j) {
      const Elem c = inv_[i][static_cast<std::size_t>(j)];
      for (int b = 0; b < m; ++b)
        parity_[static_cast<std::size_t>(j * m + b)][i] = (c >> b) & 1;
    }
  generator_ = gf2_nullspace(parity_, support_.size());
}

std::vector<Elem> goppa_encode(const GoppaCode& code, std::span<const Elem> bits) {
  if (static_cast<int>(bits.size()) != code.k())
    throw UsageError("message length does not match k");
  check_binary(bits);
  std::vector<Elem> c(static_cast<std::size_t>(code.n()), 0);
  for (std::size_t i = 0; i < bits.size(); ++i)
    if (bits[i])
      for (std::size_t j = 0; j < c.size(); ++j) c[j] ^= code.generator()[i][j];
  return c;
}

Poly goppa_syndrome(const GoppaCode& code, std::span<const Elem> r) {
  if (static_cast<int>(r.size()) != code.n())
    throw UsageError("word length does not match n");
  check_binary(r);
  Poly s(code.field());
  for (std::size_t i = 0; i < r.size(); ++i)
    if (r[i]) s += code.inverse_terms()[i];
  return s;
}

bool is_member(const GoppaCode& code, std::span<const Elem> r) {
  return goppa_syndrome(code, r).is_zero();
}

PattersonReduction patterson_reduce(const GoppaCode& code, const Poly& S) {
  if (S.is_zero()) throw UsageError("zero syndrome has no reduction");
  const Field& f = code.field();
  const Poly& g = code.g();
  const Poly x = Poly::x(f) % g;
  PattersonReduction out;
  const Poly S_inv = mod_inverse(S, g);
  if (S_inv == x) {
    out.special = true;
    const auto& L = code.support();
    if (auto it = std::find(L.begin(), L.end(), Elem{0}); it != L.end())
      out.flip = static_cast<std::size_t>(it - L.begin());
    return out;
  }
  const Poly S_tilde = mod_sqrt_char2(x + S_inv, g);
  GrobnerPair pair = solve_key_equation(g, S_tilde, 1);
  Poly h1 = hat(pair.h1), h2 = hat(pair.h2);
  out.state = PattersonState{S, S_inv, S_tilde, std::move(pair), std::move(h1),
                             std::move(h2)};
  return out;
}

bool goppa_tau_admissible(int n, int t, int tau) {
  if (tau < 0) return false;
  const std::int64_t a = std::int64_t{n} - 2 * std::int64_t{tau};
  if (a <= 0) return false;
  const std::int64_t rad = std::int64_t{n} * (std::int64_t{n} - 4 * t - 2);
  return rad < 0 || a * a > rad;
}

int goppa_tau_max(int n, int t) {
  for (int tau = n - 1; tau >= 0; --tau)
    if (goppa_tau_admissible(n, t, tau)) return tau;
  return -1;
}

double goppa_radius(int n, int t) {
  const std::int64_t N = std::int64_t{n} * (n - 4 * std::int64_t{t} - 2);
  if (N < 0) return n / 2.0;
  return n_minus_sqrt(n, N) / 2;
}

bool goppa_params_valid(int n, int t, int tau, int s, int ell) {
  if (s < 1 || ell <= 2 * s) return false;
  return feasible(n, tau, s, ell, HalfInt::from_twice(2 * std::int64_t{tau} - 2 * t - 1));
}

ParamsReport goppa_params(const GoppaCode& code, int tau, int ell_max) {
  ParamsReport rep;
  rep.tau = tau;
  const int n = code.n(), t = code.t();
  rep.w_total = HalfInt::from_twice(2 * std::int64_t{tau} - 2 * t - 1);
  if (tau < 0 || tau >= n) {
    rep.reason = "radius out of range";
    return rep;
  }
  if (tau <= t) {
    rep.mode = ParamsMode::unique_only;
    return rep;
  }
  if (!goppa_tau_admissible(n, t, tau)) {
    rep.reason = "radius at or beyond n/2 - sqrt(n(n-4t-2))/2";
    return rep;
  }
  auto m = choose_params(n, tau, rep.w_total, ell_max, ListConstraint::ell_gt_2s);
  if (!m) {
    rep.reason = "no (s, ell) with ell <= " + std::to_string(ell_max);
    return rep;
  }
  rep.mode = ParamsMode::list;
  rep.s = m->s;
  rep.ell = m->ell;
  return rep;
}

DecodeOutput wu_decode_goppa(const GoppaCode& code, std::span<const Elem> r,
                             int tau, const DecodeOptions& opts) {
  if (static_cast<int>(r.size()) != code.n())
    throw UsageError("word length does not match n");
  check_binary(r);
  const int n = code.n(), t = code.t();

  DecodeOutput out;
  out.tau = tau;
  if (tau < 0) throw ParameterError("radius must be non-negative");
  const bool list_mode = tau > t;
  if (list_mode) {
    if (opts.forced) {
      if (!goppa_tau_admissible(n, t, tau) ||
          !goppa_params_valid(n, t, tau, opts.forced->s, opts.forced->ell))
        throw ParameterError("forced (s, ell) do not satisfy the parameter inequality");
      out.s = opts.forced->s;
      out.ell = opts.forced->ell;
    } else {
      const ParamsReport rep = goppa_params(code, tau, opts.ell_max);
      if (rep.mode != ParamsMode::list) throw ParameterError(rep.reason);
      out.s = rep.s;
      out.ell = rep.ell;
    }
  }

  Decoder dec{code, to_vec(r), tau};
  const Poly S = goppa_syndrome(code, r);
  if (S.is_zero()) {
    out.shortcut_word = dec.r;
    out.candidates.push_back({dec.r, {}, {}});
    return out;
  }
  const PattersonReduction red = patterson_reduce(code, S);
  if (red.special) {
    if (red.flip && tau >= 1) {
      Candidate c{dec.r, {*red.flip}, {1}};
      c.codeword[*red.flip] ^= 1;
      if (is_member(code, c.codeword)) {
        out.shortcut_word = c.codeword;
        out.candidates.push_back(std::move(c));
      }
    }
    return out;
  }
  const PattersonState& st = *red.state;

  // Short path; a word this close leaves no room for another within tau.
  const int short_bound = list_mode ? 2 * t - tau : tau;
  for (const Poly* h : {&st.hat_h1, &st.hat_h2})
    if (auto c = dec.correct(*h, short_bound)) {
      out.shortcut_word = c->codeword;
      out.candidates.push_back(std::move(*c));
      return out;
    }
  if (!list_mode) return out;

  out.path = DecodePath::list;
  const std::int64_t xd2 = st.pair.xdeg2();
  const HalfInt w1 = HalfInt::from_twice(tau - 2 * std::int64_t{t} + 2 * xd2);
  const HalfInt w2 = HalfInt::from_twice(tau - 1 - 2 * xd2);
  std::vector<Candidate> found;
  if (w1.floor() < 0 || w2.floor() < 0) {
    // One cofactor vanishes, so the locator is the other hat polynomial.
    if (w1.floor() >= 0)
      if (auto c = dec.correct(st.hat_h1, tau)) add_unique(found, std::move(*c));
    if (w2.floor() >= 0)
      if (auto c = dec.correct(st.hat_h2, tau)) add_unique(found, std::move(*c));
  } else {
    const Field& f = code.field();
    std::vector<InterpPoint> pts(static_cast<std::size_t>(n));
    for (std::size_t i = 0; i < pts.size(); ++i) {
      const Elem a = code.support()[i];
      pts[i] = {a, f.sqrt(st.hat_h1.eval(a)), f.sqrt(st.hat_h2.eval(a))};
      if (pts[i].y == 0 && pts[i].z == 0)
        throw InternalError("hat polynomials vanish together on the support");
    }
    const RatParams params{n, tau, out.s, out.ell, w1, w2};
    const HomogPoly Q = interpolate(pts, params, f);
    for (const LinearFactor& fac : find_linear_factors(Q, w1, w2)) {
      const Poly lambda = fac.f1 * fac.f1 * st.hat_h1 + fac.f2 * fac.f2 * st.hat_h2;
      if (auto c = dec.correct(lambda, tau)) add_unique(found, std::move(*c));
    }
  }
  std::sort(found.begin(), found.end(),
            [](const Candidate& a, const Candidate& b) { return a.codeword < b.codeword; });
  out.candidates = std::move(found);
  return out;
}

std::vector<DecodeOutput> decode_batch(const GoppaCode& code,
                                       const std::vector<std::vector<Elem>>& words,
                                       int tau, const DecodeOptions& opts,
                                       kernels::Exec exec) {
  std::vector<DecodeOutput> out(words.size());
  std::vector<std::exception_ptr> errs(words.size());
  const auto n = static_cast<std::ptrdiff_t>(words.size());
  auto one = [&](std::ptrdiff_t i) {
    const auto u = static_cast<std::size_t>(i);
    try {
      out[u] = wu_decode_goppa(code, words[u], tau, opts);
    } catch (...) {
      errs[u] = std::current_exception();
    }
  };
  if (exec == kernels::Exec::serial) {
    for (std::ptrdiff_t i = 0; i < n; ++i) one(i);
  } else {
#pragma omp parallel for schedule(dynamic)
    for (std::ptrdiff_t i = 0; i < n; ++i) one(i);
  }
  for (auto& e : errs)
    if (e) std::rethrow_exception(e);
  return out;
}

Poly random_goppa_poly(const Field& f, int t, std::uint64_t seed) {
  if (t < 1) throw UsageError("Goppa polynomial needs degree >= 1");
  Xorshift64Star rng(seed);
  for (;;) {
    std::vector<Elem> c(static_cast<std::size_t>(t + 1));
    for (int i = 0; i < t; ++i) c[static_cast<std::size_t>(i)] = static_cast<Elem>(rng.below(f.order()));
    c.back() = 1;
    Poly g(f, std::move(c));
    if (is_irreducible(g)) return g;
  }
}

}  // namespace wulist
