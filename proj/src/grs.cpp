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

#include "wulist/grs.hpp"

#include <algorithm>
#include <cmath>
#include <exception>
#include <set>

#include "wulist/errors.hpp"
#include "wulist/keyeq.hpp"
#include "wulist/polyring.hpp"
#include "wulist/ratinterp.hpp"

namespace wulist {
namespace {

HalfInt grs_w_total(int d, int tau) { return HalfInt(2 * tau - d); }

std::vector<Elem> to_vec(std::span<const Elem> r) { return {r.begin(), r.end()}; }

struct Decoder {
  const GrsCode& code;
  std::vector<Elem> r;
  Poly S;
  int tau;

  // Corrects r with the locator lambda. Empty when lambda is not a valid
  // locator of degree <= max_deg or the result is not a codeword within tau.
  std::optional<Candidate> correct(Poly lambda, int max_deg) const {
    if (lambda.is_zero()) return std::nullopt;
    lambda = lambda.monic();
    const int deg = lambda.degree().value();
    if (deg > max_deg || deg > tau) return std::nullopt;
    int roots = 0;
    for (Elem a : code.alphas()) roots += lambda.eval(a) == 0;
    if (roots != deg) return std::nullopt;
    const Poly omega = (lambda * S).truncated(static_cast<std::size_t>(code.d() - 1));
    const auto errs = error_values(code, lambda, omega);
    const Field& f = code.field();
    Candidate c;
    c.codeword = r;
    for (const auto& [pos, e] : errs) c.codeword[pos] = f.sub(r[pos], e);
    if (!is_codeword(code, c.codeword)) return std::nullopt;
    for (std::size_t i = 0; i < r.size(); ++i) {
      if (r[i] == c.codeword[i]) continue;
      c.error_positions.push_back(i);
      c.error_values.push_back(f.sub(r[i], c.codeword[i]));
    }
    if (static_cast<int>(c.error_positions.size()) > tau) return std::nullopt;
    return c;
  }
};

void add_unique(std::vector<Candidate>& out, Candidate c) {
  for (const auto& x : out)
    if (x.codeword == c.codeword) return;
  out.push_back(std::move(c));
}

}  // namespace

GrsCode::GrsCode(FieldPtr field, int k, std::vector<Elem> alphas,
                 std::vector<Elem> mults)
    : field_(std::move(field)), k_(k), alphas_(std::move(alphas)),
      mults_(std::move(mults)) {
  if (!field_) throw UsageError("GRS code needs a field");
  const Field& f = *field_;
  const auto n = alphas_.size();
  if (mults_.size() != n) throw UsageError("need one multiplier per position");
  if (k_ < 1 || static_cast<std::size_t>(k_) >= n)
    throw UsageError("GRS code needs 1 <= k < n");
  if (n > f.order() - 1) throw UsageError("GRS code needs n <= q - 1");
  std::set<Elem> seen;
  for (Elem a : alphas_) {
    f.check(a);
    if (a == 0) throw UsageError("evaluation points must be nonzero");
    if (!seen.insert(a).second) throw UsageError("evaluation points must be distinct");
  }
  for (Elem v : mults_) {
    f.check(v);
    if (v == 0) throw UsageError("column multipliers must be nonzero");
  }
  hat_v_.resize(n);
  for (std::size_t j = 0; j < n; ++j) {
    Elem prod = mults_[j];
    for (std::size_t h = 0; h < n; ++h)
      if (h != j) prod = f.mul(prod, f.sub(alphas_[j], alphas_[h]));
    hat_v_[j] = f.inv(prod);
  }
}

GrsCode GrsCode::standard(FieldPtr field, int n, int k) {
  if (n < 1 || static_cast<std::uint64_t>(n) >= field->order())
    throw UsageError("GRS code needs n <= q - 1");
  std::vector<Elem> alphas(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) alphas[static_cast<std::size_t>(i)] = static_cast<Elem>(i + 1);
  std::vector<Elem> mults(alphas.size(), 1);
  return GrsCode(std::move(field), k, std::move(alphas), std::move(mults));
}

std::vector<Elem> encode(const GrsCode& code, const Poly& message) {
  if (message.degree() >= code.k())
    throw UsageError("message degree must be below k");
  const Field& f = code.field();
  std::vector<Elem> c(static_cast<std::size_t>(code.n()));
  for (std::size_t i = 0; i < c.size(); ++i)
    c[i] = f.mul(code.mults()[i], message.eval(code.alphas()[i]));
  return c;
}

Poly message_of(const GrsCode& code, std::span<const Elem> codeword) {
  if (static_cast<int>(codeword.size()) != code.n())
    throw UsageError("word length does not match n");
  const Field& f = code.field();
  const auto k = static_cast<std::size_t>(code.k());
  std::vector<Elem> xs(code.alphas().begin(), code.alphas().begin() + k);
  std::vector<Elem> ys(k);
  for (std::size_t i = 0; i < k; ++i) ys[i] = f.div(codeword[i], code.mults()[i]);
  Poly m = lagrange(xs, ys, f);
  if (encode(code, m) != to_vec(codeword)) throw UsageError("word is not a codeword");
  return m;
}

Poly syndrome(const GrsCode& code, std::span<const Elem> r) {
  if (static_cast<int>(r.size()) != code.n())
    throw UsageError("word length does not match n");
  const Field& f = code.field();
  const int len = code.d() - 1;
  std::vector<Elem> s(static_cast<std::size_t>(len), 0);
  for (std::size_t j = 0; j < r.size(); ++j) {
    if (r[j] == 0) continue;
    Elem t = f.mul(r[j], code.hat_v()[j]);
    // x^(len-1-e) collects alpha_j^e
    for (int e = 0; e < len; ++e) {
      auto& slot = s[static_cast<std::size_t>(len - 1 - e)];
      slot = f.add(slot, t);
      t = f.mul(t, code.alphas()[j]);
    }
  }
  return Poly(f, std::move(s));
}

bool is_codeword(const GrsCode& code, std::span<const Elem> r) {
  return syndrome(code, r).is_zero();
}

std::map<std::size_t, Elem> error_values(const GrsCode& code, const Poly& Lambda,
                                         const Poly& Omega) {
  if (Lambda.is_zero()) throw UsageError("error locator is zero");
  const Field& f = code.field();
  const Poly dL = Lambda.derivative();
  std::map<std::size_t, Elem> out;
  for (std::size_t i = 0; i < code.alphas().size(); ++i) {
    const Elem a = code.alphas()[i];
    if (Lambda.eval(a) != 0) continue;
    const Elem da = dL.eval(a);
    if (da == 0) throw ArithmeticError("error locator has a repeated root");
    const Elem den = f.mul(f.mul(f.pow(a, static_cast<std::uint64_t>(code.d() - 1)),
                                 code.hat_v()[i]),
                           da);
    out[i] = f.neg(f.div(Omega.eval(a), den));
  }
  return out;
}

bool grs_tau_admissible(int n, int d, int tau) {
  if (tau < 0) return false;
  const std::int64_t a = std::int64_t{n} - tau;
  return a > 0 && a * a > std::int64_t{n} * (n - d);
}

int grs_tau_max(int n, int d) {
  for (int tau = n - 1; tau >= 0; --tau)
    if (grs_tau_admissible(n, d, tau)) return tau;
  return -1;
}

double grs_radius(int n, int d) {
  return n_minus_sqrt(n, std::int64_t{n} * (n - d));
}

bool grs_params_valid(int n, int d, int tau, int s, int ell) {
  if (s < 1 || ell < s) return false;
  return feasible(n, tau, s, ell, grs_w_total(d, tau));
}

bool gsa_params_valid(int n, int d, int tau, int s_gsa, int ell) {
  if (s_gsa < 1 || ell < 1) return false;
  // More monomials of (1, k-1)-weighted degree < s_G (n - tau) and y-degree
  // <= ell than multiplicity conditions at n points.
  const std::int64_t N = n, L = ell, sg = s_gsa, T = tau, k1 = n - d;
  return 2 * T * (L + 1) * sg < 2 * N * (L + 1) * sg - N * sg * (sg + 1) - k1 * L * (L + 1);
}

ParamsReport grs_params(const GrsCode& code, int tau, int ell_max) {
  ParamsReport rep;
  rep.tau = tau;
  const int n = code.n(), d = code.d();
  rep.w_total = grs_w_total(d, tau);
  if (tau < 0 || tau >= n) {
    rep.reason = "radius out of range";
    return rep;
  }
  if (2 * tau < d) {
    rep.mode = ParamsMode::unique_only;
    return rep;
  }
  if (!grs_tau_admissible(n, d, tau)) {
    rep.reason = "radius at or beyond n - sqrt(n(n-d))";
    return rep;
  }
  auto m = choose_params(n, tau, rep.w_total, ell_max, ListConstraint::ell_ge_s);
  if (!m) {
    rep.reason = "no (s, ell) with ell <= " + std::to_string(ell_max);
    return rep;
  }
  rep.mode = ParamsMode::list;
  rep.s = m->s;
  rep.ell = m->ell;
  return rep;
}

DecodeOutput wu_decode(const GrsCode& code, std::span<const Elem> r, int tau,
                       const DecodeOptions& opts) {
  if (static_cast<int>(r.size()) != code.n())
    throw UsageError("word length does not match n");
  for (Elem v : r) code.field().check(v);
  const int n = code.n(), d = code.d();

  DecodeOutput out;
  out.tau = tau;
  const ParamsReport rep = grs_params(code, tau, opts.ell_max);
  const bool list_mode = 2 * tau >= d;
  if (list_mode) {
    if (opts.forced) {
      if (!grs_params_valid(n, d, tau, opts.forced->s, opts.forced->ell))
        throw ParameterError("forced (s, ell) do not satisfy the parameter inequality");
      out.s = opts.forced->s;
      out.ell = opts.forced->ell;
    } else {
      if (rep.mode != ParamsMode::list) throw ParameterError(rep.reason);
      out.s = rep.s;
      out.ell = rep.ell;
    }
  } else if (tau < 0) {
    throw ParameterError("radius must be non-negative");
  }

  Decoder dec{code, to_vec(r), syndrome(code, r), tau};
  if (dec.S.is_zero()) {
    out.shortcut_word = dec.r;
    out.candidates.push_back({dec.r, {}, {}});
    return out;
  }
  const Field& f = code.field();
  const GrobnerPair pair =
      solve_key_equation(Poly::monomial(f, 1, static_cast<std::size_t>(d - 1)), dec.S, 0);
  const Poly th1 = -pair.h1.c1;
  const Poly th2 = -pair.h2.c1;

  // Short path: h2 alone.
  if (auto c = dec.correct(th2, list_mode ? d - tau : tau)) {
    out.shortcut_word = c->codeword;
    const int eps = static_cast<int>(c->error_positions.size());
    out.candidates.push_back(std::move(*c));
    // Every other codeword is at distance >= d - eps from r.
    if (!list_mode || eps + tau < d) return out;
  }
  if (!list_mode) return out;

  out.path = DecodePath::list;
  const int xd2 = pair.xdeg2();
  const int w1 = tau - d + xd2;
  const int w2 = tau - xd2;
  std::vector<Candidate> found = std::move(out.candidates);
  out.candidates.clear();
  if (w2 >= 0 && w1 < 0) {
    // f1 = 0: the locator is h2 itself, now up to degree tau.
    if (auto c = dec.correct(th2, tau)) add_unique(found, std::move(*c));
  } else if (w2 >= 0) {
    std::vector<InterpPoint> pts(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) {
      const Elem a = code.alphas()[static_cast<std::size_t>(i)];
      pts[static_cast<std::size_t>(i)] = {a, th1.eval(a), th2.eval(a)};
      if (pts[static_cast<std::size_t>(i)].y == 0 && pts[static_cast<std::size_t>(i)].z == 0)
        throw InternalError("pair cofactors vanish together at an evaluation point");
    }
    const RatParams params{n, tau, out.s, out.ell, HalfInt(w1), HalfInt(w2)};
    const HomogPoly Q = interpolate(pts, params, f);
    for (const LinearFactor& fac : find_linear_factors(Q, params.w1, params.w2))
      if (auto c = dec.correct(fac.f1 * th1 + fac.f2 * th2, tau))
        add_unique(found, std::move(*c));
  }
  std::sort(found.begin(), found.end(),
            [](const Candidate& a, const Candidate& b) { return a.codeword < b.codeword; });
  out.candidates = std::move(found);
  return out;
}

std::vector<DecodeOutput> decode_batch(const GrsCode& code,
                                       const std::vector<std::vector<Elem>>& words,
                                       int tau, const DecodeOptions& opts,
                                       kernels::Exec exec) {
  std::vector<DecodeOutput> out(words.size());
  std::vector<std::exception_ptr> errs(words.size());
  const auto n = static_cast<std::ptrdiff_t>(words.size());
  auto one = [&](std::ptrdiff_t i) {
    try {
      out[static_cast<std::size_t>(i)] = wu_decode(code, words[static_cast<std::size_t>(i)], tau, opts);
    } catch (...) {
      errs[static_cast<std::size_t>(i)] = std::current_exception();
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

}  // namespace wulist
