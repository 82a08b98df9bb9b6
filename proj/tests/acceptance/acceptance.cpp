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

// One PASS/FAIL line per acceptance criterion. Exit status is the number of
// failures.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <functional>
#include <iostream>
#include <random>
#include <string>

#include "test_util.hpp"
#include "wulist/goppa.hpp"
#include "wulist/grs.hpp"
#include "wulist/keyeq.hpp"
#include "wulist/oracles.hpp"

using namespace wulist;
using wulist::testing::random_points;
using wulist::testing::random_poly;

namespace {

struct Verdict {
  bool pass = true;
  std::string detail;
};

using Words = std::vector<std::vector<Elem>>;

Words words_of(const DecodeOutput& out) {
  Words w;
  for (const auto& c : out.candidates) w.push_back(c.codeword);
  return w;
}

// 1 -----------------------------------------------------------------------

Verdict ea_suite() {
  std::mt19937 rng(1001);
  int runs = 0, bad = 0;
  for (auto f : {Field::make(13, 1), Field::make(2, 3)}) {
    for (int it = 0; it < 300; ++it) {
      const int dp = 1 + static_cast<int>(rng() % 30);
      const Poly p = random_poly(*f, dp, rng, true);
      const Poly q = random_poly(*f, static_cast<int>(rng() % dp), rng);
      const int mu = static_cast<int>(rng() % 5);
      const EATrace tr = ea_full(p, q);
      bool ok = wulist::testing::ea_invariants_hold(tr);
      const GrobnerPair g = solve_key_equation(tr, mu);
      ok = ok && is_groebner_pair(g.h1, g.h2, p, q, g.order);
      ok = ok && g.xdeg1() + g.xdeg2() == dp;
      for (std::size_t i = 1; i < g.stop_index; ++i)
        ok = ok && !(tr.rows[i].s.degree() < tr.rows[i].v.degree() + mu);
      const EARow& stop = tr.rows[g.stop_index];
      ok = ok && stop.s.degree() < stop.v.degree() + mu;
      bad += !ok;
      ++runs;
    }
  }
  return {bad == 0, std::to_string(runs) + " (p, q, mu) triples, " + std::to_string(bad) +
                        " violations"};
}

// 2 -----------------------------------------------------------------------

Verdict basis_suite() {
  std::mt19937 rng(1002);
  int sets = 0, bad = 0;
  for (auto f : {Field::make(13, 1), Field::make(2, 4)}) {
    for (int it = 0; it < 60; ++it) {
      const int n = 1 + static_cast<int>(rng() % 10);
      const int ell = 1 + static_cast<int>(rng() % 6);
      const int s = 1 + static_cast<int>(rng() % std::min(ell, 3));
      RatParams p{n, 0, s, ell, HalfInt::from_twice(rng() % 5), HalfInt::from_twice(rng() % 5)};
      while (!feasible(p)) ++p.tau;
      const auto pts = normalize_points(random_points(*f, static_cast<std::size_t>(n), rng), *f);
      bool ok = true;

      auto [ctx, basis] = build_basis(pts, s, ell, *f);
      for (const auto& b : basis)
        for (const auto& pt : pts) ok = ok && check_multiplicity(b, pt, s);

      // Divisibility of naive solutions: g_z^(j - (ell - s)) | Q_j.
      const auto naive = naive_interpolate(pts, p, *f);
      ok = ok && naive.has_value();
      if (naive) {
        for (const auto& pt : pts) ok = ok && check_multiplicity(*naive, pt, s);
        for (int j = ell - s + 1; j <= ell; ++j) {
          Poly gz = Poly::constant(*f, 1);
          for (int k = 0; k < j - (ell - s); ++k) gz *= ctx.g_z;
          ok = ok && ((*naive)[j] % gz).is_zero();
        }
      }

      const HomogPoly Q = interpolate(pts, p, *f);
      for (const auto& pt : pts) ok = ok && check_multiplicity(Q, pt, s);
      const auto [best, witness] = naive_min_interpolant(pts, p, *f);
      ok = ok && Q.wdeg_twice(p.w1, p.w2) <= best;
      bad += !ok;
      ++sets;
    }
  }
  return {bad == 0, std::to_string(sets) + " point sets, " + std::to_string(bad) + " violations"};
}

// 3 -----------------------------------------------------------------------

Verdict factor_suite() {
  std::mt19937 rng(1003);
  int planted = 0, missed = 0, compared = 0, disagree = 0;
  for (auto f : {Field::make(5, 1), Field::make(13, 1)}) {
    while (planted < (f->order() == 5 ? 120 : 240)) {
      const int w1 = static_cast<int>(rng() % 3), w2 = static_cast<int>(rng() % 3);
      const Poly f1 = random_poly(*f, w1, rng), f2 = random_poly(*f, w2, rng);
      if ((f1.is_zero() && f2.is_zero()) || !gcd(f1, f2).is_one()) continue;
      const int ell = 1 + static_cast<int>(rng() % 3);
      HomogPoly cof(*f, ell - 1);
      for (int i = 0; i < ell; ++i) cof[i] = random_poly(*f, 2, rng);
      if (cof.is_zero()) continue;
      const HomogPoly Q = HomogPoly(1, {f2, f1}) * cof;
      const auto facs = find_linear_factors(Q, HalfInt(w1), HalfInt(w2));
      const Elem k = f->inv(f1.is_zero() ? f2.lead() : f1.lead());
      const LinearFactor want{f1.scaled(k), f2.scaled(k)};
      missed += std::find(facs.begin(), facs.end(), want) == facs.end();
      ++planted;
      if (f->order() == 5 && w1 + w2 <= 4) {
        disagree += facs != exhaustive_factor_search(Q, HalfInt(w1), HalfInt(w2), 1 << 20,
                                                     kernels::Exec::parallel);
        ++compared;
      }
    }
  }
  return {missed == 0 && disagree == 0 && compared > 0,
          std::to_string(planted) + " planted, " + std::to_string(missed) + " missed; " +
              std::to_string(compared) + " GF(5) forms vs exhaustive, " +
              std::to_string(disagree) + " disagreements"};
}

// 4 -----------------------------------------------------------------------

Verdict grs_suite() {
  const GrsCode code = GrsCode::standard(Field::make(13, 1), 12, 3);
  const Field& f = code.field();
  const CodebookOracle book(code);
  const ParamsReport rep = grs_params(code, 6);
  if (rep.s != 2 || rep.ell != 4) return {false, "params at tau = 6 are not (s, ell) = (2, 4)"};
  std::mt19937 rng(1004);
  int ball_bad = 0, unique_bad = 0, total = 0;
  for (int w = 0; w <= 6; ++w) {
    Words sent, recv;
    for (int i = 0; i < 200; ++i) {
      auto c = encode(code, random_poly(f, 2, rng));
      auto r = c;
      std::vector<std::size_t> idx(12);
      for (std::size_t j = 0; j < 12; ++j) idx[j] = j;
      std::shuffle(idx.begin(), idx.end(), rng);
      for (int e = 0; e < w; ++e)
        r[idx[e]] = f.add(r[idx[e]], 1 + static_cast<Elem>(rng() % 12));
      sent.push_back(std::move(c));
      recv.push_back(std::move(r));
    }
    const auto outs = decode_batch(code, recv, 6, {}, kernels::Exec::parallel);
    for (std::size_t i = 0; i < outs.size(); ++i) {
      ball_bad += words_of(outs[i]) != book.list_within(recv[i], 6);
      if (w <= 4) unique_bad += !outs[i].shortcut_word || *outs[i].shortcut_word != sent[i];
      ++total;
    }
  }
  return {ball_bad == 0 && unique_bad == 0,
          std::to_string(total) + " words, " + std::to_string(ball_bad) +
              " ball mismatches, " + std::to_string(unique_bad) + " short-path misses at w <= 4"};
}

// 5 -----------------------------------------------------------------------

Verdict duality_suite() {
  long long checks = 0, mismatch = 0, order_checks = 0, order_bad = 0;
  for (int n = 8; n <= 64; ++n)
    for (int d = 3; d <= n - 1; ++d)
      for (int tau = (d + 1) / 2; tau <= n - 1; ++tau)
        for (int ell = 2; ell <= 16; ++ell) {
          int s_min = 0, sg_min = 0;
          for (int s = 1; s < ell; ++s) {
            const bool wu = grs_params_valid(n, d, tau, s, ell);
            const bool gsa = gsa_params_valid(n, d, tau, ell - s, ell);
            mismatch += wu != gsa;
            ++checks;
            if (wu && !s_min) s_min = s;
            if (gsa_params_valid(n, d, tau, s, ell) && !sg_min) sg_min = s;
          }
          if (s_min && sg_min) {
            ++order_checks;
            order_bad += 2 * tau < n ? s_min > sg_min : s_min < sg_min;
          }
        }
  return {mismatch == 0 && order_bad == 0,
          std::to_string(checks) + " (n, d, tau, ell, s) verdicts, " + std::to_string(mismatch) +
              " disagreements; " + std::to_string(order_checks) + " minimal-s comparisons, " +
              std::to_string(order_bad) + " out of order"};
}

// 6, 7 --------------------------------------------------------------------

GoppaCode goppa_code(int m, int t, int n, std::uint64_t seed) {
  auto f = Field::make(2, static_cast<std::uint32_t>(m));
  std::vector<Elem> sup(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) sup[static_cast<std::size_t>(i)] = static_cast<Elem>(i);
  return GoppaCode(f, random_goppa_poly(*f, t, seed), sup);
}

std::pair<Words, Words> goppa_traffic(const GoppaCode& code, int count, int wmin, int wmax,
                                      std::mt19937& rng) {
  Words sent, recv;
  for (int i = 0; i < count; ++i) {
    std::vector<Elem> bits(static_cast<std::size_t>(code.k()));
    for (auto& b : bits) b = rng() & 1;
    auto c = goppa_encode(code, bits);
    auto r = c;
    std::vector<std::size_t> idx(c.size());
    for (std::size_t j = 0; j < idx.size(); ++j) idx[j] = j;
    std::shuffle(idx.begin(), idx.end(), rng);
    const int w = wmin + i % (wmax - wmin + 1);
    for (int e = 0; e < w; ++e) r[idx[e]] ^= 1;
    sent.push_back(std::move(c));
    recv.push_back(std::move(r));
  }
  return {sent, recv};
}

Verdict patterson_suite() {
  const GoppaCode code = goppa_code(5, 3, 32, 1);
  const CodebookOracle book(code);
  std::mt19937 rng(1006);
  auto [sent, recv] = goppa_traffic(code, 500, 0, 3, rng);
  const auto outs = decode_batch(code, recv, 3, {}, kernels::Exec::parallel);
  int bad = 0, not_unique = 0;
  for (std::size_t i = 0; i < outs.size(); ++i) {
    bad += words_of(outs[i]) != Words{sent[i]};
    not_unique += book.list_within(recv[i], 3, kernels::Exec::parallel) != Words{sent[i]};
  }
  return {bad == 0 && not_unique == 0,
          "k = " + std::to_string(code.k()) + ", 500 words, " + std::to_string(bad) +
              " wrong, " + std::to_string(not_unique) + " balls not a single word"};
}

Verdict beyond_patterson_suite() {
  const GoppaCode code = goppa_code(6, 6, 64, 1);
  const ParamsReport rep = goppa_params(code, 7);
  if (rep.s != 2 || rep.ell != 21) return {false, "params at tau = 7 are not (s, ell) = (2, 21)"};
  std::mt19937 rng(1007);
  auto [sent, recv] = goppa_traffic(code, 60, 7, 7, rng);
  const auto outs = decode_batch(code, recv, 7, {}, kernels::Exec::parallel);
  int missing = 0, invalid = 0, extra = 0;
  for (std::size_t i = 0; i < outs.size(); ++i) {
    const auto w = words_of(outs[i]);
    missing += std::find(w.begin(), w.end(), sent[i]) == w.end();
    extra += w.size() > 1;
    for (const auto& c : w) invalid += !is_member(code, c) || hamming(c, recv[i]) > 7;
  }
  const bool oracle = CodebookOracle::size_of(code) <= kDefaultCodebookCap;
  return {missing == 0 && invalid == 0,
          "k = " + std::to_string(code.k()) + ", 60 words of weight 7, " +
              std::to_string(missing) + " missing, " + std::to_string(invalid) + " invalid, " +
              std::to_string(extra) + " lists longer than one; " +
              (oracle ? "ball checked" : "2^k over the codebook cap, containment and validity only")};
}

// 8 -----------------------------------------------------------------------

using u128 = unsigned __int128;

std::uint64_t isqrt(std::uint64_t v) {
  auto r = static_cast<std::uint64_t>(std::sqrt(static_cast<long double>(v)));
  while (r * r > v) --r;
  while ((r + 1) * (r + 1) <= v) ++r;
  return r;
}

// Sign of (A - sqrt(N)) / B - m for the dyadic m, in exact integers.
int compare_exact(std::int64_t A, std::int64_t B, std::uint64_t N, long double m) {
  int e = 0;
  long double frac = std::frexp(m, &e);  // m = frac 2^e, frac in [0.5, 1)
  auto K = static_cast<std::int64_t>(std::ldexp(frac, 62));
  int E = 62 - e;  // m = K 2^-E
  while (K % 2 == 0 && E > 0) K /= 2, --E;  // keeps Y^2 inside 128 bits
  // X = A - B m = (A 2^E - B K) 2^-E; compare X with sqrt(N).
  const __int128 Y = (static_cast<__int128>(A) << E) - static_cast<__int128>(B) * K;
  if (Y < 0) return -1;
  const u128 lhs = static_cast<u128>(Y) * static_cast<u128>(Y);
  const u128 rhs = static_cast<u128>(N) << (2 * E);
  return lhs > rhs ? 1 : (lhs < rhs ? -1 : 0);
}

// |r - (A - sqrt N) / B| <= ulp(r) / 2, decided exactly.
bool within_half_ulp(double r, std::int64_t A, std::int64_t B, std::uint64_t N) {
  const long double lo = (static_cast<long double>(r) + std::nextafter(r, -INFINITY)) / 2;
  const long double hi = (static_cast<long double>(r) + std::nextafter(r, INFINITY)) / 2;
  return compare_exact(A, B, N, lo) >= 0 && compare_exact(A, B, N, hi) <= 0;
}

Verdict radius_suite() {
  long long checked = 0, round_bad = 0, cut_bad = 0, naive_off = 0;
  for (int n = 2; n <= 256; ++n) {
    for (int d = 1; d <= n; ++d) {
      const auto N = static_cast<std::uint64_t>(n) * static_cast<std::uint64_t>(n - d);
      const double r = grs_radius(n, d);
      round_bad += !within_half_ulp(r, n, 1, N);
      naive_off += r != n - std::sqrt(static_cast<double>(N));
      const int tmax = n - static_cast<int>(isqrt(N)) - 1;
      cut_bad += grs_tau_max(n, d) != tmax;
      for (int tau = 0; tau <= n; ++tau) cut_bad += grs_tau_admissible(n, d, tau) != (tau <= tmax);
      ++checked;
    }
    for (int t = 1; 4 * t + 2 <= n; ++t) {
      const auto N = static_cast<std::uint64_t>(n) * static_cast<std::uint64_t>(n - 4 * t - 2);
      const double r = goppa_radius(n, t);
      round_bad += !within_half_ulp(r, n, 2, N);
      naive_off += r != n / 2.0 - std::sqrt(static_cast<double>(N)) / 2;
      const int tmax = (n - static_cast<int>(isqrt(N)) - 1) / 2;
      cut_bad += goppa_tau_max(n, t) != tmax;
      for (int tau = 0; tau <= n; ++tau)
        cut_bad += goppa_tau_admissible(n, t, tau) != (tau <= tmax);
      ++checked;
    }
  }
  return {round_bad == 0 && cut_bad == 0,
          std::to_string(checked) + " radii, " + std::to_string(round_bad) +
              " not within half an ulp, " + std::to_string(cut_bad) + " cutoff mismatches (" +
              std::to_string(naive_off) + " differ from the plain double formula)"};
}

// 9 -----------------------------------------------------------------------

Verdict cli_suite() {
  const std::string cmd = std::string("bash '") + WULIST_CLI_SCRIPT + "' '" + WULIST_CLI_BIN +
                          "' '" + WULIST_GOLDEN_DIR + "' > /dev/null 2>&1";
  const int rc = std::system(cmd.c_str());
  return {rc == 0, rc == 0 ? "golden roundtrips, two runs byte-identical, exit codes 0/1/2/3"
                           : "roundtrip script failed (run tests/cli_roundtrip.sh for details)"};
}

}  // namespace

int main() {
  struct Criterion {
    int id;
    const char* name;
    double budget_s;
    std::function<Verdict()> run;
  };
  const std::vector<Criterion> all{
      {1, "EA and Groebner pairs", 10, ea_suite},
      {2, "interpolation basis", 120, basis_suite},
      {3, "factor extraction", 60, factor_suite},
      {4, "GRS [12,3,10] end to end", 300, grs_suite},
      {5, "parameter duality", 30, duality_suite},
      {6, "Goppa Patterson path", 300, patterson_suite},
      {7, "Goppa beyond Patterson", 1800, beyond_patterson_suite},
      {8, "radius formulas", 60, radius_suite},
      {9, "CLI roundtrip", 120, cli_suite},
  };
  int failures = 0;
  for (const auto& c : all) {
    const auto t0 = std::chrono::steady_clock::now();
    Verdict v;
    try {
      v = c.run();
    } catch (const std::exception& e) {
      v = {false, std::string("exception: ") + e.what()};
    }
    const double secs =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    if (secs > c.budget_s) {
      v.pass = false;
      v.detail += "; over the time budget";
    }
    char timing[48];
    std::snprintf(timing, sizeof timing, "%.2fs", secs);
    std::cout << (v.pass ? "PASS " : "FAIL ") << c.id << ' ' << c.name << ": " << v.detail
              << " [" << timing << "]" << std::endl;
    failures += !v.pass;
  }
  return failures;
}
