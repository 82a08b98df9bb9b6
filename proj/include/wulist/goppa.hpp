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

#ifndef WULIST_GOPPA_HPP
#define WULIST_GOPPA_HPP

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "wulist/decode.hpp"
#include "wulist/kernels.hpp"
#include "wulist/keyeq.hpp"
#include "wulist/poly.hpp"

namespace wulist {

using BitMatrix = std::vector<std::vector<std::uint8_t>>;

/// Irreducible binary Goppa code: c in GF(2)^n with sum c_i/(x - a_i) = 0 mod g.
class GoppaCode {
 public:
  /// Throws UsageError unless the field has characteristic 2, g is
  /// irreducible of degree >= 1, the support is distinct and g has no root
  /// on it.
  GoppaCode(FieldPtr field, Poly g, std::vector<Elem> support);

  const Field& field() const { return *field_; }
  const FieldPtr& field_ptr() const { return field_; }
  const Poly& g() const { return g_; }
  int t() const { return g_.degree().value(); }
  int n() const { return static_cast<int>(support_.size()); }
  int m() const { return static_cast<int>(field_->degree()); }
  /// Actual dimension n - rank(H); at least n - m t.
  int k() const { return static_cast<int>(generator_.size()); }
  const std::vector<Elem>& support() const { return support_; }
  /// (x - a_i)^-1 mod g.
  const std::vector<Poly>& inverse_terms() const { return inv_; }
  /// m t x n over GF(2); row (j, b) holds bit b of coefficient j.
  const BitMatrix& parity_check() const { return parity_; }
  /// k x n basis of the code, identity on the non-pivot columns of H.
  const BitMatrix& generator() const { return generator_; }

 private:
  FieldPtr field_;
  Poly g_;
  std::vector<Elem> support_;
  std::vector<Poly> inv_;
  BitMatrix parity_;
  BitMatrix generator_;
};

/// Reduced row echelon basis of {v : M v = 0} over GF(2).
BitMatrix gf2_nullspace(const BitMatrix& m, std::size_t cols);

/// Sum of the generator rows selected by the k message bits.
std::vector<Elem> goppa_encode(const GoppaCode& code, std::span<const Elem> bits);

/// sum r_i (x - a_i)^-1 mod g. Throws UsageError on non-binary input.
Poly goppa_syndrome(const GoppaCode& code, std::span<const Elem> r);

bool is_member(const GoppaCode& code, std::span<const Elem> r);

struct PattersonState {
  Poly S;
  Poly S_inv;
  Poly S_tilde;  // S_tilde^2 = x + S^-1 mod g
  GrobnerPair pair;
  Poly hat_h1;   // h10^2 + x h11^2
  Poly hat_h2;
};

/// Either the special case S^-1 = x (a single error at the position of 0,
/// `flip` empty when 0 is not in the support) or the reduced key equation.
struct PattersonReduction {
  bool special = false;
  std::optional<std::size_t> flip;
  std::optional<PattersonState> state;
};

/// Throws UsageError when S is zero.
PattersonReduction patterson_reduce(const GoppaCode& code, const Poly& S);

/// tau < n/2 - sqrt(n(n-4t-2))/2, in integers.
bool goppa_tau_admissible(int n, int t, int tau);
int goppa_tau_max(int n, int t);
/// (n - sqrt(n(n-4t-2))) / 2, correctly rounded; n/2 when n(n-4t-2) < 0.
double goppa_radius(int n, int t);

/// Patterson only when tau <= t, minimal (ell, s) with ell > 2s when tau is
/// admissible, infeasible otherwise.
ParamsReport goppa_params(const GoppaCode& code, int tau, int ell_max = 64);
bool goppa_params_valid(int n, int t, int tau, int s, int ell);

DecodeOutput wu_decode_goppa(const GoppaCode& code, std::span<const Elem> r,
                             int tau, const DecodeOptions& opts = {});

std::vector<DecodeOutput> decode_batch(const GoppaCode& code,
                                       const std::vector<std::vector<Elem>>& words,
                                       int tau, const DecodeOptions& opts = {},
                                       kernels::Exec exec = kernels::Exec::serial);

/// Monic irreducible polynomial of degree t drawn from a seeded xorshift64*
/// stream: coefficients c_0..c_{t-1} in order, retried until irreducible.
Poly random_goppa_poly(const Field& f, int t, std::uint64_t seed);

}  // namespace wulist

#endif  // WULIST_GOPPA_HPP
