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

#ifndef WULIST_GRS_HPP
#define WULIST_GRS_HPP

#include <map>
#include <span>
#include <vector>

#include "wulist/decode.hpp"
#include "wulist/kernels.hpp"
#include "wulist/poly.hpp"

namespace wulist {

/// Generalised Reed-Solomon code {(v_i eta(alpha_i))_i : deg eta < k}.
class GrsCode {
 public:
  /// Validates distinct nonzero alphas, nonzero multipliers and
  /// 1 <= k < n <= q - 1. Throws UsageError.
  GrsCode(FieldPtr field, int k, std::vector<Elem> alphas,
          std::vector<Elem> mults);

  /// First n nonzero elements, all multipliers 1.
  static GrsCode standard(FieldPtr field, int n, int k);

  const Field& field() const { return *field_; }
  const FieldPtr& field_ptr() const { return field_; }
  int n() const { return static_cast<int>(alphas_.size()); }
  int k() const { return k_; }
  int d() const { return n() - k_ + 1; }
  const std::vector<Elem>& alphas() const { return alphas_; }
  const std::vector<Elem>& mults() const { return mults_; }
  /// (v_j prod_{h != j} (alpha_j - alpha_h))^-1.
  const std::vector<Elem>& hat_v() const { return hat_v_; }

 private:
  FieldPtr field_;
  int k_;
  std::vector<Elem> alphas_;
  std::vector<Elem> mults_;
  std::vector<Elem> hat_v_;
};

/// (v_i eta(alpha_i))_i. Throws UsageError when deg eta >= k.
std::vector<Elem> encode(const GrsCode& code, const Poly& message);

/// The message of a codeword (inverse of encode). Throws UsageError when the
/// word is not in the code.
Poly message_of(const GrsCode& code, std::span<const Elem> codeword);

/// S(x) = sum_{i<d-1} x^i sum_j r_j hat_v_j alpha_j^(d-2-i).
Poly syndrome(const GrsCode& code, std::span<const Elem> r);

bool is_codeword(const GrsCode& code, std::span<const Elem> r);

/// e_i = -Omega(alpha_i) / (alpha_i^(d-1) hat_v_i Lambda'(alpha_i)) at every
/// code position where Lambda vanishes. Throws ArithmeticError when Lambda
/// is not square-free at one of those roots.
std::map<std::size_t, Elem> error_values(const GrsCode& code, const Poly& Lambda,
                                         const Poly& Omega);

/// tau < n - sqrt(n(n-d)), decided in integers.
bool grs_tau_admissible(int n, int d, int tau);
/// Largest admissible tau (or -1).
int grs_tau_max(int n, int d);
/// n - sqrt(n(n-d)), correctly rounded (reporting only).
double grs_radius(int n, int d);

/// Parameter choice for radius tau: unique decoding when 2 tau < d, the
/// minimal (ell, s) with ell >= s otherwise, or infeasible.
ParamsReport grs_params(const GrsCode& code, int tau, int ell_max = 64);

/// Validity of (ell, s) for radius tau in integer arithmetic, and the
/// GSA-style inequality with multiplicity s_gsa, used as a cross-check.
bool grs_params_valid(int n, int d, int tau, int s, int ell);
bool gsa_params_valid(int n, int d, int tau, int s_gsa, int ell);

/// All codewords within distance tau of r. Throws ParameterError when the
/// radius or forced parameters are infeasible.
DecodeOutput wu_decode(const GrsCode& code, std::span<const Elem> r, int tau,
                       const DecodeOptions& opts = {});

/// wu_decode on every word, optionally across OpenMP threads.
std::vector<DecodeOutput> decode_batch(const GrsCode& code,
                                       const std::vector<std::vector<Elem>>& words,
                                       int tau, const DecodeOptions& opts = {},
                                       kernels::Exec exec = kernels::Exec::serial);

}  // namespace wulist

#endif  // WULIST_GRS_HPP
