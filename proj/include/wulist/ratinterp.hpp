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

#ifndef WULIST_RATINTERP_HPP
#define WULIST_RATINTERP_HPP

#include <cstdint>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "wulist/halfint.hpp"
#include "wulist/homog.hpp"
#include "wulist/poly.hpp"

namespace wulist {

/// Partially projective interpolation point (x, y : z).
///
/// Normalised form has z in {0, 1}, and y = 1 whenever z = 0.
struct InterpPoint {
  Elem x = 0;
  Elem y = 0;
  Elem z = 1;

  /// Scales (y, z) into normalised form. Throws UsageError if y = z = 0.
  InterpPoint normalized(const Field& f) const;
  bool is_normalized() const { return (z == 1) || (z == 0 && y == 1); }
  friend bool operator==(const InterpPoint&, const InterpPoint&) = default;
};

/// Normalises every point and checks that the x-coordinates are distinct.
std::vector<InterpPoint> normalize_points(std::span<const InterpPoint> pts,
                                          const Field& f);

/// Parameters of a rational interpolation problem.
struct RatParams {
  int n = 0;
  int tau = 0;
  int s = 1;
  int ell = 1;
  HalfInt w1;
  HalfInt w2;

  /// Throws UsageError unless s >= 1 and ell >= s.
  void validate() const;
};

/// 1/2 n s(s+1) < s tau (ell+1) - 1/2 ell(ell+1) w_total, exactly.
bool feasible(int n, int tau, int s, int ell, HalfInt w_total);
/// feasible() on a validated parameter set (throws on s < 1 or ell < s).
bool feasible(const RatParams& params);

enum class ListConstraint {
  ell_ge_s,   // GRS: ell >= s
  ell_gt_2s,  // Goppa: ell > 2s
};

struct Multiplicities {
  int s = 0;
  int ell = 0;
  friend bool operator==(const Multiplicities&, const Multiplicities&) = default;
};

/// Smallest ell <= ell_max (then smallest s) that is feasible and satisfies
/// the structural constraint; nullopt when none exists.
std::optional<Multiplicities> choose_params(int n, int tau, HalfInt w_total,
                                            int ell_max,
                                            ListConstraint constraint);

/// Polynomials derived from the point set that the basis is built from.
struct BasisContext {
  Poly G;        // prod (x - x_i)
  Poly R_y;      // Lagrange through (x_i, y_i)
  Poly R_z;      // Lagrange through (x_i, z_i)
  Poly g_z;      // gcd(G, R_z) = prod over z_i = 0 of (x - x_i)
  Poly lambda1;  // g_z = lambda1 G + lambda2 R_z
  Poly lambda2;
  Poly upsilon;  // lambda2 R_y mod G
};

/// Builds the context for normalised, x-distinct points.
BasisContext make_basis_context(std::span<const InterpPoint> pts,
                                const Field& f);

/// Explicit F[x]-basis B^(0..ell) of all forms of degree ell in (y, z) that
/// vanish with multiplicity s at every point. B^(j) has y-degree ell - j.
/// Requires ell >= s >= 1 and normalised, x-distinct points.
std::pair<BasisContext, std::vector<HomogPoly>> build_basis(
    std::span<const InterpPoint> pts, int s, int ell, const Field& f);

/// Exponents (a, b, c, d, e) of the basis factors
/// (g_z y - Upsilon z)^a (yz - R_y z^2)^b (z G/g_z)^c y^d z^e for row j.
struct BasisExponents {
  int a, b, c, d, e;
};
BasisExponents basis_exponents(int j, int s, int ell);

/// Whether Q vanishes with multiplicity at least s at the normalised point:
/// the dehomogenised shift has no monomial of total degree < s.
bool check_multiplicity(const HomogPoly& Q, const InterpPoint& pt, int s);

/// Square polynomial matrix; rows[i][j].
using PolyMatrix = std::vector<std::vector<Poly>>;

struct RowReduction {
  PolyMatrix reduced;
  PolyMatrix transform;  // transform * input = reduced (when requested)
  std::size_t shortest_row = 0;
  std::vector<std::int64_t> row_degrees_twice;
};

/// Mulders-Storjohann reduction to weak Popov form under the shifted degree
/// max_j (2 deg a_j + shifts_twice[j]). Shifts are given doubled so that
/// half-integer column weights stay exact. Throws UsageError on a singular
/// input (a row reduces to zero).
RowReduction row_reduce(PolyMatrix m, std::span<const std::int64_t> shifts_twice,
                        bool want_transform = false);

/// Leading position of a row under doubled shifts (-1 for zero rows): the
/// rightmost column attaining the shifted row degree.
int leading_position(const std::vector<Poly>& row,
                     std::span<const std::int64_t> shifts_twice);

/// Whether nonzero rows have pairwise distinct leading positions.
bool is_weak_popov(const PolyMatrix& m,
                   std::span<const std::int64_t> shifts_twice);

/// Rows of the basis as a matrix: entry (j, i) is the y^i z^(ell-i)
/// coefficient of B^(j).
PolyMatrix basis_matrix(const std::vector<HomogPoly>& basis);

/// Column shifts i*w2 + (ell - i)*w1, doubled.
std::vector<std::int64_t> column_shifts_twice(int ell, HalfInt w1, HalfInt w2);

/// Minimal-weighted-degree nonzero Q with multiplicity s at every point.
/// Requires feasible params; verifies multiplicity and wdeg < s*tau before
/// returning and throws InternalError otherwise.
HomogPoly interpolate(std::span<const InterpPoint> pts, const RatParams& params,
                      const Field& f);

/// Coprime pair (f1, f2) describing the factor y f1 + z f2. Normalised so
/// that f1 is monic, or f2 = 1 when f1 = 0.
struct LinearFactor {
  Poly f1;
  Poly f2;
  friend bool operator==(const LinearFactor&, const LinearFactor&) = default;
};

/// All factors y f1 + z f2 of Q with deg f1 <= w1, deg f2 <= w2, found by
/// series root finding in both affine charts followed by Padé
/// reconstruction. Sorted by (f1, f2) coefficients.
std::vector<LinearFactor> find_linear_factors(const HomogPoly& Q, HalfInt w1,
                                              HalfInt w2);

/// Whether (y f1 + z f2) divides Q, for coprime f1, f2.
bool divides(const LinearFactor& fac, const HomogPoly& Q);

/// Canonical ordering used for factor lists.
bool factor_less(const LinearFactor& a, const LinearFactor& b);

/// Truncated power-series roots of sum_i C_i(x) Y^i modulo x^depth
/// (Roth-Ruckenstein). Each root is a coefficient vector of length depth.
std::vector<std::vector<Elem>> series_roots(const std::vector<Poly>& bivariate,
                                            int depth, const Field& f);

/// Rational reconstruction: (num, den) with den * series = num mod x^n,
/// deg num <= num_bound, deg den <= den_bound, den(0) != 0, gcd(num, den)
/// = 1, or nullopt.
std::optional<std::pair<Poly, Poly>> pade(const Poly& series, int n,
                                          int num_bound, int den_bound);

/// Division of P by the basis along decreasing y-degree. Returns the
/// F[x]-coefficients when P lies in the span, nullopt otherwise.
std::optional<std::vector<Poly>> express_in_basis(
    const HomogPoly& P, const std::vector<HomogPoly>& basis);

// --- Linear-algebra oracle -------------------------------------------------

/// Multiplicity constraints as a dense linear system over F.
struct NaiveSystem {
  std::vector<int> max_degs;  // per y-power, -1 when the coefficient is 0
  std::size_t unknowns = 0;
  std::vector<std::vector<Elem>> rows;  // one per constraint
};

/// Builds the system for coefficient degree caps max_degs[i] (deg Q_i).
NaiveSystem naive_system(std::span<const InterpPoint> pts, int s, int ell,
                         const std::vector<int>& max_degs, const Field& f);

/// Nullspace basis of a dense matrix over F with `cols` columns.
std::vector<std::vector<Elem>> nullspace(std::vector<std::vector<Elem>> rows,
                                         std::size_t cols, const Field& f);

/// A nonzero solution with wdeg < s*tau, from the nullspace of the linear
/// multiplicity system; nullopt if the system only has the trivial solution.
std::optional<HomogPoly> naive_interpolate(std::span<const InterpPoint> pts,
                                           const RatParams& params,
                                           const Field& f);

/// Smallest doubled weighted degree of any nonzero Q with multiplicity s at
/// every point, searched upward by budget, together with a witness.
std::pair<std::int64_t, HomogPoly> naive_min_interpolant(
    std::span<const InterpPoint> pts, const RatParams& params, const Field& f);

}  // namespace wulist

#endif  // WULIST_RATINTERP_HPP
