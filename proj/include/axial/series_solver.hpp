#pragma once

// Power-series solution of the combined axial system in x0:
//
//   A_j(x0, r) = sum_n x0^n / n! A_{j,n}(r),
//
//   A_{2,n+1} = -A''_{2,n-1} - (2k+m+1)/r A'_{2,n-1}
//   A_{3,n+1} = -(1/r) A'_{2,n}
//   A_{1,n+1} = r A'_{2,n} + lambda A_{2,n}
//
// with every A_{j,n} an exact rational series in r.

#include <array>
#include <stdexcept>
#include <vector>

#include "axial/radial_series.hpp"

namespace axial {

class TruncationExhausted : public std::out_of_range {
 public:
  using std::out_of_range::out_of_range;
};

class InvariantViolation : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

struct SeriesStep {
  RadialSeries a1_next;
  RadialSeries a2_next;
  RadialSeries a3_next;
};

/// One application of the recurrences: from A_{2,n-1} and A_{2,n} produce
/// A_{1,n+1}, A_{2,n+1}, A_{3,n+1}. Inputs must be even series.
SeriesStep series_step(const RadialSeries& a2_prev, const RadialSeries& a2_cur, int m, int k, int l);

struct SeriesSeeds {
  RadialSeries a1_0;
  RadialSeries a2_0;
  RadialSeries a3_0;
  RadialSeries a2_1;
  /// Real factor multiplying every profile; lets irrational normalizations
  /// (Gamma of half-integers, powers of sqrt 2) stay out of the exact part.
  double scale = 1.0;
};

/// Seeds of the first-kind closed-form solution exp(x0) (a1, a2, a3) with
/// C2 = 0, expanded through exponent trunc.
SeriesSeeds bessel_j_seeds(int m, int k, int l, double c1, int trunc);

SeriesSeeds zero_seeds(int trunc);

/// A_{j,n} for j = 1, 2, 3 and n = 0..N.
struct SeriesTable {
  int m = 2;
  int k = 0;
  int l = 0;
  int steps = 0;
  double scale = 1.0;
  std::array<std::vector<RadialSeries>, 3> orders;

  const RadialSeries& at(int j, int n) const { return orders.at(j - 1).at(n); }

  /// scale * sum_{n <= N} x0^n / n! A_{j,n}(r)
  double evaluate(int j, double x0, double r) const;

  bool is_zero() const;
};

/// Iterates series_step N times. Requires N >= 1 and every seed truncated at
/// T >= 2N + 2.
SeriesTable series_solve(const SeriesSeeds& seeds, int steps, int m, int k, int l);

/// Profile represented by its x0-Taylor coefficients: sum_n x0^n/n! orders[n].
struct TaylorProfile {
  std::vector<RadialSeries> orders;

  /// d/dx0: drops the first coefficient.
  TaylorProfile d_x0() const;
  TaylorProfile d_r() const;
  TaylorProfile mul_r() const;
  TaylorProfile div_r() const;
  TaylorProfile scaled(const Rational& s) const;

  static TaylorProfile constant(const Rational& c, int n_orders, int trunc);
};

TaylorProfile operator+(const TaylorProfile& a, const TaylorProfile& b);
TaylorProfile operator-(const TaylorProfile& a, const TaylorProfile& b);
bool is_zero(const TaylorProfile& p);

struct TaylorQuad {
  TaylorProfile A, B, C, D;
};

struct TaylorTriple {
  TaylorProfile A1, A2, A3;
};

/// Exact residuals of systems I, II and the combined system. Orders and
/// truncations shrink to what every term in an equation can supply.
std::array<TaylorProfile, 4> residual_system_I_exact(const TaylorQuad& q, int m, int k, int l);
std::array<TaylorProfile, 4> residual_system_II_exact(const TaylorQuad& q, int m, int k, int l);
std::array<TaylorProfile, 4> residual_system_combined_exact(const TaylorTriple& t, int m, int k, int l);

TaylorTriple as_taylor(const SeriesTable& table);

/// Integer coefficients c_{n,j}, j = 1..2n, of
///   A_{2,2n} = sum_j c_{n,j} A_{2,0}^{(2n-j+1)} / r^{j-1},
/// by expanding the A_2 recurrence symbolically. Throws InvariantViolation
/// if a non-integer coefficient or a term outside that shape appears.
std::vector<Integer> cnj_extract(int n, int m, int k);

/// Applies the expansion from cnj_extract to a concrete A_{2,0}.
RadialSeries apply_cnj(const std::vector<Integer>& c, const RadialSeries& a20);

}  // namespace axial
