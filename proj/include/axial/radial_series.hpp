#pragma once

#include <map>
#include <stdexcept>

#include "axial/rational.hpp"

namespace axial {

class ParityError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

enum class Parity { Zero, Even, Odd, Mixed };

/// Truncated power series sum_e c_e r^e with exact rational coefficients.
/// Coefficients are known for every exponent 0 <= e <= trunc(); anything
/// above trunc() is unknown, not zero.
class RadialSeries {
 public:
  explicit RadialSeries(int trunc = 0) : trunc_(trunc) {
    if (trunc < 0) throw std::invalid_argument("negative truncation");
  }

  static RadialSeries constant(const Rational& c, int trunc);
  static RadialSeries monomial(int exponent, const Rational& c, int trunc);

  int trunc() const { return trunc_; }
  const std::map<int, Rational>& coeffs() const { return coeffs_; }
  Rational coeff(int e) const;
  void set(int e, const Rational& c);

  bool is_zero() const { return coeffs_.empty(); }
  Parity parity() const;

  /// d/dr; trunc drops by one.
  RadialSeries derivative() const;
  /// r * s; trunc grows by one.
  RadialSeries mul_r() const;
  /// s / r; requires a vanishing constant term, trunc drops by one.
  RadialSeries div_r() const;
  /// Drops every exponent above t (t <= trunc()).
  RadialSeries truncated(int t) const;

  RadialSeries& operator+=(const RadialSeries& o);
  RadialSeries& operator-=(const RadialSeries& o);
  RadialSeries& operator*=(const Rational& s);

  friend RadialSeries operator+(RadialSeries a, const RadialSeries& b) { return a += b; }
  friend RadialSeries operator-(RadialSeries a, const RadialSeries& b) { return a -= b; }
  friend RadialSeries operator-(RadialSeries a) { return a *= Rational(-1); }
  friend RadialSeries operator*(RadialSeries a, const Rational& s) { return a *= s; }
  friend RadialSeries operator*(const Rational& s, RadialSeries a) { return a *= s; }

  /// Same coefficients for every exponent up to min(trunc, trunc of o).
  bool agrees_with(const RadialSeries& o) const;
  friend bool operator==(const RadialSeries&, const RadialSeries&) = default;

  double operator()(double r) const;

 private:
  int trunc_;
  std::map<int, Rational> coeffs_;
};

/// Series of r^{-alpha} J_alpha(r) * 2^alpha Gamma(alpha + 1), i.e.
/// sum_n (-1)^n (r^2/4)^n / (n! (alpha+1)_n), through exponent trunc.
/// alpha is given as 2*alpha to cover half-integers.
RadialSeries bessel_kernel_series(int twice_alpha, int trunc);

/// 1 / (2^alpha Gamma(alpha + 1)), the factor separating the rational
/// kernel series from r^{-alpha} J_alpha(r).
double bessel_kernel_scale(int twice_alpha);

}  // namespace axial
