#pragma once

// Polynomials in x_1..x_m with exact multivector coefficients, the left and
// right Dirac operators acting on them, and the nullspace generator for the
// homogeneous two-sided monogenic l-vector polynomials P_{k,l}.

#include <map>
#include <span>
#include <utility>
#include <vector>

#include "axial/clifford.hpp"

namespace axial {

using Exponents = std::vector<int>;

/// Canonical form: no zero coefficients stored, every exponent vector has
/// length m. Terms iterate in ascending lexicographic exponent order.
class PolyMV {
 public:
  explicit PolyMV(int m) : m_(m) { check_dim(m); }

  static PolyMV constant(const MultivectorQ& c);
  static PolyMV monomial(Exponents exps, const MultivectorQ& c);
  /// x_j as a scalar-valued polynomial, 1-based.
  static PolyMV variable(int m, int j);
  /// x = sum_j x_j e_j
  static PolyMV position(int m);

  int dim() const { return m_; }
  const std::map<Exponents, MultivectorQ>& terms() const { return terms_; }
  std::size_t term_count() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }

  void add_term(const Exponents& exps, const MultivectorQ& c);

  bool is_homogeneous(int k) const;
  /// Every coefficient is an l-vector.
  bool is_grade(int l) const;

  PolyMV& operator+=(const PolyMV& o);
  PolyMV& operator-=(const PolyMV& o);
  PolyMV& operator*=(const Rational& s);

  friend PolyMV operator+(PolyMV a, const PolyMV& b) { return a += b; }
  friend PolyMV operator-(PolyMV a, const PolyMV& b) { return a -= b; }
  friend PolyMV operator*(PolyMV a, const Rational& s) { return a *= s; }
  friend PolyMV operator*(const Rational& s, PolyMV a) { return a *= s; }
  friend bool operator==(const PolyMV&, const PolyMV&) = default;

 private:
  int m_;
  std::map<Exponents, MultivectorQ> terms_;
};

/// Polynomial product; coefficients combine by the geometric product, so
/// the order of the factors matters.
PolyMV operator*(const PolyMV& p, const PolyMV& q);
PolyMV operator*(const MultivectorQ& a, const PolyMV& p);
PolyMV operator*(const PolyMV& p, const MultivectorQ& a);

/// d/dx_j, 1-based.
PolyMV partial(const PolyMV& p, int j);

/// sum_j e_j (dp/dx_j)
PolyMV dirac_left(const PolyMV& p);
/// sum_j (dp/dx_j) e_j
PolyMV dirac_right(const PolyMV& p);

/// sum_j x_j dp/dx_j
PolyMV euler_operator(const PolyMV& p);

/// True iff sum_j x_j dp/dx_j == k p exactly.
bool euler_check(const PolyMV& p, int k);

/// Double-precision copy of a PolyMV for repeated evaluation. The exact
/// coefficients are rounded once, here.
class NumericPoly {
 public:
  explicit NumericPoly(const PolyMV& p);

  int dim() const { return m_; }
  MultivectorD operator()(std::span<const double> x) const;

 private:
  int m_;
  std::vector<std::pair<Exponents, MultivectorD>> terms_;
};

struct MonogenicBasis {
  int m = 0;
  int k = 0;
  int l = 0;
  std::vector<PolyMV> basis;

  std::size_t dimension() const { return basis.size(); }
};

/// All exponent vectors of total degree k in m variables, ascending
/// lexicographic order.
std::vector<Exponents> monomials_of_degree(int m, int k);

/// Basis of the homogeneous degree-k, l-vector valued polynomials P with
/// dirac_left(P) = 0 = dirac_right(P). Built as the integer nullspace of the
/// coefficient system over the monomial basis {x^a e_A : |a| = k, |A| = l}.
/// Each element has coprime integer coefficients and a positive first
/// coefficient. l > m or a trivial nullspace yields an empty basis.
MonogenicBasis generate_pkl(int m, int k, int l);

/// Structural checks of a basis: monogenic from both sides, degree k, grade l.
bool verify_basis(const MonogenicBasis& b);

}  // namespace axial
