#pragma once

// Vekua-type systems for axial two-sided monogenic functions
//
//   F = A P + B x P + C P x + D x P x,   A..D functions of (x0, r = |x|),
//
// where P = P_{k,l} is a homogeneous two-sided monogenic l-vector
// polynomial. Left monogenicity of F is system I, right monogenicity is
// system II; together they force B = C and reduce to the combined system
// in (A1, A2, A3) = (A, B = C, D). The exp(x0) ansatz solves the combined
// system with Bessel profiles a1, a2, a3.

#include <array>
#include <functional>
#include <optional>
#include <span>
#include <vector>

#include "axial/bessel.hpp"
#include "axial/clifford.hpp"
#include "axial/polynomial.hpp"

namespace axial {

struct HalfPlanePoint {
  double x0 = 0.0;
  double r = 1.0;
};

/// (2k + m) + (-1)^{l+1} (2l - m)
constexpr int lambda_coeff(int m, int k, int l) {
  return (2 * k + m) + (l % 2 == 0 ? -1 : 1) * (2 * l - m);
}

/// Real-valued function of (x0, r). Partials are optional; missing ones are
/// taken by 5-point central differences.
struct Profile {
  std::function<double(double, double)> value;
  std::function<double(double, double)> d_x0{};
  std::function<double(double, double)> d_r{};

  Profile() : value([](double, double) { return 0.0; }) {}
  Profile(std::function<double(double, double)> f) : value(std::move(f)) {}  // NOLINT
  Profile(std::function<double(double, double)> f, std::function<double(double, double)> fx0,
          std::function<double(double, double)> fr)
      : value(std::move(f)), d_x0(std::move(fx0)), d_r(std::move(fr)) {}

  static Profile constant(double c) {
    return Profile([c](double, double) { return c; }, [](double, double) { return 0.0; },
                   [](double, double) { return 0.0; });
  }

  double operator()(double x0, double r) const { return value(x0, r); }
  double partial_x0(HalfPlanePoint at, double h) const;
  double partial_r(HalfPlanePoint at, double h) const;
};

struct AxialQuad {
  Profile A, B, C, D;
};

struct AxialTriple {
  Profile A1, A2, A3;
};

/// (f(x-2h) - 8 f(x-h) + 8 f(x+h) - f(x+2h)) / 12h
double central_diff5(const std::function<double(double)>& f, double x, double h);

/// Default relative step for 1-D radial and (x0, r) system checks.
inline constexpr double kRadialStep = 1e-4;
/// Default relative step for the Dirac residuals in R^{m+1}.
inline constexpr double kDiracStep = 1e-3;

/// Residuals of the single-sided axial system
///   dA/dx0 - dB/dr - (2k+m-1)/r B,   dB/dx0 + dA/dr.
std::array<double, 2> residual_axial_left(const Profile& A, const Profile& B, int k, int m, HalfPlanePoint at,
                                          double h = kRadialStep);

/// Left monogenicity system, four equations in their usual order.
std::array<double, 4> residual_system_I(const AxialQuad& q, int m, int k, int l, HalfPlanePoint at,
                                        double h = kRadialStep);
/// Right monogenicity system: system I with the roles of B and C swapped.
std::array<double, 4> residual_system_II(const AxialQuad& q, int m, int k, int l, HalfPlanePoint at,
                                         double h = kRadialStep);
/// Combined system for (A1, A2, A3) with coupling lambda_coeff(m, k, l).
std::array<double, 4> residual_system_combined(const AxialTriple& t, int m, int k, int l, HalfPlanePoint at,
                                               double h = kRadialStep);

struct ClosedFormParams {
  int m = 2;
  int k = 0;
  int l = 0;
  double c1 = 1.0;
  double c2 = 0.0;

  /// Throws std::invalid_argument unless m >= 2, k >= 0, 0 <= l <= m.
  void validate() const;
  Order order() const { return Order::axial(k, m); }
  int lambda() const { return lambda_coeff(m, k, l); }
};

/// r^{-alpha} (c1 J_alpha(r) + c2 Y_alpha(r)), alpha = k + m/2.
double a2_closed(const ClosedFormParams& p, double r);
/// r^{-alpha-1} (c1 J_{alpha+1}(r) + c2 Y_{alpha+1}(r)).
double a3_closed(const ClosedFormParams& p, double r);
/// lambda a2(r) - r^2 a3(r).
double a1_closed(const ClosedFormParams& p, double r);

/// Closed-form solution with optional per-profile scale factors. Scales
/// other than 1 break the solution and exist for mutation testing.
struct ClosedFormSolution {
  ClosedFormParams params;
  std::array<double, 3> scale{1.0, 1.0, 1.0};

  explicit ClosedFormSolution(ClosedFormParams p) : params(p) { params.validate(); }

  double a1(double r) const { return scale[0] * a1_closed(params, r); }
  double a2(double r) const { return scale[1] * a2_closed(params, r); }
  double a3(double r) const { return scale[2] * a3_closed(params, r); }

  /// exp(x0) a_j(r) as profiles for the combined system.
  AxialTriple triple() const;
  /// (A, B, C, D) = exp(x0) (a1, a2, a2, a3).
  AxialQuad quad() const;
};

/// F(x) = exp(x0) (a1 P + a2 x P + a2 P x + a3 x P x) for a precompiled P.
class AxialFunction {
 public:
  AxialFunction(ClosedFormSolution solution, const PolyMV& p);

  int dim() const { return inner_.dim(); }
  const ClosedFormSolution& solution() const { return solution_; }

  /// x = (x0, x1, ..., xm); requires x_1..x_m not all zero.
  MultivectorD operator()(std::span<const double> x) const;

 private:
  ClosedFormSolution solution_;
  NumericPoly inner_;
};

MultivectorD assemble_F(const ClosedFormParams& p, const PolyMV& inner, std::span<const double> x);

using MultivectorField = std::function<MultivectorD(std::span<const double>)>;

struct DiracResidual {
  MultivectorD left;
  MultivectorD right;
};

/// Numeric Cauchy-Riemann operator from both sides:
///   left  = dF/dx0 + sum_j e_j dF/dx_j,
///   right = dF/dx0 + sum_j (dF/dx_j) e_j,
/// each partial by a 5-point central stencil with step h * max(1, |x_i|).
DiracResidual dirac_residual_numeric(const MultivectorField& f, std::span<const double> x, double h = kDiracStep);

}  // namespace axial
