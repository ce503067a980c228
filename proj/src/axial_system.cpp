#include "axial/axial_system.hpp"

#include <cmath>
#include <stdexcept>

namespace axial {
namespace {

void require_positive_r(double r) {
  if (!(r > 0.0)) throw std::domain_error("axial residuals are defined for r > 0 only");
}

double step_for(double coord, double h) { return h * std::max(1.0, std::abs(coord)); }

int sign_pow(int l) { return l % 2 == 0 ? 1 : -1; }

}  // namespace

double central_diff5(const std::function<double(double)>& f, double x, double h) {
  return ((f(x - 2 * h) - f(x + 2 * h)) + 8.0 * (f(x + h) - f(x - h))) / (12.0 * h);
}

double Profile::partial_x0(HalfPlanePoint at, double h) const {
  if (d_x0) return d_x0(at.x0, at.r);
  return central_diff5([&](double s) { return value(s, at.r); }, at.x0, step_for(at.x0, h));
}

double Profile::partial_r(HalfPlanePoint at, double h) const {
  if (d_r) return d_r(at.x0, at.r);
  return central_diff5([&](double s) { return value(at.x0, s); }, at.r, step_for(at.r, h));
}

std::array<double, 2> residual_axial_left(const Profile& A, const Profile& B, int k, int m, HalfPlanePoint at,
                                          double h) {
  require_positive_r(at.r);
  const double b = B(at.x0, at.r);
  return {A.partial_x0(at, h) - B.partial_r(at, h) - (2.0 * k + m - 1.0) / at.r * b,
          B.partial_x0(at, h) + A.partial_r(at, h)};
}

std::array<double, 4> residual_system_I(const AxialQuad& q, int m, int k, int l, HalfPlanePoint at, double h) {
  require_positive_r(at.r);
  const double r = at.r;
  const double s = 2.0 * l - m;
  const double B = q.B(at.x0, r);
  const double C = q.C(at.x0, r);
  const double D = q.D(at.x0, r);
  return {
      q.A.partial_x0(at, h) - r * q.B.partial_r(at, h) - (2.0 * k + m) * B + sign_pow(l) * s * C,
      q.B.partial_x0(at, h) + q.A.partial_r(at, h) / r - sign_pow(l) * s * D,
      q.C.partial_x0(at, h) - r * q.D.partial_r(at, h) - (2.0 * k + m + 2.0) * D,
      q.D.partial_x0(at, h) + q.C.partial_r(at, h) / r,
  };
}

std::array<double, 4> residual_system_II(const AxialQuad& q, int m, int k, int l, HalfPlanePoint at, double h) {
  return residual_system_I(AxialQuad{q.A, q.C, q.B, q.D}, m, k, l, at, h);
}

std::array<double, 4> residual_system_combined(const AxialTriple& t, int m, int k, int l, HalfPlanePoint at,
                                               double h) {
  require_positive_r(at.r);
  const double r = at.r;
  const double A2 = t.A2(at.x0, r);
  const double A3 = t.A3(at.x0, r);
  const double dA2_dr = t.A2.partial_r(at, h);
  const double dA2_dx0 = t.A2.partial_x0(at, h);
  return {
      t.A1.partial_x0(at, h) - r * dA2_dr - lambda_coeff(m, k, l) * A2,
      dA2_dx0 + t.A1.partial_r(at, h) / r - sign_pow(l) * (2.0 * l - m) * A3,
      dA2_dx0 - r * t.A3.partial_r(at, h) - (2.0 * k + m + 2.0) * A3,
      t.A3.partial_x0(at, h) + dA2_dr / r,
  };
}

void ClosedFormParams::validate() const {
  if (m < 2 || m > kMaxDim) throw std::invalid_argument("m must lie in [2, 12]");
  if (k < 0) throw std::invalid_argument("k must be non-negative");
  if (l < 0 || l > m) throw std::invalid_argument("l must lie in [0, m]");
}

double a2_closed(const ClosedFormParams& p, double r) {
  require_positive_r(r);
  const Order alpha = p.order();
  double z = 0.0;
  if (p.c1 != 0.0) z += p.c1 * bessel_j(alpha, r);
  if (p.c2 != 0.0) z += p.c2 * bessel_y(alpha, r);
  return std::pow(r, -alpha.value()) * z;
}

double a3_closed(const ClosedFormParams& p, double r) {
  require_positive_r(r);
  const Order alpha = p.order().shifted(1);
  double z = 0.0;
  if (p.c1 != 0.0) z += p.c1 * bessel_j(alpha, r);
  if (p.c2 != 0.0) z += p.c2 * bessel_y(alpha, r);
  return std::pow(r, -alpha.value()) * z;
}

double a1_closed(const ClosedFormParams& p, double r) {
  return p.lambda() * a2_closed(p, r) - r * r * a3_closed(p, r);
}

AxialTriple ClosedFormSolution::triple() const {
  auto self = *this;
  auto wrap = [](auto g) {
    return Profile([g](double x0, double r) { return std::exp(x0) * g(r); },
                   [g](double x0, double r) { return std::exp(x0) * g(r); }, {});
  };
  return AxialTriple{wrap([self](double r) { return self.a1(r); }),
                     wrap([self](double r) { return self.a2(r); }),
                     wrap([self](double r) { return self.a3(r); })};
}

AxialQuad ClosedFormSolution::quad() const {
  const AxialTriple t = triple();
  return AxialQuad{t.A1, t.A2, t.A2, t.A3};
}

AxialFunction::AxialFunction(ClosedFormSolution solution, const PolyMV& p)
    : solution_(std::move(solution)), inner_(p) {
  const auto& prm = solution_.params;
  if (p.dim() != prm.m) throw std::invalid_argument("inner polynomial dimension differs from m");
  if (!p.is_homogeneous(prm.k)) throw std::invalid_argument("inner polynomial is not homogeneous of degree k");
  if (!p.is_grade(prm.l)) throw std::invalid_argument("inner polynomial is not l-vector valued");
}

MultivectorD AxialFunction::operator()(std::span<const double> x) const {
  const int m = inner_.dim();
  if (static_cast<int>(x.size()) != m + 1) throw DimensionError("point must have m + 1 coordinates");
  const auto xs = x.subspan(1);
  double r2 = 0.0;
  for (double v : xs) r2 += v * v;
  if (r2 == 0.0) throw std::domain_error("F is not defined on the axis x = 0");
  const double r = std::sqrt(r2);

  const MultivectorD p = inner_(xs);
  const MultivectorD xv = vector_from(m, std::vector<double>(xs.begin(), xs.end()));
  const MultivectorD xp = xv * p;
  const MultivectorD px = p * xv;
  const MultivectorD xpx = xp * xv;

  const double e = std::exp(x[0]);
  const double a2 = solution_.a2(r);
  MultivectorD out(m);
  out.add_scaled(e * solution_.a1(r), p);
  out.add_scaled(e * a2, xp);
  out.add_scaled(e * a2, px);
  out.add_scaled(e * solution_.a3(r), xpx);
  return out;
}

MultivectorD assemble_F(const ClosedFormParams& p, const PolyMV& inner, std::span<const double> x) {
  return AxialFunction(ClosedFormSolution(p), inner)(x);
}

DiracResidual dirac_residual_numeric(const MultivectorField& f, std::span<const double> x, double h) {
  const int n = static_cast<int>(x.size());
  const int m = n - 1;
  if (m < 1) throw DimensionError("point must have at least two coordinates");
  const auto& kern = simd::active();
  std::vector<double> probe(x.begin(), x.end());

  auto partial = [&](int axis) {
    const double step = h * std::max(1.0, std::abs(x[axis]));
    auto at = [&](double offset) {
      probe[axis] = x[axis] + offset;
      MultivectorD v = f(probe);
      probe[axis] = x[axis];
      return v;
    };
    const MultivectorD fm2 = at(-2 * step);
    const MultivectorD fm1 = at(-step);
    const MultivectorD fp1 = at(step);
    const MultivectorD fp2 = at(2 * step);
    if (fm2.dim() != m) throw DimensionError("field dimension does not match point");
    MultivectorD d(m);
    kern.stencil5(fm2.coeffs().data(), fm1.coeffs().data(), fp1.coeffs().data(), fp2.coeffs().data(),
                  1.0 / (12.0 * step), d.coeffs().data(), d.size());
    return d;
  };

  const MultivectorD d0 = partial(0);
  DiracResidual out{d0, d0};
  for (int j = 1; j <= m; ++j) {
    const MultivectorD dj = partial(j);
    const MultivectorD ej = MultivectorD::generator(m, j);
    out.left += ej * dj;
    out.right += dj * ej;
  }
  return out;
}

}  // namespace axial
