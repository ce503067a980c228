#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>

#include "axial/axial_system.hpp"
#include "axial/verify.hpp"

using namespace axial;

namespace {

double max_abs(const auto& arr) {
  double w = 0.0;
  for (double v : arr) w = std::max(w, std::abs(v));
  return w;
}

/// Second derivative, 5-point stencil.
double second_diff5(const std::function<double(double)>& f, double x, double h) {
  return (-f(x + 2 * h) + 16 * f(x + h) - 30 * f(x) + 16 * f(x - h) - f(x - 2 * h)) / (12 * h * h);
}

/// Classical RK4 for a' = -b, b' = a - (c/r) b from (a, b)(1) = (1, 0) to r.
/// The step count is fixed, so the result is smooth in r.
std::pair<double, double> integrate_pair(double c, double r_end) {
  constexpr int steps = 4000;
  const double h = (r_end - 1.0) / steps;
  double r = 1.0, a = 1.0, b = 0.0;
  auto f = [c](double rr, double aa, double bb) { return std::pair{-bb, aa - (c / rr) * bb}; };
  for (int i = 0; i < steps; ++i) {
    const auto [k1a, k1b] = f(r, a, b);
    const auto [k2a, k2b] = f(r + h / 2, a + h / 2 * k1a, b + h / 2 * k1b);
    const auto [k3a, k3b] = f(r + h / 2, a + h / 2 * k2a, b + h / 2 * k2b);
    const auto [k4a, k4b] = f(r + h, a + h * k3a, b + h * k3b);
    a += h / 6 * (k1a + 2 * k2a + 2 * k3a + k4a);
    b += h / 6 * (k1b + 2 * k2b + 2 * k3b + k4b);
    r += h;
  }
  return {a, b};
}

AxialQuad zero_quad() { return {Profile::constant(0), Profile::constant(0), Profile::constant(0), Profile::constant(0)}; }

ClosedFormParams params(int m, int k, int l, double c1, double c2) {
  ClosedFormParams p;
  p.m = m;
  p.k = k;
  p.l = l;
  p.c1 = c1;
  p.c2 = c2;
  return p;
}

}  // namespace

TEST_CASE("lambda_coeff") {
  CHECK(lambda_coeff(2, 0, 0) == 4);
  CHECK(lambda_coeff(2, 0, 1) == 2);
  CHECK(lambda_coeff(3, 1, 2) == 4);
  static_assert(lambda_coeff(2, 0, 0) == 4);
}

TEST_CASE("trivial solutions of the systems") {
  const HalfPlanePoint at{0.4, 1.3};
  CHECK(max_abs(residual_axial_left(Profile::constant(1), Profile::constant(0), 1, 3, at)) == 0.0);
  CHECK(max_abs(residual_axial_left(Profile::constant(0), Profile::constant(0), 1, 3, at)) == 0.0);
  CHECK(max_abs(residual_system_I(zero_quad(), 2, 0, 1, at)) == 0.0);
  CHECK(max_abs(residual_system_II(zero_quad(), 2, 0, 1, at)) == 0.0);
  auto q = zero_quad();
  q.A = Profile::constant(1);
  CHECK(max_abs(residual_system_I(q, 3, 2, 1, at)) == 0.0);
  CHECK(max_abs(residual_system_combined({Profile::constant(2.5), Profile::constant(0), Profile::constant(0)}, 3, 1,
                                         2, at)) == 0.0);
}

TEST_CASE("system II is system I with B and C swapped") {
  AxialQuad q{
      Profile([](double x0, double r) { return std::sin(x0) * r; }),
      Profile([](double x0, double r) { return x0 * x0 + r * r * r; }),
      Profile([](double x0, double r) { return std::exp(-x0 * r); }),
      Profile([](double x0, double r) { return std::cos(r) + x0; }),
  };
  const AxialQuad swapped{q.A, q.C, q.B, q.D};
  for (int l = 0; l <= 3; ++l) {
    const HalfPlanePoint at{0.2 * l, 0.7 + l};
    const auto a = residual_system_II(q, 3, 1, l, at);
    const auto b = residual_system_I(swapped, 3, 1, l, at);
    for (int i = 0; i < 4; ++i) CHECK(a[i] == b[i]);
  }
}

TEST_CASE("first equations of I and II differ by the B - C coupling") {
  // B = C + eps with eps constant; all derivative terms cancel.
  const double eps = 0.125;
  for (int m = 2; m <= 3; ++m) {
    for (int k = 0; k <= 2; ++k) {
      for (int l = 0; l <= m; ++l) {
        const Profile c([](double x0, double r) { return x0 * r + r * r; });
        const Profile b([eps](double x0, double r) { return x0 * r + r * r + eps; });
        const AxialQuad q{Profile([](double x0, double r) { return x0 - r; }), b, c,
                          Profile([](double, double r) { return r; })};
        const HalfPlanePoint at{0.3, 1.1};
        const double diff = residual_system_II(q, m, k, l, at)[0] - residual_system_I(q, m, k, l, at)[0];
        const double sgn = l % 2 == 0 ? 1.0 : -1.0;
        CHECK(diff == doctest::Approx((2 * k + m + sgn * (2 * l - m)) * eps).epsilon(1e-9));
      }
    }
  }
}

TEST_CASE("residual_axial_left against an ODE-integrated pair") {
  for (int m = 2; m <= 3; ++m) {
    for (int k = 0; k <= 2; ++k) {
      const double c = 2.0 * k + m - 1.0;
      const Profile A([c](double x0, double r) { return std::exp(x0) * integrate_pair(c, r).first; });
      const Profile B([c](double x0, double r) { return std::exp(x0) * integrate_pair(c, r).second; });
      for (double r : {0.6, 1.5, 2.5}) {
        const auto res = residual_axial_left(A, B, k, m, {0.25, r});
        CHECK(max_abs(res) <= 1e-6);
      }
      // a non-solution is rejected
      const Profile bad([c](double x0, double r) { return 1.01 * std::exp(x0) * integrate_pair(c, r).second; });
      CHECK(max_abs(residual_axial_left(A, bad, k, m, {0.25, 1.5})) > 1e-4);
    }
  }
}

TEST_CASE("closed-form profiles: values and ODEs") {
  CHECK(a2_closed(params(2, 0, 0, 1, 0), 1.0) == doctest::Approx(0.44005058574493352).epsilon(1e-14));
  CHECK(a3_closed(params(2, 0, 0, 1, 0), 2.0) == doctest::Approx(0.088208507153909430).epsilon(1e-14));
  for (double r : {0.5, 1.0, 3.0}) {
    CHECK(a2_closed(params(2, 1, 0, 0, 0), r) == 0.0);
    CHECK(a3_closed(params(2, 1, 0, 0, 0), r) == 0.0);
    CHECK(a1_closed(params(2, 1, 0, 0, 0), r) == 0.0);
    const auto p = params(2, 0, 0, 1, 0);
    CHECK(a1_closed(p, r) == doctest::Approx(4 * a2_closed(p, r) - r * r * a3_closed(p, r)).epsilon(1e-15));
  }

  for (int m = 2; m <= 3; ++m) {
    for (int k = 0; k <= 2; ++k) {
      for (int l = 0; l <= m; ++l) {
        for (auto [c1, c2] : {std::pair{1.0, 0.0}, std::pair{0.0, 1.0}}) {
          const auto p = params(m, k, l, c1, c2);
          auto a1 = [&](double r) { return a1_closed(p, r); };
          auto a2 = [&](double r) { return a2_closed(p, r); };
          for (double r : {0.5, 1.0, 2.0, 5.0}) {
            CAPTURE(m);
            CAPTURE(k);
            CAPTURE(l);
            CAPTURE(c2);
            CAPTURE(r);
            const double d1 = central_diff5(a2, r, kRadialStep * std::max(1.0, r));
            // the Y branch grows like r^{-2 alpha} near 0, so the second
            // difference needs a step proportional to r
            const double d2 = second_diff5(a2, r, 3e-4 * r);
            const double scale = std::max(1.0, std::abs(a2(r)));
            CHECK(std::abs(r * d2 + (2 * k + m + 1) * d1 + r * a2(r)) <= 1e-7 * scale);
            CHECK(std::abs(a3_closed(p, r) + d1 / r) <= 1e-7 * scale);
            const double da1 = central_diff5(a1, r, kRadialStep * std::max(1.0, r));
            const double sgn = l % 2 == 0 ? 1.0 : -1.0;
            CHECK(std::abs(a2(r) + da1 / r - sgn * (2 * l - m) * a3_closed(p, r)) <=
                  1e-7 * std::max(scale, std::abs(a1(r))));
          }
        }
      }
    }
  }
}

TEST_CASE("closed form satisfies systems I, II and the combined system") {
  const ClosedFormSolution sol(params(2, 0, 1, 1, 0));
  const HalfPlanePoint at{0.3, 1.7};
  CHECK(max_abs(residual_system_I(sol.quad(), 2, 0, 1, at)) <= 1e-8);
  CHECK(max_abs(residual_system_II(sol.quad(), 2, 0, 1, at)) <= 1e-8);
  CHECK(max_abs(residual_system_combined(sol.triple(), 2, 0, 1, at)) <= 1e-8);

  double worst = 0.0;
  for (int i = 0; i < 10; ++i)
    for (int j = 0; j < 10; ++j) {
      const HalfPlanePoint p{i / 9.0, 0.5 + 4.5 * j / 9.0};
      worst = std::max(worst, max_abs(residual_system_combined(sol.triple(), 2, 0, 1, p)));
    }
  CHECK(worst <= 1e-8);

  ClosedFormSolution broken = sol;
  broken.scale[0] = 1.01;
  CHECK(max_abs(residual_system_combined(broken.triple(), 2, 0, 1, at)) > 1e-4);
}

TEST_CASE("assemble_F examples") {
  const auto p = params(2, 0, 0, 1, 0);
  const auto one = PolyMV::constant(MultivectorQ::scalar(2, 1));
  const std::vector<double> x{0.0, 1.0, 0.0};
  const auto f = assemble_F(p, one, x);
  CHECK(f.coeff(0) == doctest::Approx(a1_closed(p, 1.0) - a3_closed(p, 1.0)).epsilon(1e-14));
  CHECK(f.coeff(1) == doctest::Approx(2 * a2_closed(p, 1.0)).epsilon(1e-14));
  CHECK(f.coeff(2) == 0.0);
  CHECK(f.coeff(3) == 0.0);

  // exp(x0) scaling and grades {0, 1} for l = 0
  const std::vector<double> x0{0.0, 0.7, -1.9};
  const std::vector<double> x1{0.45, 0.7, -1.9};
  const auto g0 = assemble_F(p, one, x0);
  const auto g1 = assemble_F(p, one, x1);
  for (std::size_t a = 0; a < 4; ++a) CHECK(g1.coeff(a) == doctest::Approx(std::exp(0.45) * g0.coeff(a)).epsilon(1e-14));
  CHECK(std::abs(g1.coeff(3)) <= 1e-15);

  const auto b = generate_pkl(2, 1, 1);
  CHECK_THROWS_AS(assemble_F(p, one, std::vector<double>{0.3, 0.0, 0.0}), std::domain_error);
  CHECK_THROWS(assemble_F(params(2, 0, 1, 1, 0), b.basis[0], x));  // degree 1, k = 0
  CHECK_THROWS(assemble_F(params(2, 1, 0, 1, 0), b.basis[0], x));  // grade 1, l = 0
}

TEST_CASE("numeric Dirac residual conventions") {
  const MultivectorField constant = [](std::span<const double>) {
    MultivectorD c(2);
    c.coeff(0) = 1.5;
    c.coeff(3) = -2.0;
    return c;
  };
  const std::vector<double> x{0.1, 0.2, 0.3};
  const auto rc = dirac_residual_numeric(constant, x);
  CHECK(norm(rc.left) <= 1e-12);
  CHECK(norm(rc.right) <= 1e-12);

  const MultivectorField lin = [](std::span<const double> p) {
    MultivectorD f(2);
    f.coeff(0) = p[0];
    f.coeff(1) = -p[1];
    return f;
  };
  const auto rl = dirac_residual_numeric(lin, x);
  CHECK(rl.left.coeff(0) == doctest::Approx(2.0).epsilon(1e-10));
  CHECK(rl.right.coeff(0) == doctest::Approx(2.0).epsilon(1e-10));
  for (std::size_t a = 1; a < 4; ++a) CHECK(std::abs(rl.left.coeff(a)) <= 1e-10);
}

TEST_CASE("assembled F is two-sided monogenic; mutations are caught") {
  for (auto [m, k, l] : {std::tuple{2, 0, 1}, std::tuple{2, 1, 1}, std::tuple{3, 1, 2}, std::tuple{3, 2, 1}}) {
    const auto basis = generate_pkl(m, k, l);
    REQUIRE(basis.dimension() > 0);
    for (auto [c1, c2] : {std::pair{1.0, 0.0}, std::pair{0.0, 1.0}, std::pair{1.0, 1.0}}) {
      const ClosedFormSolution sol(params(m, k, l, c1, c2));
      GridSpec g;
      g.nx = 3;
      g.nr = 3;
      const auto rep = verify_closed_form(sol, basis, g);
      CAPTURE(m);
      CAPTURE(k);
      CAPTURE(l);
      CAPTURE(c2);
      CHECK(rep.max_left <= 1e-6);
      CHECK(rep.max_right <= 1e-6);
      CHECK(rep.max_system <= 1e-7);
      CHECK(rep.points.size() == basis.dimension() * 9);

      ClosedFormSolution broken = sol;
      broken.scale[1] = 1.01;
      CHECK(verify_closed_form(broken, basis, g).max_residual() > 1e-3);
    }
  }
}

TEST_CASE("report summaries and threading") {
  const auto basis = generate_pkl(3, 1, 1);
  const ClosedFormSolution sol(params(3, 1, 1, 1, 0));
  GridSpec g;
  g.nx = 4;
  g.nr = 3;
  const auto a = verify_closed_form(sol, basis, g, kDiracStep, 1);
  const auto b = verify_closed_form(sol, basis, g, kDiracStep, 3);
  REQUIRE(a.points.size() == b.points.size());
  double mx = 0.0, sum = 0.0;
  for (std::size_t i = 0; i < a.points.size(); ++i) {
    CHECK(a.points[i].left == b.points[i].left);
    CHECK(a.points[i].x == b.points[i].x);
    CHECK(a.points[i].left >= 0.0);
    mx = std::max(mx, a.points[i].left);
    sum += a.points[i].left;
  }
  CHECK(a.max_left == mx);
  CHECK(a.mean_left == doctest::Approx(sum / static_cast<double>(a.points.size())));
  CHECK(io::dump_fixed(to_json(a)) == io::dump_fixed(to_json(b)));
}

TEST_CASE("domain errors") {
  const auto q = zero_quad();
  CHECK_THROWS_AS(residual_system_I(q, 2, 0, 0, {0.0, 0.0}), std::domain_error);
  CHECK_THROWS_AS(residual_system_II(q, 2, 0, 0, {0.0, -1.0}), std::domain_error);
  CHECK_THROWS_AS(residual_system_combined({}, 2, 0, 0, {0.0, 0.0}), std::domain_error);
  CHECK_THROWS_AS(residual_axial_left(q.A, q.B, 0, 2, {0.0, 0.0}), std::domain_error);
  CHECK_THROWS_AS(a2_closed(params(2, 0, 0, 1, 0), 0.0), std::domain_error);
  CHECK_THROWS_AS(a3_closed(params(2, 0, 0, 1, 0), -1.0), std::domain_error);
  CHECK_THROWS_AS(a1_closed(params(2, 0, 0, 1, 0), 0.0), std::domain_error);
  CHECK_THROWS_AS(ClosedFormSolution(params(2, 0, 3, 1, 0)), std::invalid_argument);
  CHECK_THROWS_AS(ClosedFormSolution(params(1, 0, 0, 1, 0)), std::invalid_argument);
  GridSpec bad;
  bad.r_min = 0.0;
  CHECK_THROWS(bad.validate());
  bad = GridSpec{};
  bad.nx = 1;
  CHECK_THROWS(bad.validate());
}
