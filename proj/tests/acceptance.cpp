// Acceptance run: one PASS/FAIL line per criterion, exit status 0 iff all
// pass. Tolerances and grids are fixed here and are not tunable.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <random>
#include <string>

#include "axial/axial_system.hpp"
#include "axial/clifford.hpp"
#include "axial/polynomial.hpp"
#include "axial/series_solver.hpp"
#include "axial/simd/kernels.hpp"
#include "axial/verify.hpp"
#include "generators.hpp"

using namespace axial;

namespace {

struct Outcome {
  bool pass = true;
  std::string detail;
};

using Clock = std::chrono::steady_clock;

bool report(int id, const char* title, const std::function<Outcome()>& body, double budget_s) {
  const auto t0 = Clock::now();
  Outcome o;
  try {
    o = body();
  } catch (const std::exception& e) {
    o = {false, std::string("exception: ") + e.what()};
  }
  const double secs = std::chrono::duration<double>(Clock::now() - t0).count();
  if (budget_s > 0 && secs > budget_s) {
    o.pass = false;
    o.detail += " [over time budget " + std::to_string(budget_s) + " s]";
  }
  std::printf("criterion %2d %-4s %-44s %8.2f s  %s\n", id, o.pass ? "PASS" : "FAIL", title, secs, o.detail.c_str());
  std::fflush(stdout);
  return o.pass;
}

std::string fmt(const char* f, double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, f, v);
  return buf;
}

long binom(int n, int k) {
  if (k < 0 || k > n) return 0;
  long r = 1;
  for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

ClosedFormParams params(int m, int k, int l, double c1, double c2) {
  ClosedFormParams p;
  p.m = m;
  p.k = k;
  p.l = l;
  p.c1 = c1;
  p.c2 = c2;
  return p;
}

Outcome algebra_axioms() {
  std::mt19937_64 rng(1);
  for (int m = 2; m <= 5; ++m) {
    for (int trial = 0; trial < 1000; ++trial) {
      const auto x = testgen::random_multivector_q(rng, m);
      const auto y = testgen::random_multivector_q(rng, m);
      const auto z = testgen::random_multivector_q(rng, m);
      if ((x * y) * z != x * (y * z)) return {false, "associativity, m = " + std::to_string(m)};
      if (x * (y + z) != x * y + x * z || (x + y) * z != x * z + y * z)
        return {false, "distributivity, m = " + std::to_string(m)};
    }
    for (int j = 1; j <= m; ++j) {
      const auto ej = MultivectorQ::generator(m, j);
      if (ej * ej != MultivectorQ::scalar(m, -1)) return {false, "e_j^2 != -1"};
      for (int k = j + 1; k <= m; ++k) {
        const auto ek = MultivectorQ::generator(m, k);
        if (!(ej * ek + ek * ej).is_zero()) return {false, "anticommutation"};
      }
    }
  }
  return {true, "4000 triples exact"};
}

Outcome sandwich() {
  int count = 0;
  for (int m = 2; m <= 5; ++m)
    for (std::uint32_t a = 0; a < (1u << m); ++a, ++count) {
      const auto p = MultivectorQ::blade(m, Blade{a});
      const int l = std::popcount(a);
      const int sgn = l % 2 == 0 ? 1 : -1;
      if (sandwich_sum(p) != p * Rational(sgn * (2 * l - m))) return {false, "blade mask " + std::to_string(a)};
    }
  return {true, std::to_string(count) + " blades exact"};
}

Outcome leibniz() {
  std::mt19937_64 rng(3);
  for (int m = 2; m <= 3; ++m) {
    const PolyMV xv = PolyMV::position(m);
    for (int trial = 0; trial < 100; ++trial) {
      const PolyMV f = testgen::random_poly(rng, m);
      const PolyMV common = f * Rational(-m) - euler_operator(f) * Rational(2);
      if (dirac_left(xv * f) != common - xv * dirac_left(f)) return {false, "left rule"};
      if (dirac_right(f * xv) != common - dirac_right(f) * xv) return {false, "right rule"};
    }
  }
  return {true, "200 polynomials exact"};
}

Outcome pkl_generation() {
  std::string dims;
  for (int m = 2; m <= 3; ++m)
    for (int k = 0; k <= 3; ++k)
      for (int l = 0; l <= m; ++l) {
        const auto b = generate_pkl(m, k, l);
        if (!verify_basis(b)) return {false, "verify_basis failed"};
        if (k == 0 && static_cast<long>(b.dimension()) != binom(m, l)) return {false, "k = 0 dimension"};
        dims += std::to_string(b.dimension()) + (l == m ? ";" : ",");
      }
  return {true, "dims " + dims};
}

Outcome bessel_identities() {
  double rec = 0.0, der = 0.0, wder = 0.0;
  const double h = 1e-4;
  for (int twice = 2; twice <= 12; ++twice) {
    const Order a{twice};
    for (double t : {0.5, 1.0, 2.0, 5.0, 10.0})
      for (BesselKind kind : {BesselKind::J, BesselKind::Y}) {
        const double z = z_family(kind, a, t), zm = z_family(kind, a.shifted(-1), t), zp = z_family(kind, a.shifted(1), t);
        const double scale = std::max({std::abs(2 * a.value() / t * z), std::abs(zm), std::abs(zp)});
        rec = std::max(rec, std::abs(2 * a.value() / t * z - zm - zp) / scale);
        const double dz = central_diff5([&](double s) { return z_family(kind, a, s); }, t, h);
        der = std::max(der, std::abs(2 * dz - zm + zp));
        const double dw =
            central_diff5([&](double s) { return std::pow(s, -a.value()) * z_family(kind, a, s); }, t, h);
        wder = std::max(wder, std::abs(dw + std::pow(t, -a.value()) * zp));
      }
  }
  return {rec <= 1e-10 && der <= 1e-7 && wder <= 1e-7,
          "recurrence " + fmt("%.2e", rec) + " rel, derivative " + fmt("%.2e", der) + ", weighted " + fmt("%.2e", wder)};
}

Outcome closed_form_system() {
  double worst = 0.0;
  for (int m = 2; m <= 3; ++m)
    for (int k = 0; k <= 2; ++k)
      for (int l = 0; l <= m; ++l)
        for (auto [c1, c2] : {std::pair{1.0, 0.0}, std::pair{0.0, 1.0}}) {
          const ClosedFormSolution sol(params(m, k, l, c1, c2));
          const auto tri = sol.triple();
          for (double r : {0.5, 1.0, 2.0, 5.0})
            for (double v : residual_system_combined(tri, m, k, l, {0.0, r})) worst = std::max(worst, std::abs(v));
        }
  return {worst <= 1e-7, "max |residual| " + fmt("%.2e", worst)};
}

Outcome headline() {
  double worst = 0.0, weakest_mutation = INFINITY;
  int configs = 0;
  GridSpec g;  // [0,1] x [0.5,5], 8 x 8
  for (int m = 2; m <= 3; ++m)
    for (int k = 0; k <= 2; ++k)
      for (int l = 0; l <= m; ++l) {
        const auto basis = generate_pkl(m, k, l);
        if (basis.dimension() == 0) continue;
        for (auto [c1, c2] : {std::pair{1.0, 0.0}, std::pair{0.0, 1.0}}) {
          ++configs;
          ClosedFormSolution sol(params(m, k, l, c1, c2));
          const auto rep = verify_closed_form(sol, basis, g, kDiracStep, thread_count_from_env());
          worst = std::max({worst, rep.max_left, rep.max_right});
          sol.scale[1] = 1.01;
          const auto bad = verify_closed_form(sol, basis, g, kDiracStep, thread_count_from_env());
          weakest_mutation = std::min(weakest_mutation, std::max({bad.max_left, bad.max_right, bad.max_system}));
        }
      }
  return {worst <= 1e-6 && weakest_mutation > 1e-3,
          std::to_string(configs) + " configs, max Dirac " + fmt("%.2e", worst) + ", weakest mutation " +
              fmt("%.2e", weakest_mutation)};
}

Outcome series_agreement() {
  double worst = 0.0;
  bool fixed_point = true;
  for (int m = 2; m <= 3; ++m)
    for (int k = 0; k <= 2; ++k) {
      const int T = 40;
      const auto kern = bessel_kernel_series(2 * k + m, T);
      if (!(series_step(kern, kern, m, k, 0).a2_next == kern.truncated(T - 2))) fixed_point = false;
      for (int l = 0; l <= m; ++l) {
        const auto table = series_solve(bessel_j_seeds(m, k, l, 1.0, T), 12, m, k, l);
        const auto p = params(m, k, l, 1.0, 0.0);
        for (int i = 0; i <= 10; ++i)
          for (int j = 0; j <= 10; ++j) {
            const double x0 = 0.05 * i, r = 0.5 + 0.15 * j;
            worst = std::max(worst, std::abs(table.evaluate(2, x0, r) - std::exp(x0) * a2_closed(p, r)));
          }
      }
    }
  return {worst <= 1e-10 && fixed_point,
          "max |diff| " + fmt("%.2e", worst) + (fixed_point ? ", fixed point exact" : ", fixed point broken")};
}

Outcome cnj_integrality() {
  for (int m = 2; m <= 4; ++m)
    for (int k = 0; k <= 2; ++k) {
      const auto c1 = cnj_extract(1, m, k);
      if (c1 != std::vector<Integer>{-1, -(2 * k + m + 1)}) return {false, "n = 1 values"};
      for (int n = 2; n <= 6; ++n) cnj_extract(n, m, k);  // throws on a non-integer
    }
  const auto c = cnj_extract(2, 2, 0);
  std::string s;
  for (const auto& v : c) s += v.get_str() + " ";
  return {true, "n <= 6 integral; c_2(m=2,k=0) = " + s};
}

Outcome b_equals_c() {
  const Rational eps(5, 3);
  for (int m = 2; m <= 3; ++m)
    for (int k = 0; k <= 2; ++k)
      for (int l = 0; l <= m; ++l) {
        const auto t = as_taylor(series_solve(bessel_j_seeds(m, k, l, 1.0, 24), 8, m, k, l));
        const auto shift = TaylorProfile::constant(eps, static_cast<int>(t.A2.orders.size()), 24);
        const TaylorQuad q{t.A1, t.A2 + shift, t.A2, t.A3};
        const auto d = residual_system_II_exact(q, m, k, l)[0] - residual_system_I_exact(q, m, k, l)[0];
        const int sgn = l % 2 == 0 ? 1 : -1;
        const auto expect = TaylorProfile::constant(Rational(2 * k + m + sgn * (2 * l - m)) * eps,
                                                    static_cast<int>(d.orders.size()), 24);
        if (d.orders.empty() || !is_zero(d - expect) || d.orders[0].coeff(0) != expect.orders[0].coeff(0))
          return {false, "(m,k,l) = (" + std::to_string(m) + "," + std::to_string(k) + "," + std::to_string(l) + ")"};
      }
  return {true, "exact on 27 (m,k,l)"};
}

}  // namespace

int main() {
  std::printf("kernels: %s\n", std::string(simd::isa_name(simd::active().isa)).c_str());
  bool ok = true;
  ok &= report(1, "algebra axioms", algebra_axioms, 10.0);
  ok &= report(2, "sandwich identity", sandwich, 0);
  ok &= report(3, "Leibniz rules", leibniz, 0);
  ok &= report(4, "P_{k,l} generation", pkl_generation, 60.0);
  ok &= report(5, "Bessel identities", bessel_identities, 0);
  ok &= report(6, "closed-form combined system", closed_form_system, 0);
  ok &= report(7, "two-sided monogenicity of F", headline, 300.0);
  ok &= report(8, "series vs closed form", series_agreement, 0);
  ok &= report(9, "c_{n,j} integrality", cnj_integrality, 0);
  ok &= report(10, "B = C consistency", b_equals_c, 0);
  std::printf("%s\n", ok ? "ALL PASS" : "SOME CRITERIA FAILED");
  return ok ? 0 : 1;
}
