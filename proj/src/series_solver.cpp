#include "axial/series_solver.hpp"

#include <algorithm>
#include <cmath>
#include <map>

#include "axial/axial_system.hpp"

namespace axial {
namespace {

void require_even(const RadialSeries& s, const char* what) {
  const Parity p = s.parity();
  if (p == Parity::Odd || p == Parity::Mixed)
    throw ParityError(std::string(what) + " must contain even powers of r only");
}

int sign_pow(int l) { return l % 2 == 0 ? 1 : -1; }

}  // namespace

SeriesStep series_step(const RadialSeries& a2_prev, const RadialSeries& a2_cur, int m, int k, int l) {
  require_even(a2_prev, "A_{2,n-1}");
  require_even(a2_cur, "A_{2,n}");
  if (a2_prev.trunc() < 2 || a2_cur.trunc() < 2) throw TruncationExhausted("series truncated below order 2");

  const RadialSeries dprev = a2_prev.derivative();
  const RadialSeries dcur = a2_cur.derivative();

  RadialSeries a2_next = -dprev.derivative() - dprev.div_r() * Rational(2 * k + m + 1);
  RadialSeries a3_next = -dcur.div_r();
  RadialSeries a1_next = dcur.mul_r() + a2_cur * Rational(lambda_coeff(m, k, l));
  return SeriesStep{std::move(a1_next), std::move(a2_next), std::move(a3_next)};
}

SeriesSeeds bessel_j_seeds(int m, int k, int l, double c1, int trunc) {
  ClosedFormParams{m, k, l, c1, 0.0}.validate();
  const int twice_alpha = 2 * k + m;
  // a2 = scale * K(r) with K the rational kernel series; a3 = -a2'/r and
  // a1 = lambda a2 - r^2 a3 = lambda a2 + r a2'.
  const RadialSeries a2 = bessel_kernel_series(twice_alpha, trunc);
  const RadialSeries d = a2.derivative();
  SeriesSeeds s;
  s.a2_0 = a2;
  s.a2_1 = a2;
  s.a3_0 = -d.div_r();
  s.a1_0 = a2 * Rational(lambda_coeff(m, k, l)) + d.mul_r();
  s.scale = c1 * bessel_kernel_scale(twice_alpha);
  return s;
}

SeriesSeeds zero_seeds(int trunc) {
  return SeriesSeeds{RadialSeries(trunc), RadialSeries(trunc), RadialSeries(trunc), RadialSeries(trunc), 1.0};
}

double SeriesTable::evaluate(int j, double x0, double r) const {
  const auto& seq = orders.at(j - 1);
  double sum = 0.0;
  double weight = 1.0;  // x0^n / n!
  for (std::size_t n = 0; n < seq.size(); ++n) {
    if (n > 0) weight *= x0 / static_cast<double>(n);
    sum += weight * seq[n](r);
  }
  return scale * sum;
}

bool SeriesTable::is_zero() const {
  for (const auto& seq : orders)
    for (const auto& s : seq)
      if (!s.is_zero()) return false;
  return true;
}

SeriesTable series_solve(const SeriesSeeds& seeds, int steps, int m, int k, int l) {
  if (steps < 1) throw std::invalid_argument("series_solve needs at least one step");
  ClosedFormParams{m, k, l, 1.0, 0.0}.validate();
  const int t = std::min({seeds.a1_0.trunc(), seeds.a2_0.trunc(), seeds.a3_0.trunc(), seeds.a2_1.trunc()});
  if (t < 2 * steps + 2)
    throw TruncationExhausted("truncation " + std::to_string(t) + " is too small for " + std::to_string(steps) +
                              " steps; need at least " + std::to_string(2 * steps + 2));
  require_even(seeds.a1_0, "A_{1,0}");
  require_even(seeds.a3_0, "A_{3,0}");

  SeriesTable table;
  table.m = m;
  table.k = k;
  table.l = l;
  table.steps = steps;
  table.scale = seeds.scale;
  auto& a1 = table.orders[0];
  auto& a2 = table.orders[1];
  auto& a3 = table.orders[2];
  a1.push_back(seeds.a1_0);
  a2.push_back(seeds.a2_0);
  a3.push_back(seeds.a3_0);
  a2.push_back(seeds.a2_1);

  // Step n fills A_{1,n+1}, A_{3,n+1} from A_{2,n} and A_{2,n+1} from A_{2,n-1}.
  const RadialSeries zero(t);
  for (int n = 0; n < steps; ++n) {
    const RadialSeries& prev = n == 0 ? zero : a2[n - 1];
    SeriesStep s = series_step(prev, a2[n], m, k, l);
    a1.push_back(std::move(s.a1_next));
    a3.push_back(std::move(s.a3_next));
    if (n >= 1) a2.push_back(std::move(s.a2_next));
  }
  return table;
}

TaylorProfile TaylorProfile::d_x0() const {
  if (orders.empty()) return {};
  return TaylorProfile{std::vector<RadialSeries>(orders.begin() + 1, orders.end())};
}

TaylorProfile TaylorProfile::d_r() const {
  TaylorProfile out;
  for (const auto& s : orders) out.orders.push_back(s.derivative());
  return out;
}

TaylorProfile TaylorProfile::mul_r() const {
  TaylorProfile out;
  for (const auto& s : orders) out.orders.push_back(s.mul_r());
  return out;
}

TaylorProfile TaylorProfile::div_r() const {
  TaylorProfile out;
  for (const auto& s : orders) out.orders.push_back(s.div_r());
  return out;
}

TaylorProfile TaylorProfile::scaled(const Rational& c) const {
  TaylorProfile out;
  for (const auto& s : orders) out.orders.push_back(s * c);
  return out;
}

TaylorProfile TaylorProfile::constant(const Rational& c, int n_orders, int trunc) {
  TaylorProfile out;
  out.orders.push_back(RadialSeries::constant(c, trunc));
  for (int n = 1; n < n_orders; ++n) out.orders.emplace_back(trunc);
  return out;
}

TaylorProfile operator+(const TaylorProfile& a, const TaylorProfile& b) {
  TaylorProfile out;
  const std::size_t n = std::min(a.orders.size(), b.orders.size());
  for (std::size_t i = 0; i < n; ++i) out.orders.push_back(a.orders[i] + b.orders[i]);
  return out;
}

TaylorProfile operator-(const TaylorProfile& a, const TaylorProfile& b) {
  TaylorProfile out;
  const std::size_t n = std::min(a.orders.size(), b.orders.size());
  for (std::size_t i = 0; i < n; ++i) out.orders.push_back(a.orders[i] - b.orders[i]);
  return out;
}

bool is_zero(const TaylorProfile& p) {
  return std::all_of(p.orders.begin(), p.orders.end(), [](const RadialSeries& s) { return s.is_zero(); });
}

std::array<TaylorProfile, 4> residual_system_I_exact(const TaylorQuad& q, int m, int k, int l) {
  const Rational s = sign_pow(l) * (2 * l - m);
  return {
      q.A.d_x0() - q.B.d_r().mul_r() - q.B.scaled(2 * k + m) + q.C.scaled(s),
      q.B.d_x0() + q.A.d_r().div_r() - q.D.scaled(s),
      q.C.d_x0() - q.D.d_r().mul_r() - q.D.scaled(2 * k + m + 2),
      q.D.d_x0() + q.C.d_r().div_r(),
  };
}

std::array<TaylorProfile, 4> residual_system_II_exact(const TaylorQuad& q, int m, int k, int l) {
  return residual_system_I_exact(TaylorQuad{q.A, q.C, q.B, q.D}, m, k, l);
}

std::array<TaylorProfile, 4> residual_system_combined_exact(const TaylorTriple& t, int m, int k, int l) {
  const Rational s = sign_pow(l) * (2 * l - m);
  return {
      t.A1.d_x0() - t.A2.d_r().mul_r() - t.A2.scaled(lambda_coeff(m, k, l)),
      t.A2.d_x0() + t.A1.d_r().div_r() - t.A3.scaled(s),
      t.A2.d_x0() - t.A3.d_r().mul_r() - t.A3.scaled(2 * k + m + 2),
      t.A3.d_x0() + t.A2.d_r().div_r(),
  };
}

TaylorTriple as_taylor(const SeriesTable& table) {
  return TaylorTriple{TaylorProfile{table.orders[0]}, TaylorProfile{table.orders[1]},
                      TaylorProfile{table.orders[2]}};
}

std::vector<Integer> cnj_extract(int n, int m, int k) {
  if (n < 1) throw std::invalid_argument("cnj_extract needs n >= 1");
  // Formal terms c * A^{(d)} / r^p keyed by (d, p).
  using Formal = std::map<std::pair<int, int>, Rational>;
  auto add = [](Formal& f, int d, int p, const Rational& c) {
    if (c == 0) return;
    Rational& slot = f[{d, p}];
    slot += c;
    if (slot == 0) f.erase({d, p});
  };
  auto differentiate = [&](const Formal& f) {
    Formal out;
    for (const auto& [key, c] : f) {
      const auto [d, p] = key;
      add(out, d + 1, p, c);
      add(out, d, p + 1, -c * p);
    }
    return out;
  };
  const Rational coupling(2 * k + m + 1);

  Formal cur{{{0, 0}, Rational(1)}};
  for (int step = 0; step < n; ++step) {
    const Formal d1 = differentiate(cur);
    const Formal d2 = differentiate(d1);
    Formal next;
    for (const auto& [key, c] : d2) add(next, key.first, key.second, -c);
    for (const auto& [key, c] : d1) add(next, key.first, key.second + 1, -coupling * c);
    cur = std::move(next);
  }

  std::vector<Integer> out(2 * n, 0);
  for (const auto& [key, c] : cur) {
    const auto [d, p] = key;
    const int j = p + 1;
    if (d + p != 2 * n || j < 1 || j > 2 * n)
      throw InvariantViolation("term A^(" + std::to_string(d) + ")/r^" + std::to_string(p) +
                               " does not fit the c_{n,j} expansion");
    if (!is_integer(c)) throw InvariantViolation("non-integer coefficient c_{n,j} = " + to_string(c));
    out[j - 1] = c.get_num();
  }
  return out;
}

RadialSeries apply_cnj(const std::vector<Integer>& c, const RadialSeries& a20) {
  const int two_n = static_cast<int>(c.size());
  std::vector<RadialSeries> derivs{a20};
  for (int d = 1; d <= two_n; ++d) derivs.push_back(derivs.back().derivative());
  RadialSeries out(a20.trunc() - two_n);
  for (int j = 1; j <= two_n; ++j) {
    RadialSeries term = derivs[two_n - j + 1];
    for (int p = 0; p < j - 1; ++p) term = term.div_r();
    out += term * Rational(c[j - 1]);
  }
  return out;
}

}  // namespace axial
