#include "axial/bessel.hpp"

#include <cmath>
#include <numbers>
#include <vector>

namespace axial {
namespace {

constexpr double kEulerGamma = 0.57721566490153286060651209008240243;
constexpr double kRescale = 1e250;

void check_order(Order alpha) {
  if (alpha.twice_alpha < 0) throw UnsupportedOrder("negative Bessel orders are not supported");
}

double j_series(Order alpha, double t) {
  const double a = alpha.value();
  const double q = -0.25 * t * t;
  double term = 1.0;
  double sum = 1.0;
  for (int n = 1; n < 500; ++n) {
    term *= q / (n * (n + a));
    sum += term;
    if (std::abs(term) <= 1e-17 * std::abs(sum) && n > 0.5 * t) break;
  }
  return std::pow(0.5 * t, a) / gamma_plus_one(alpha) * sum;
}

int miller_start(double top, double t) {
  const double base = std::max(top, t);
  int n = static_cast<int>(base + 30.0 + 6.0 * std::sqrt(base));
  return n + (n & 1);
}

/// J_n(t) for n = 0..N, normalized by J_0 + 2 sum J_{2k} = 1.
std::vector<double> miller_integer(int nmax, double t) {
  const int start = miller_start(nmax, t);
  std::vector<double> j(start + 2, 0.0);
  j[start + 1] = 0.0;
  j[start] = 1e-280;
  for (int nu = start; nu >= 1; --nu) {
    j[nu - 1] = (2.0 * nu / t) * j[nu] - j[nu + 1];
    if (std::abs(j[nu - 1]) > kRescale)
      for (int i = nu - 1; i <= start; ++i) j[i] /= kRescale;
  }
  double norm = j[0];
  for (int k = 2; k <= start; k += 2) norm += 2.0 * j[k];
  for (double& v : j) v /= norm;
  return j;
}

/// J_{p+1/2}(t) for p = -1..P (index p + 1), normalized against the closed
/// forms J_{1/2} = sqrt(2/(pi t)) sin t and J_{-1/2} = sqrt(2/(pi t)) cos t.
std::vector<double> miller_half(int pmax, double t) {
  const int start = miller_start(pmax + 1, t);
  // index i <-> order i - 1/2, i = 0..start+1
  std::vector<double> j(start + 2, 0.0);
  j[start] = 1e-280;
  for (int i = start; i >= 1; --i) {
    const double nu = i - 0.5;
    j[i - 1] = (2.0 * nu / t) * j[i] - j[i + 1];
    if (std::abs(j[i - 1]) > kRescale)
      for (int s = i - 1; s <= start; ++s) j[s] /= kRescale;
  }
  const double pref = std::sqrt(2.0 / (std::numbers::pi * t));
  const double s = std::sin(t);
  const double c = std::cos(t);
  const double scale = std::abs(s) > std::abs(c) ? pref * s / j[1] : pref * c / j[0];
  for (double& v : j) v *= scale;
  return j;
}

double j_miller(Order alpha, double t) {
  if (alpha.is_integer()) {
    const int n = alpha.twice_alpha / 2;
    return miller_integer(n, t)[n];
  }
  const int p = (alpha.twice_alpha - 1) / 2;
  return miller_half(p, t)[p + 1];
}

double y_integer(int n, double t) {
  const auto j = miller_integer(1, t);
  const double lg = std::log(0.5 * t) + kEulerGamma;
  double s0 = 0.0;
  double s1 = 0.0;
  for (std::size_t k = 1; 2 * k + 1 < j.size(); ++k) {
    const double sign = (k % 2 == 0) ? 1.0 : -1.0;
    s0 += sign * j[2 * k] / k;
    s1 += sign * (j[2 * k - 1] - j[2 * k + 1]) / k;
  }
  // Neumann expansion of Y_0 and its derivative -Y_1.
  const double y0 = (2.0 / std::numbers::pi) * (lg * j[0] - 2.0 * s0);
  if (n == 0) return y0;
  const double y1 = -(2.0 / (std::numbers::pi * t)) * j[0] + (2.0 / std::numbers::pi) * (lg * j[1] + s1);
  double prev = y0;
  double cur = y1;
  for (int nu = 1; nu < n; ++nu) {
    const double next = (2.0 * nu / t) * cur - prev;
    prev = cur;
    cur = next;
  }
  return cur;
}

double y_half(Order alpha, double t) {
  const double pref = std::sqrt(2.0 / (std::numbers::pi * t));
  double prev = pref * std::sin(t);   // Y_{-1/2}
  double cur = -pref * std::cos(t);   // Y_{1/2}
  for (int twice = 1; twice < alpha.twice_alpha; twice += 2) {
    const double nu = 0.5 * twice;
    const double next = (2.0 * nu / t) * cur - prev;
    prev = cur;
    cur = next;
  }
  return cur;
}

}  // namespace

double gamma_plus_one(Order alpha) {
  check_order(alpha);
  if (alpha.is_integer()) {
    double g = 1.0;
    for (int i = 2; i <= alpha.twice_alpha / 2; ++i) g *= i;
    return g;
  }
  // Gamma(1/2) = sqrt(pi); Gamma(x + 1) = x Gamma(x)
  double g = std::sqrt(std::numbers::pi);
  for (int twice = 1; twice < alpha.twice_alpha + 2; twice += 2) g *= 0.5 * twice;
  return g;
}

Order parse_order(const std::string& text) {
  const auto slash = text.find('/');
  try {
    std::size_t used = 0;
    if (slash == std::string::npos) {
      const int n = std::stoi(text, &used);
      if (used != text.size()) throw std::invalid_argument("trailing characters");
      if (n >= 0) return Order::integer(n);
      throw std::invalid_argument("negative");
    }
    const int p = std::stoi(text.substr(0, slash), &used);
    if (used != slash) throw std::invalid_argument("trailing characters");
    const std::string den_text = text.substr(slash + 1);
    const int q = std::stoi(den_text, &used);
    if (used != den_text.size()) throw std::invalid_argument("trailing characters");
    if (p >= 0 && q == 1) return Order::integer(p);
    if (p >= 0 && q == 2) return Order::half(p);
  } catch (const std::logic_error&) {
  }
  throw UnsupportedOrder("order must be an integer or p/2, got '" + text + "'");
}

double bessel_series_cutoff(Order alpha) { return std::max(4.0, alpha.value()); }

double bessel_j(Order alpha, double t) {
  check_order(alpha);
  if (!(t >= 0.0)) throw std::domain_error("bessel_j requires t >= 0");
  if (t == 0.0) return alpha.twice_alpha == 0 ? 1.0 : 0.0;
  if (t <= bessel_series_cutoff(alpha)) return j_series(alpha, t);
  return j_miller(alpha, t);
}

double bessel_y(Order alpha, double t) {
  check_order(alpha);
  if (!(t > 0.0)) throw std::domain_error("bessel_y requires t > 0");
  if (alpha.is_integer()) return y_integer(alpha.twice_alpha / 2, t);
  return y_half(alpha, t);
}

double z_family(BesselKind kind, Order alpha, double t) {
  return kind == BesselKind::J ? bessel_j(alpha, t) : bessel_y(alpha, t);
}

}  // namespace axial
