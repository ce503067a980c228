#include "axial/radial_series.hpp"

#include "axial/bessel.hpp"

#include <algorithm>
#include <cmath>

namespace axial {

RadialSeries RadialSeries::constant(const Rational& c, int trunc) { return monomial(0, c, trunc); }

RadialSeries RadialSeries::monomial(int exponent, const Rational& c, int trunc) {
  RadialSeries s(trunc);
  s.set(exponent, c);
  return s;
}

Rational RadialSeries::coeff(int e) const {
  auto it = coeffs_.find(e);
  return it == coeffs_.end() ? Rational(0) : it->second;
}

void RadialSeries::set(int e, const Rational& c) {
  if (e < 0) throw std::invalid_argument("negative exponent in radial series");
  if (e > trunc_) throw std::out_of_range("exponent beyond truncation");
  if (c == 0)
    coeffs_.erase(e);
  else
    coeffs_[e] = c;
}

Parity RadialSeries::parity() const {
  bool even = false;
  bool odd = false;
  for (const auto& [e, c] : coeffs_) (e % 2 == 0 ? even : odd) = true;
  if (even && odd) return Parity::Mixed;
  if (even) return Parity::Even;
  if (odd) return Parity::Odd;
  return Parity::Zero;
}

RadialSeries RadialSeries::derivative() const {
  if (trunc_ == 0) throw std::out_of_range("derivative of a series truncated at order 0");
  RadialSeries out(trunc_ - 1);
  for (const auto& [e, c] : coeffs_)
    if (e > 0) out.coeffs_[e - 1] = c * e;
  return out;
}

RadialSeries RadialSeries::mul_r() const {
  RadialSeries out(trunc_ + 1);
  for (const auto& [e, c] : coeffs_) out.coeffs_[e + 1] = c;
  return out;
}

RadialSeries RadialSeries::div_r() const {
  if (trunc_ == 0) throw std::out_of_range("division by r of a series truncated at order 0");
  if (coeffs_.count(0) != 0) throw ParityError("division by r of a series with nonzero constant term");
  RadialSeries out(trunc_ - 1);
  for (const auto& [e, c] : coeffs_) out.coeffs_[e - 1] = c;
  return out;
}

RadialSeries RadialSeries::truncated(int t) const {
  if (t > trunc_) throw std::out_of_range("cannot extend truncation");
  RadialSeries out(t);
  for (const auto& [e, c] : coeffs_)
    if (e <= t) out.coeffs_[e] = c;
  return out;
}

RadialSeries& RadialSeries::operator+=(const RadialSeries& o) {
  trunc_ = std::min(trunc_, o.trunc_);
  for (auto it = coeffs_.begin(); it != coeffs_.end();)
    it = it->first > trunc_ ? coeffs_.erase(it) : std::next(it);
  for (const auto& [e, c] : o.coeffs_) {
    if (e > trunc_) continue;
    Rational& slot = coeffs_[e];
    slot += c;
    if (slot == 0) coeffs_.erase(e);
  }
  return *this;
}

RadialSeries& RadialSeries::operator-=(const RadialSeries& o) { return *this += o * Rational(-1); }

RadialSeries& RadialSeries::operator*=(const Rational& s) {
  if (s == 0) {
    coeffs_.clear();
    return *this;
  }
  for (auto& [e, c] : coeffs_) c *= s;
  return *this;
}

bool RadialSeries::agrees_with(const RadialSeries& o) const {
  const int t = std::min(trunc_, o.trunc_);
  return truncated(t).coeffs_ == o.truncated(t).coeffs_;
}

double RadialSeries::operator()(double r) const {
  // Horner over the full exponent range, highest first.
  if (coeffs_.empty()) return 0.0;
  double acc = 0.0;
  int e = coeffs_.rbegin()->first;
  auto it = coeffs_.rbegin();
  for (; e >= 0; --e) {
    acc *= r;
    if (it != coeffs_.rend() && it->first == e) {
      acc += it->second.get_d();
      ++it;
    }
  }
  return acc;
}

RadialSeries bessel_kernel_series(int twice_alpha, int trunc) {
  if (twice_alpha < 0) throw std::invalid_argument("negative order");
  RadialSeries s(trunc);
  Rational term = 1;
  const Rational alpha(twice_alpha, 2);
  for (int n = 0; 2 * n <= trunc; ++n) {
    if (n > 0) term *= Rational(-1, 4) / (Rational(n) * (alpha + n));
    s.set(2 * n, term);
  }
  return s;
}

double bessel_kernel_scale(int twice_alpha) {
  const Order alpha = Order::half(twice_alpha);
  return 1.0 / (std::pow(2.0, alpha.value()) * gamma_plus_one(alpha));
}

}  // namespace axial
