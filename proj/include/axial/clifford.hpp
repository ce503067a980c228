#pragma once

// Real Clifford algebra R_{0,m}: generators e_1..e_m with e_j^2 = -1 and
// e_j e_k = -e_k e_j for j != k. Blades are bit masks (bit j-1 <=> e_j), so
// the canonical ascending-index order of a blade is implicit in the mask.

#include <bit>
#include <cmath>
#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <type_traits>
#include <vector>

#include "axial/rational.hpp"
#include "axial/simd/kernels.hpp"

namespace axial {

inline constexpr int kMaxDim = 12;

class DimensionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

struct Blade {
  std::uint32_t mask = 0;

  constexpr int grade() const { return std::popcount(mask); }
  constexpr bool is_scalar() const { return mask == 0; }
  /// e_j for 1 <= j <= kMaxDim.
  static constexpr Blade generator(int j) { return Blade{1u << (j - 1)}; }

  friend constexpr bool operator==(Blade, Blade) = default;
  friend constexpr auto operator<=>(Blade, Blade) = default;
};

struct BladeProduct {
  int sign;
  Blade blade;
};

/// Sign of e_A e_B after reordering into e_{A xor B}. Counts the
/// transpositions needed to sort the concatenated index list and one extra
/// -1 for every generator the two blades share.
constexpr int reorder_sign(std::uint32_t a, std::uint32_t b) {
  int swaps = 0;
  for (std::uint32_t rest = b; rest != 0; rest &= rest - 1) {
    const int j = std::countr_zero(rest);
    swaps += std::popcount(a >> (j + 1));
  }
  swaps += std::popcount(a & b);
  return (swaps & 1) ? -1 : 1;
}

BladeProduct blade_product(Blade a, Blade b, int m);

/// Row-major 2^m x 2^m table, entry [a][k] = reorder_sign(a, a ^ k), as
/// doubles for the vector kernels. Built lazily; only for m <= 8.
inline constexpr int kSignTableMaxDim = 8;
const double* sign_table(int m);

inline void check_dim(int m) {
  if (m < 1 || m > kMaxDim) throw DimensionError("dimension m out of range [1, 12]");
}

/// Dense element of R_{0,m}. Coefficients are indexed by blade mask, so the
/// storage always has exactly 2^m entries. S is Rational (exact mode) or
/// double (numeric mode).
template <typename S>
class Multivector {
 public:
  using Scalar = S;

  explicit Multivector(int m) : m_(m) {
    check_dim(m);
    coeffs_.assign(std::size_t{1} << m, S(0));
  }

  static Multivector scalar(int m, const S& value) {
    Multivector x(m);
    x.coeffs_[0] = value;
    return x;
  }

  static Multivector blade(int m, Blade b, const S& value = S(1)) {
    Multivector x(m);
    if (b.mask >= x.size()) throw DimensionError("blade does not fit in dimension m");
    x.coeffs_[b.mask] = value;
    return x;
  }

  /// e_j, 1-based as in the algebra's notation.
  static Multivector generator(int m, int j) {
    if (j < 1 || j > m) throw DimensionError("generator index out of range");
    return blade(m, Blade::generator(j));
  }

  int dim() const { return m_; }
  std::size_t size() const { return coeffs_.size(); }

  const S& operator[](Blade b) const { return coeffs_.at(b.mask); }
  S& operator[](Blade b) { return coeffs_.at(b.mask); }
  const S& coeff(std::size_t mask) const { return coeffs_[mask]; }
  S& coeff(std::size_t mask) { return coeffs_[mask]; }

  const std::vector<S>& coeffs() const { return coeffs_; }
  std::vector<S>& coeffs() { return coeffs_; }

  bool is_zero() const {
    for (const S& c : coeffs_)
      if (c != 0) return false;
    return true;
  }

  /// True when every nonzero coefficient sits on a blade of grade l.
  bool is_homogeneous(int l) const {
    for (std::size_t a = 0; a < coeffs_.size(); ++a)
      if (coeffs_[a] != 0 && std::popcount(a) != l) return false;
    return true;
  }

  Multivector& operator+=(const Multivector& o) {
    same_dim(o);
    if constexpr (std::is_same_v<S, double>) {
      simd::active().axpy(1.0, o.coeffs_.data(), coeffs_.data(), coeffs_.size());
    } else {
      for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
    }
    return *this;
  }

  Multivector& operator-=(const Multivector& o) {
    same_dim(o);
    if constexpr (std::is_same_v<S, double>) {
      simd::active().axpy(-1.0, o.coeffs_.data(), coeffs_.data(), coeffs_.size());
    } else {
      for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] -= o.coeffs_[i];
    }
    return *this;
  }

  Multivector& operator*=(const S& s) {
    for (S& c : coeffs_) c *= s;
    return *this;
  }

  /// this += s * o
  Multivector& add_scaled(const S& s, const Multivector& o) {
    same_dim(o);
    if constexpr (std::is_same_v<S, double>) {
      simd::active().axpy(s, o.coeffs_.data(), coeffs_.data(), coeffs_.size());
    } else {
      for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] += s * o.coeffs_[i];
    }
    return *this;
  }

  friend Multivector operator+(Multivector a, const Multivector& b) { return a += b; }
  friend Multivector operator-(Multivector a, const Multivector& b) { return a -= b; }
  friend Multivector operator-(Multivector a) {
    for (S& c : a.coeffs_) c = -c;
    return a;
  }
  friend Multivector operator*(Multivector a, const S& s) { return a *= s; }
  friend Multivector operator*(const S& s, Multivector a) { return a *= s; }

  friend bool operator==(const Multivector& a, const Multivector& b) {
    return a.m_ == b.m_ && a.coeffs_ == b.coeffs_;
  }

  void same_dim(const Multivector& o) const {
    if (o.m_ != m_) throw DimensionError("multivector dimension mismatch");
  }

 private:
  int m_;
  std::vector<S> coeffs_;
};

using MultivectorQ = Multivector<Rational>;
using MultivectorD = Multivector<double>;

template <typename S>
Multivector<S> geometric_product(const Multivector<S>& x, const Multivector<S>& y) {
  x.same_dim(y);
  const int m = x.dim();
  const std::size_t n = x.size();
  Multivector<S> out(m);
  if constexpr (std::is_same_v<S, double>) {
    const auto& k = simd::active();
    if (m <= kSignTableMaxDim) {
      const double* table = sign_table(m);
      for (std::size_t a = 0; a < n; ++a) {
        const double xa = x.coeff(a);
        if (xa == 0.0) continue;
        k.xor_signed_axpy(xa, table + a * n, y.coeffs().data(), static_cast<std::uint32_t>(a),
                          out.coeffs().data(), n);
      }
      return out;
    }
  }
  for (std::size_t a = 0; a < n; ++a) {
    const S& xa = x.coeff(a);
    if (xa == 0) continue;
    for (std::size_t b = 0; b < n; ++b) {
      const S& yb = y.coeff(b);
      if (yb == 0) continue;
      if (reorder_sign(static_cast<std::uint32_t>(a), static_cast<std::uint32_t>(b)) > 0)
        out.coeff(a ^ b) += xa * yb;
      else
        out.coeff(a ^ b) -= xa * yb;
    }
  }
  return out;
}

template <typename S>
Multivector<S> operator*(const Multivector<S>& x, const Multivector<S>& y) {
  return geometric_product(x, y);
}

template <typename S>
Multivector<S> grade_project(const Multivector<S>& x, int k) {
  if (k < 0 || k > x.dim()) throw std::out_of_range("grade out of range [0, m]");
  Multivector<S> out(x.dim());
  for (std::size_t a = 0; a < x.size(); ++a)
    if (std::popcount(a) == k) out.coeff(a) = x.coeff(a);
  return out;
}

/// sum_j e_j P e_j.
template <typename S>
Multivector<S> sandwich_sum(const Multivector<S>& p) {
  Multivector<S> out(p.dim());
  for (int j = 1; j <= p.dim(); ++j) {
    const auto ej = Multivector<S>::generator(p.dim(), j);
    out += ej * p * ej;
  }
  return out;
}

/// (-1)^l (2l - m), the eigenvalue of sandwich_sum on l-vectors.
constexpr int sandwich_eigenvalue(int m, int l) { return (l % 2 == 0 ? 1 : -1) * (2 * l - m); }

/// Euclidean norm over the 2^m blade coefficients.
inline double norm(const MultivectorD& x) {
  return std::sqrt(simd::active().dot(x.coeffs().data(), x.coeffs().data(), x.size()));
}

inline MultivectorD to_numeric(const MultivectorQ& x) {
  MultivectorD out(x.dim());
  for (std::size_t a = 0; a < x.size(); ++a) out.coeff(a) = x.coeff(a).get_d();
  return out;
}

/// 1-vector sum_j v[j-1] e_j.
template <typename S>
Multivector<S> vector_from(int m, const std::vector<S>& v) {
  if (static_cast<int>(v.size()) != m) throw DimensionError("vector length must equal m");
  Multivector<S> out(m);
  for (int j = 1; j <= m; ++j) out[Blade::generator(j)] = v[j - 1];
  return out;
}

}  // namespace axial
