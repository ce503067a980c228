#include "axial/polynomial.hpp"

#include <algorithm>
#include <functional>
#include <tuple>

#include "axial/nullspace.hpp"

namespace axial {

PolyMV PolyMV::constant(const MultivectorQ& c) {
  PolyMV p(c.dim());
  p.add_term(Exponents(c.dim(), 0), c);
  return p;
}

PolyMV PolyMV::monomial(Exponents exps, const MultivectorQ& c) {
  if (static_cast<int>(exps.size()) != c.dim()) throw DimensionError("exponent vector length must equal m");
  PolyMV p(c.dim());
  p.add_term(exps, c);
  return p;
}

PolyMV PolyMV::variable(int m, int j) {
  if (j < 1 || j > m) throw DimensionError("variable index out of range");
  Exponents e(m, 0);
  e[j - 1] = 1;
  return monomial(std::move(e), MultivectorQ::scalar(m, 1));
}

PolyMV PolyMV::position(int m) {
  PolyMV p(m);
  for (int j = 1; j <= m; ++j) {
    Exponents e(m, 0);
    e[j - 1] = 1;
    p.add_term(e, MultivectorQ::generator(m, j));
  }
  return p;
}

void PolyMV::add_term(const Exponents& exps, const MultivectorQ& c) {
  if (static_cast<int>(exps.size()) != m_) throw DimensionError("exponent vector length must equal m");
  if (std::any_of(exps.begin(), exps.end(), [](int e) { return e < 0; }))
    throw std::invalid_argument("negative exponent");
  c.same_dim(MultivectorQ(m_));
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(exps, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

bool PolyMV::is_homogeneous(int k) const {
  for (const auto& [e, c] : terms_) {
    int deg = 0;
    for (int a : e) deg += a;
    if (deg != k) return false;
  }
  return true;
}

bool PolyMV::is_grade(int l) const {
  for (const auto& [e, c] : terms_)
    if (!c.is_homogeneous(l)) return false;
  return true;
}

PolyMV& PolyMV::operator+=(const PolyMV& o) {
  if (o.m_ != m_) throw DimensionError("polynomial dimension mismatch");
  for (const auto& [e, c] : o.terms_) add_term(e, c);
  return *this;
}

PolyMV& PolyMV::operator-=(const PolyMV& o) {
  if (o.m_ != m_) throw DimensionError("polynomial dimension mismatch");
  for (const auto& [e, c] : o.terms_) add_term(e, -c);
  return *this;
}

PolyMV& PolyMV::operator*=(const Rational& s) {
  if (s == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [e, c] : terms_) c *= s;
  return *this;
}

PolyMV operator*(const PolyMV& p, const PolyMV& q) {
  if (p.dim() != q.dim()) throw DimensionError("polynomial dimension mismatch");
  PolyMV out(p.dim());
  Exponents e(p.dim());
  for (const auto& [ep, cp] : p.terms()) {
    for (const auto& [eq, cq] : q.terms()) {
      for (int i = 0; i < p.dim(); ++i) e[i] = ep[i] + eq[i];
      out.add_term(e, cp * cq);
    }
  }
  return out;
}

PolyMV operator*(const MultivectorQ& a, const PolyMV& p) {
  PolyMV out(p.dim());
  for (const auto& [e, c] : p.terms()) out.add_term(e, a * c);
  return out;
}

PolyMV operator*(const PolyMV& p, const MultivectorQ& a) {
  PolyMV out(p.dim());
  for (const auto& [e, c] : p.terms()) out.add_term(e, c * a);
  return out;
}

PolyMV partial(const PolyMV& p, int j) {
  if (j < 1 || j > p.dim()) throw DimensionError("variable index out of range");
  PolyMV out(p.dim());
  for (const auto& [e, c] : p.terms()) {
    if (e[j - 1] == 0) continue;
    Exponents d = e;
    --d[j - 1];
    out.add_term(d, c * Rational(e[j - 1]));
  }
  return out;
}

PolyMV dirac_left(const PolyMV& p) {
  PolyMV out(p.dim());
  for (int j = 1; j <= p.dim(); ++j) out += MultivectorQ::generator(p.dim(), j) * partial(p, j);
  return out;
}

PolyMV dirac_right(const PolyMV& p) {
  PolyMV out(p.dim());
  for (int j = 1; j <= p.dim(); ++j) out += partial(p, j) * MultivectorQ::generator(p.dim(), j);
  return out;
}

PolyMV euler_operator(const PolyMV& p) {
  PolyMV out(p.dim());
  for (const auto& [e, c] : p.terms()) {
    int deg = 0;
    for (int a : e) deg += a;
    out.add_term(e, c * Rational(deg));
  }
  return out;
}

bool euler_check(const PolyMV& p, int k) { return euler_operator(p) == p * Rational(k); }

NumericPoly::NumericPoly(const PolyMV& p) : m_(p.dim()) {
  terms_.reserve(p.term_count());
  for (const auto& [e, c] : p.terms()) terms_.emplace_back(e, to_numeric(c));
}

MultivectorD NumericPoly::operator()(std::span<const double> x) const {
  if (static_cast<int>(x.size()) != m_) throw DimensionError("evaluation point must have m coordinates");
  MultivectorD out(m_);
  for (const auto& [e, c] : terms_) {
    double w = 1.0;
    for (int i = 0; i < m_; ++i)
      for (int a = 0; a < e[i]; ++a) w *= x[i];
    out.add_scaled(w, c);
  }
  return out;
}

std::vector<Exponents> monomials_of_degree(int m, int k) {
  std::vector<Exponents> out;
  if (k < 0) return out;
  Exponents cur(m, 0);
  std::function<void(int, int)> rec = [&](int pos, int remaining) {
    if (pos == m - 1) {
      cur[pos] = remaining;
      out.push_back(cur);
      return;
    }
    for (int a = 0; a <= remaining; ++a) {
      cur[pos] = a;
      rec(pos + 1, remaining - a);
    }
  };
  rec(0, k);
  std::sort(out.begin(), out.end());
  return out;
}

MonogenicBasis generate_pkl(int m, int k, int l) {
  check_dim(m);
  if (m < 2) throw DimensionError("generate_pkl needs m >= 2");
  if (k < 0) throw std::invalid_argument("degree k must be non-negative");
  if (l < 0) throw std::invalid_argument("grade l must be non-negative");
  MonogenicBasis result{m, k, l, {}};
  if (l > m) return result;

  const auto monos = monomials_of_degree(m, k);
  std::vector<std::uint32_t> blades;
  for (std::uint32_t a = 0; a < (1u << m); ++a)
    if (std::popcount(a) == l) blades.push_back(a);

  // Columns: (monomial, blade), monomial-major. Rows: (side, exponent, blade)
  // keys of the Dirac images, numbered in first-seen order.
  struct Column {
    const Exponents* exps;
    std::uint32_t blade;
  };
  std::vector<Column> cols;
  for (const auto& e : monos)
    for (auto b : blades) cols.push_back({&e, b});

  std::map<std::tuple<int, Exponents, std::uint32_t>, std::size_t> row_of;
  std::vector<std::vector<std::pair<std::size_t, Integer>>> entries(cols.size());
  for (std::size_t c = 0; c < cols.size(); ++c) {
    const PolyMV basis_elem = PolyMV::monomial(*cols[c].exps, MultivectorQ::blade(m, Blade{cols[c].blade}));
    const PolyMV images[2] = {dirac_left(basis_elem), dirac_right(basis_elem)};
    for (int side = 0; side < 2; ++side) {
      for (const auto& [e, coeff] : images[side].terms()) {
        for (std::uint32_t a = 0; a < coeff.size(); ++a) {
          if (coeff.coeff(a) == 0) continue;
          auto key = std::make_tuple(side, e, a);
          auto [it, fresh] = row_of.try_emplace(key, row_of.size());
          entries[c].emplace_back(it->second, coeff.coeff(a).get_num());
        }
      }
    }
  }

  IntegerMatrix matrix(row_of.size(), std::vector<Integer>(cols.size(), 0));
  for (std::size_t c = 0; c < cols.size(); ++c)
    for (const auto& [r, v] : entries[c]) matrix[r][c] = v;

  for (const auto& v : integer_nullspace(std::move(matrix), cols.size())) {
    PolyMV p(m);
    for (std::size_t c = 0; c < cols.size(); ++c)
      if (v[c] != 0) p.add_term(*cols[c].exps, MultivectorQ::blade(m, Blade{cols[c].blade}, Rational(v[c])));
    result.basis.push_back(std::move(p));
  }
  return result;
}

bool verify_basis(const MonogenicBasis& b) {
  for (const auto& p : b.basis) {
    if (p.dim() != b.m) return false;
    if (p.is_zero()) return false;
    if (!dirac_left(p).is_zero() || !dirac_right(p).is_zero()) return false;
    if (!p.is_homogeneous(b.k) || !p.is_grade(b.l)) return false;
    if (!euler_check(p, b.k)) return false;
  }
  return true;
}

}  // namespace axial
