#include "axial/nullspace.hpp"

#include <stdexcept>

namespace axial {
namespace {

void reduce_content(std::vector<Integer>& row) {
  Integer g = 0;
  for (const Integer& v : row) {
    if (v != 0) {
      mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), v.get_mpz_t());
      if (g == 1) return;
    }
  }
  if (g > 1)
    for (Integer& v : row) mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), g.get_mpz_t());
}

void normalize_sign(std::vector<Integer>& v) {
  for (const Integer& x : v) {
    if (x == 0) continue;
    if (x < 0)
      for (Integer& y : v) y = -y;
    return;
  }
}

}  // namespace

std::vector<std::vector<Integer>> integer_nullspace(IntegerMatrix rows, std::size_t ncols) {
  for (const auto& r : rows)
    if (r.size() != ncols) throw std::invalid_argument("ragged matrix");

  std::vector<std::size_t> pivot_col;  // pivot_col[r] for r < rank
  std::size_t rank = 0;
  for (std::size_t col = 0; col < ncols && rank < rows.size(); ++col) {
    std::size_t sel = rank;
    while (sel < rows.size() && rows[sel][col] == 0) ++sel;
    if (sel == rows.size()) continue;
    std::swap(rows[rank], rows[sel]);
    reduce_content(rows[rank]);
    const Integer piv = rows[rank][col];
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (i == rank || rows[i][col] == 0) continue;
      const Integer factor = rows[i][col];
      for (std::size_t j = 0; j < ncols; ++j) rows[i][j] = piv * rows[i][j] - factor * rows[rank][j];
      reduce_content(rows[i]);
    }
    pivot_col.push_back(col);
    ++rank;
  }

  std::vector<bool> is_pivot(ncols, false);
  for (std::size_t c : pivot_col) is_pivot[c] = true;

  std::vector<std::vector<Integer>> basis;
  for (std::size_t f = 0; f < ncols; ++f) {
    if (is_pivot[f]) continue;
    Integer scale = 1;
    for (std::size_t r = 0; r < rank; ++r)
      if (rows[r][f] != 0) mpz_lcm(scale.get_mpz_t(), scale.get_mpz_t(), rows[r][pivot_col[r]].get_mpz_t());
    std::vector<Integer> v(ncols, 0);
    v[f] = scale;
    for (std::size_t r = 0; r < rank; ++r) {
      if (rows[r][f] == 0) continue;
      Integer q;
      mpz_divexact(q.get_mpz_t(), scale.get_mpz_t(), rows[r][pivot_col[r]].get_mpz_t());
      v[pivot_col[r]] = -rows[r][f] * q;
    }
    reduce_content(v);
    normalize_sign(v);
    basis.push_back(std::move(v));
  }
  return basis;
}

std::size_t rational_rank(const std::vector<std::vector<Rational>>& input) {
  auto rows = input;
  if (rows.empty()) return 0;
  const std::size_t ncols = rows.front().size();
  std::size_t rank = 0;
  for (std::size_t col = 0; col < ncols && rank < rows.size(); ++col) {
    std::size_t sel = rank;
    while (sel < rows.size() && rows[sel][col] == 0) ++sel;
    if (sel == rows.size()) continue;
    std::swap(rows[rank], rows[sel]);
    for (std::size_t i = rank + 1; i < rows.size(); ++i) {
      if (rows[i][col] == 0) continue;
      const Rational f = rows[i][col] / rows[rank][col];
      for (std::size_t j = col; j < ncols; ++j) rows[i][j] -= f * rows[rank][j];
    }
    ++rank;
  }
  return rank;
}

}  // namespace axial
