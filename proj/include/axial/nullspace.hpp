#pragma once

#include <cstddef>
#include <vector>

#include "axial/rational.hpp"

namespace axial {

using IntegerMatrix = std::vector<std::vector<Integer>>;

/// Integer basis of {v : A v = 0} by fraction-free Gauss-Jordan elimination.
///
/// Row operations are of the form row_i <- p * row_i - a * row_p, followed by
/// division by the row content, so every intermediate stays integral. Pivots
/// are chosen as the first nonzero entry in column order, which makes the
/// result a pure function of the input. One basis vector per free column, in
/// increasing column order, each with coprime entries and a positive first
/// nonzero entry.
std::vector<std::vector<Integer>> integer_nullspace(IntegerMatrix rows, std::size_t ncols);

/// Rank over Q, used to certify linear independence.
std::size_t rational_rank(const std::vector<std::vector<Rational>>& rows);

}  // namespace axial
