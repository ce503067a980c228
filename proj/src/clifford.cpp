#include "axial/clifford.hpp"

#include <array>
#include <memory>
#include <mutex>

namespace axial {

BladeProduct blade_product(Blade a, Blade b, int m) {
  check_dim(m);
  const std::uint32_t limit = 1u << m;
  if (a.mask >= limit || b.mask >= limit) throw DimensionError("blade mask does not fit in m bits");
  return BladeProduct{reorder_sign(a.mask, b.mask), Blade{a.mask ^ b.mask}};
}

const double* sign_table(int m) {
  if (m < 1 || m > kSignTableMaxDim) throw DimensionError("sign table only cached for m <= 8");
  static std::array<std::once_flag, kSignTableMaxDim + 1> once;
  static std::array<std::unique_ptr<double[]>, kSignTableMaxDim + 1> tables;
  std::call_once(once[m], [m] {
    const std::size_t n = std::size_t{1} << m;
    auto t = std::make_unique<double[]>(n * n);
    for (std::size_t a = 0; a < n; ++a)
      for (std::size_t k = 0; k < n; ++k)
        t[a * n + k] = reorder_sign(static_cast<std::uint32_t>(a), static_cast<std::uint32_t>(a ^ k));
    tables[m] = std::move(t);
  });
  return tables[m].get();
}

}  // namespace axial
