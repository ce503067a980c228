#pragma once

// Bessel functions of the first and second kind for non-negative integer and
// half-integer orders on t >= 0. These are the only orders the axial
// solutions use: alpha = k + m/2 and alpha + 1.

#include <stdexcept>
#include <string>

namespace axial {

class UnsupportedOrder : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Order alpha stored as 2*alpha so half-integers stay exact.
struct Order {
  int twice_alpha = 0;

  static constexpr Order integer(int n) { return Order{2 * n}; }
  static constexpr Order half(int twice) { return Order{twice}; }
  /// alpha = k + m/2
  static constexpr Order axial(int k, int m) { return Order{2 * k + m}; }

  constexpr double value() const { return 0.5 * twice_alpha; }
  constexpr bool is_integer() const { return twice_alpha % 2 == 0; }
  constexpr Order shifted(int by) const { return Order{twice_alpha + 2 * by}; }

  friend constexpr bool operator==(Order, Order) = default;
};

/// Parses "3", "3/2", "7/2". Anything other than a denominator of 1 or 2 is
/// rejected.
Order parse_order(const std::string& text);

enum class BesselKind { J, Y };

/// J_alpha(t). t = 0 is allowed (J_0(0) = 1, otherwise 0).
double bessel_j(Order alpha, double t);

/// Y_alpha(t), t > 0.
double bessel_y(Order alpha, double t);

double z_family(BesselKind kind, Order alpha, double t);

/// Gamma(alpha + 1), exact ladder for integer and half-integer alpha >= 0.
double gamma_plus_one(Order alpha);

/// Upper end of the argument range where bessel_j uses the ascending series.
double bessel_series_cutoff(Order alpha);

}  // namespace axial
