#pragma once

// Grid sweeps that certify the closed-form axial solutions: numeric Dirac
// residuals of the assembled F in R^{m+1} and residuals of the combined
// (x0, r) system, collected into a ResidualReport.

#include <cstddef>
#include <string>
#include <vector>

#include "axial/axial_system.hpp"
#include "axial/json_io.hpp"
#include "axial/polynomial.hpp"

namespace axial {

/// Rectangle [x0_min, x0_max] x [r_min, r_max] in the half-plane r > 0,
/// sampled on an nx-by-nr tensor grid including the corners.
struct GridSpec {
  double x0_min = 0.0;
  double x0_max = 1.0;
  double r_min = 0.5;
  double r_max = 5.0;
  int nx = 8;
  int nr = 8;

  void validate() const;
  double x0_at(int i) const;
  double r_at(int i) const;
};

struct PointResidual {
  std::size_t basis_index = 0;
  double x0 = 0.0;
  double r = 0.0;
  std::vector<double> x;  // (x0, x1, ..., xm)
  double left = 0.0;      // |left Dirac| / max(1, |F|)
  double right = 0.0;     // |right Dirac| / max(1, |F|)
  double system = 0.0;    // max_i |combined residual_i| / max(1, |A_j|)
};

struct ResidualReport {
  ClosedFormParams params;
  GridSpec grid;
  double h = kDiracStep;
  std::size_t basis_dimension = 0;
  std::vector<PointResidual> points;
  double max_left = 0.0;
  double max_right = 0.0;
  double max_system = 0.0;
  double mean_left = 0.0;
  double mean_right = 0.0;
  double mean_system = 0.0;

  double max_residual() const;
};

/// Reads AXIAL_THREADS; defaults to the hardware concurrency, at least 1.
unsigned thread_count_from_env();

/// Unit direction used for point `index` of a sweep in R^m. Fixed-seed
/// mt19937_64, so identical across runs and platforms.
std::vector<double> sweep_direction(int m, std::size_t index);

/// Evaluates every basis element on every grid point. The point
/// x = (x0, r u) uses the direction u = sweep_direction(m, point index).
ResidualReport verify_closed_form(const ClosedFormSolution& solution, const MonogenicBasis& basis,
                                  const GridSpec& grid, double h = kDiracStep, unsigned threads = 1);

io::Json to_json(const ResidualReport& report);
std::string to_csv(const ResidualReport& report);

}  // namespace axial
