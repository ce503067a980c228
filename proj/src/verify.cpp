#include "axial/verify.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <random>
#include <sstream>
#include <thread>

namespace axial {

void GridSpec::validate() const {
  if (!(r_min > 0.0)) throw std::invalid_argument("r range must lie in r > 0");
  if (!(r_max >= r_min)) throw std::invalid_argument("r range is empty");
  if (!(x0_max >= x0_min)) throw std::invalid_argument("x0 range is empty");
  if (nx < 2 || nr < 2) throw std::invalid_argument("grid counts must be at least 2");
}

double GridSpec::x0_at(int i) const { return x0_min + (x0_max - x0_min) * i / (nx - 1); }
double GridSpec::r_at(int i) const { return r_min + (r_max - r_min) * i / (nr - 1); }

double ResidualReport::max_residual() const { return std::max({max_left, max_right, max_system}); }

unsigned thread_count_from_env() {
  if (const char* env = std::getenv("AXIAL_THREADS")) {
    const long v = std::strtol(env, nullptr, 10);
    if (v >= 1) return static_cast<unsigned>(v);
  }
  return std::max(1u, std::thread::hardware_concurrency());
}

std::vector<double> sweep_direction(int m, std::size_t index) {
  std::mt19937_64 gen(0x5eedULL + index);
  std::vector<double> u(m);
  double n2 = 0.0;
  do {
    n2 = 0.0;
    for (double& v : u) {
      v = static_cast<double>(gen() >> 11) * 0x1.0p-52 - 1.0;
      n2 += v * v;
    }
  } while (n2 < 1e-4);
  const double inv = 1.0 / std::sqrt(n2);
  for (double& v : u) v *= inv;
  return u;
}

ResidualReport verify_closed_form(const ClosedFormSolution& solution, const MonogenicBasis& basis,
                                  const GridSpec& grid, double h, unsigned threads) {
  grid.validate();
  const auto& prm = solution.params;
  if (basis.m != prm.m || basis.k != prm.k || basis.l != prm.l)
    throw std::invalid_argument("basis (m, k, l) differs from the solution parameters");

  ResidualReport report;
  report.params = prm;
  report.grid = grid;
  report.h = h;
  report.basis_dimension = basis.dimension();

  const std::size_t per_basis = static_cast<std::size_t>(grid.nx) * grid.nr;
  report.points.resize(per_basis * basis.dimension());
  for (std::size_t b = 0; b < basis.dimension(); ++b) {
    for (int ix = 0; ix < grid.nx; ++ix) {
      for (int ir = 0; ir < grid.nr; ++ir) {
        const std::size_t local = static_cast<std::size_t>(ix) * grid.nr + ir;
        PointResidual& pt = report.points[b * per_basis + local];
        pt.basis_index = b;
        pt.x0 = grid.x0_at(ix);
        pt.r = grid.r_at(ir);
        const auto u = sweep_direction(prm.m, local);
        pt.x.assign(1, pt.x0);
        for (double v : u) pt.x.push_back(pt.r * v);
      }
    }
  }

  std::vector<AxialFunction> fields;
  for (const auto& p : basis.basis) fields.emplace_back(solution, p);
  const AxialTriple triple = solution.triple();

  auto work = [&](std::size_t begin, std::size_t end) {
    for (std::size_t i = begin; i < end; ++i) {
      PointResidual& pt = report.points[i];
      const AxialFunction& F = fields[pt.basis_index];
      const MultivectorField field = [&F](std::span<const double> x) { return F(x); };
      const DiracResidual res = dirac_residual_numeric(field, pt.x, h);
      const double scale = std::max(1.0, norm(F(pt.x)));
      pt.left = norm(res.left) / scale;
      pt.right = norm(res.right) / scale;

      const HalfPlanePoint at{pt.x0, pt.r};
      const auto sys = residual_system_combined(triple, prm.m, prm.k, prm.l, at);
      const double sys_scale =
          std::max({1.0, std::abs(triple.A1(pt.x0, pt.r)), std::abs(triple.A2(pt.x0, pt.r)),
                    std::abs(triple.A3(pt.x0, pt.r))});
      double worst = 0.0;
      for (double v : sys) worst = std::max(worst, std::abs(v));
      pt.system = worst / sys_scale;
    }
  };

  const std::size_t total = report.points.size();
  const unsigned nthreads = std::max(1u, std::min<unsigned>(threads, static_cast<unsigned>(total)));
  if (nthreads <= 1) {
    work(0, total);
  } else {
    std::vector<std::thread> pool;
    const std::size_t chunk = (total + nthreads - 1) / nthreads;
    for (unsigned t = 0; t < nthreads; ++t) {
      const std::size_t begin = t * chunk;
      const std::size_t end = std::min(total, begin + chunk);
      if (begin >= end) break;
      pool.emplace_back(work, begin, end);
    }
    for (auto& th : pool) th.join();
  }

  for (const auto& pt : report.points) {
    report.max_left = std::max(report.max_left, pt.left);
    report.max_right = std::max(report.max_right, pt.right);
    report.max_system = std::max(report.max_system, pt.system);
    report.mean_left += pt.left;
    report.mean_right += pt.right;
    report.mean_system += pt.system;
  }
  if (total > 0) {
    report.mean_left /= static_cast<double>(total);
    report.mean_right /= static_cast<double>(total);
    report.mean_system /= static_cast<double>(total);
  }
  return report;
}

io::Json to_json(const ResidualReport& report) {
  io::Json j;
  const auto& p = report.params;
  j["params"] = {{"m", p.m}, {"k", p.k}, {"l", p.l}, {"c1", p.c1}, {"c2", p.c2}, {"lambda", p.lambda()}};
  const auto& g = report.grid;
  j["grid"] = {{"x0_range", {g.x0_min, g.x0_max}}, {"r_range", {g.r_min, g.r_max}}, {"nx", g.nx}, {"nr", g.nr},
               {"h", report.h}};
  j["basis_dimension"] = report.basis_dimension;
  j["max_left"] = report.max_left;
  j["max_right"] = report.max_right;
  j["max_system"] = report.max_system;
  j["mean_left"] = report.mean_left;
  j["mean_right"] = report.mean_right;
  j["mean_system"] = report.mean_system;
  io::Json pts = io::Json::array();
  for (const auto& pt : report.points) {
    io::Json e;
    e["basis"] = pt.basis_index;
    e["x"] = pt.x;
    e["left"] = pt.left;
    e["right"] = pt.right;
    e["system"] = pt.system;
    pts.push_back(std::move(e));
  }
  j["points"] = std::move(pts);
  return j;
}

std::string to_csv(const ResidualReport& report) {
  std::ostringstream out;
  out << "basis,x0,r";
  for (int j = 1; j <= report.params.m; ++j) out << ",x" << j;
  out << ",left,right,system\n";
  for (const auto& pt : report.points) {
    out << pt.basis_index << ',' << io::format_double(pt.x0) << ',' << io::format_double(pt.r);
    for (std::size_t i = 1; i < pt.x.size(); ++i) out << ',' << io::format_double(pt.x[i]);
    out << ',' << io::format_double(pt.left) << ',' << io::format_double(pt.right) << ','
        << io::format_double(pt.system) << '\n';
  }
  return out.str();
}

}  // namespace axial
