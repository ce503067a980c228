#include "commands.hpp"

#include <cmath>
#include <cstdio>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "axial/bessel.hpp"
#include "axial/json_io.hpp"
#include "axial/polynomial.hpp"
#include "axial/series_solver.hpp"

namespace axial::cli {

namespace {

/// Reads a flat JSON object as CLI11 configuration. Keys are long option
/// names without dashes; arrays supply multiple values.
class JsonConfig : public CLI::Config {
 public:
  std::string to_config(const CLI::App*, bool, bool, std::string) const override { return "{}"; }

  std::vector<CLI::ConfigItem> from_config(std::istream& input) const override {
    io::Json j;
    try {
      j = io::Json::parse(input);
    } catch (const io::Json::exception& e) {
      throw CLI::ConversionError("--json", e.what());
    }
    if (!j.is_object()) throw CLI::ConversionError("--json", "config must be a JSON object");
    std::vector<CLI::ConfigItem> items;
    for (const auto& [key, value] : j.items()) {
      CLI::ConfigItem item;
      item.name = key;
      if (value.is_array()) {
        for (const auto& v : value) item.inputs.push_back(scalar_text(v));
      } else {
        item.inputs.push_back(scalar_text(value));
      }
      items.push_back(std::move(item));
    }
    return items;
  }

 private:
  static std::string scalar_text(const io::Json& v) {
    if (v.is_string()) return v.get<std::string>();
    if (v.is_boolean()) return v.get<bool>() ? "true" : "false";
    if (v.is_number_float()) return io::format_double(v.get<double>());
    return v.dump();
  }
};

class BadInput : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

void check_dims(const RunConfig& cfg) {
  if (cfg.m < 2 || cfg.m > kMaxDim) throw BadInput("--m must lie in [2, 12]");
  if (cfg.k < 0) throw BadInput("--k must be non-negative");
  if (cfg.l < 0) throw BadInput("--l must be non-negative");
}

void emit(const RunConfig& cfg, const std::string& content, std::ostream& out) {
  if (cfg.out.empty()) {
    out << content;
  } else {
    io::write_file_atomic(cfg.out, content);
  }
}

template <typename F>
int guarded(std::ostream& err, F&& body) {
  try {
    return body();
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitBadInput;
  }
}

}  // namespace

int cmd_gen(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    check_dims(cfg);
    const MonogenicBasis b = generate_pkl(cfg.m, cfg.k, cfg.l);
    if (b.dimension() == 0)
      err << "warning: no nonzero two-sided monogenic " << cfg.l << "-vector polynomials of degree " << cfg.k
          << " for m = " << cfg.m << '\n';
    out << "dimension " << b.dimension() << '\n';
    const std::string text = io::dump_fixed(io::to_json(b)) + "\n";
    emit(cfg, text, out);
    return kExitOk;
  });
}

int cmd_verify(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    check_dims(cfg);
    cfg.grid.validate();
    if (!(cfg.h > 0.0)) throw BadInput("--h must be positive");

    MonogenicBasis basis;
    if (!cfg.basis_path.empty()) {
      basis = io::basis_from_json(io::read_json_file(cfg.basis_path));
      if (basis.m != cfg.m || basis.k != cfg.k || basis.l != cfg.l)
        throw BadInput("basis file is for (m, k, l) = (" + std::to_string(basis.m) + ", " + std::to_string(basis.k) +
                       ", " + std::to_string(basis.l) + ")");
    } else {
      basis = generate_pkl(cfg.m, cfg.k, cfg.l);
    }

    const ClosedFormParams params{cfg.m, cfg.k, cfg.l, cfg.c1, cfg.c2};
    ResidualReport report;
    report.params = params;
    report.grid = cfg.grid;
    report.h = cfg.h;
    if (basis.dimension() == 0) {
      err << "warning: empty P_{k,l} basis for (m, k, l) = (" << cfg.m << ", " << cfg.k << ", " << cfg.l
          << "); nothing to verify\n";
    } else {
      if (cfg.c1 == 0.0 && cfg.c2 == 0.0) err << "warning: C1 = C2 = 0 gives the trivial solution\n";
      ClosedFormSolution sol(params);
      sol.scale = cfg.scale;
      report = verify_closed_form(sol, basis, cfg.grid, cfg.h, thread_count_from_env());
    }

    const std::string text =
        cfg.format == Format::Json ? io::dump_fixed(to_json(report)) + "\n" : to_csv(report);
    if (!cfg.out.empty()) io::write_file_atomic(cfg.out, text);

    const double threshold = cfg.threshold.value_or(kVerifyThreshold);
    const bool pass = report.max_residual() <= threshold;
    out << "points " << report.points.size() << " max_left " << io::format_double(report.max_left) << " max_right "
        << io::format_double(report.max_right) << " max_system " << io::format_double(report.max_system) << ' '
        << (pass ? "PASS" : "FAIL") << '\n';
    return pass ? kExitOk : kExitResidual;
  });
}

int cmd_series(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    check_dims(cfg);
    if (cfg.l > cfg.m) throw BadInput("--l must not exceed --m");
    cfg.grid.validate();
    if (cfg.terms < 1) throw BadInput("--terms must be at least 1");
    if (cfg.trunc < 2 * cfg.terms + 2)
      throw BadInput("--trunc must be at least 2 * terms + 2 = " + std::to_string(2 * cfg.terms + 2));
    if (cfg.c2 != 0.0 && !cfg.zero_seed) throw BadInput("series seeds are first-kind only; --c2 must be 0");

    const double c1 = cfg.zero_seed ? 0.0 : cfg.c1;
    const SeriesSeeds seeds = cfg.zero_seed ? zero_seeds(cfg.trunc) : bessel_j_seeds(cfg.m, cfg.k, cfg.l, c1, cfg.trunc);
    const SeriesTable table = series_solve(seeds, cfg.terms, cfg.m, cfg.k, cfg.l);
    const ClosedFormParams params{cfg.m, cfg.k, cfg.l, c1, 0.0};

    io::Json pts = io::Json::array();
    double max_diff = 0.0;
    for (int i = 0; i < cfg.grid.nx; ++i) {
      for (int j = 0; j < cfg.grid.nr; ++j) {
        const double x0 = cfg.grid.x0_at(i);
        const double r = cfg.grid.r_at(j);
        const double e = std::exp(x0);
        const std::array<double, 3> closed{e * a1_closed(params, r), e * a2_closed(params, r),
                                           e * a3_closed(params, r)};
        io::Json d = io::Json::array();
        for (int c = 0; c < 3; ++c) {
          const double diff = std::abs(table.evaluate(c + 1, x0, r) - closed[c]) / std::max(1.0, std::abs(closed[c]));
          max_diff = std::max(max_diff, diff);
          d.push_back(diff);
        }
        pts.push_back({{"x0", x0}, {"r", r}, {"diff", d}});
      }
    }

    const double threshold = cfg.threshold.value_or(kSeriesThreshold);
    const bool pass = max_diff <= threshold;
    io::Json j;
    j["params"] = {{"m", cfg.m}, {"k", cfg.k}, {"l", cfg.l}, {"c1", c1}, {"terms", cfg.terms}, {"trunc", cfg.trunc}};
    j["grid"] = {{"x0_range", {cfg.grid.x0_min, cfg.grid.x0_max}},
                 {"r_range", {cfg.grid.r_min, cfg.grid.r_max}},
                 {"nx", cfg.grid.nx},
                 {"nr", cfg.grid.nr}};
    j["zero_table"] = table.is_zero();
    j["max_diff"] = max_diff;
    j["points"] = std::move(pts);
    j["a2_orders"] = io::Json::array();
    for (int n = 0; n <= table.steps; ++n) j["a2_orders"].push_back(io::to_json(table.at(2, n)));

    if (cfg.format == Format::Csv) {
      std::ostringstream csv;
      csv << "x0,r,diff_a1,diff_a2,diff_a3\n";
      for (const auto& p : j["points"])
        csv << io::format_double(p["x0"].get<double>()) << ',' << io::format_double(p["r"].get<double>()) << ','
            << io::format_double(p["diff"][0].get<double>()) << ',' << io::format_double(p["diff"][1].get<double>())
            << ',' << io::format_double(p["diff"][2].get<double>()) << '\n';
      if (!cfg.out.empty()) io::write_file_atomic(cfg.out, csv.str());
    } else if (!cfg.out.empty()) {
      io::write_file_atomic(cfg.out, io::dump_fixed(j) + "\n");
    }
    out << "max_diff " << io::format_double(max_diff) << ' ' << (pass ? "PASS" : "FAIL") << '\n';
    return pass ? kExitOk : kExitResidual;
  });
}

int cmd_bessel(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    BesselKind kind;
    if (cfg.kind == "J" || cfg.kind == "j") {
      kind = BesselKind::J;
    } else if (cfg.kind == "Y" || cfg.kind == "y") {
      kind = BesselKind::Y;
    } else {
      throw BadInput("--kind must be J or Y");
    }
    const Order alpha = parse_order(cfg.order);
    out << io::format_double(z_family(kind, alpha, cfg.at)) << '\n';
    return kExitOk;
  });
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  RunConfig cfg;
  CLI::App app{"Two-sided axial monogenic functions: basis generation, verification, series, Bessel values"};
  app.set_help_flag("--help", "print this help");  // -h would clash with --h
  app.config_formatter(std::make_shared<JsonConfig>());
  app.set_config("--json", "", "JSON object of option values; explicit flags take precedence");
  app.require_subcommand(1);

  std::vector<double> x0_range, r_range;
  std::string format = "json";
  app.add_option("--m", cfg.m, "dimension of the generating vector space");
  app.add_option("--k", cfg.k, "degree of the inner polynomial");
  app.add_option("--l", cfg.l, "grade of the inner polynomial");
  app.add_option("--c1", cfg.c1, "first-kind Bessel constant");
  app.add_option("--c2", cfg.c2, "second-kind Bessel constant");
  app.add_option("--x0-range", x0_range, "x0 interval a,b")->delimiter(',')->expected(2);
  app.add_option("--r-range", r_range, "r interval a,b with a > 0")->delimiter(',')->expected(2);
  app.add_option("--nx", cfg.grid.nx, "grid points in x0");
  app.add_option("--nr", cfg.grid.nr, "grid points in r");
  app.add_option("--h", cfg.h, "relative finite-difference step");
  app.add_option("--terms", cfg.terms, "series steps N");
  app.add_option("--trunc", cfg.trunc, "series truncation T");
  app.add_option("--threshold", cfg.threshold, "pass/fail threshold");
  app.add_option("--out", cfg.out, "output file (written atomically)");
  app.add_option("--format", format, "json or csv")->check(CLI::IsMember({"json", "csv"}));
  app.add_option("--basis", cfg.basis_path, "basis JSON from gen; generated inline when absent");
  app.add_option("--scale-a1", cfg.scale[0], "multiply a1 (mutation testing)");
  app.add_option("--scale-a2", cfg.scale[1], "multiply a2 (mutation testing)");
  app.add_option("--scale-a3", cfg.scale[2], "multiply a3 (mutation testing)");
  app.add_flag("--zero-seed", cfg.zero_seed, "series: start from zero seeds");
  app.add_option("--kind", cfg.kind, "bessel: J or Y");
  app.add_option("--order", cfg.order, "bessel: order n or p/2");
  app.add_option("--at", cfg.at, "bessel: argument t");

  for (const char* name : {"gen", "verify", "series", "bessel"}) app.add_subcommand(name)->fallthrough();
  app.get_subcommand("gen")->description("generate a basis of P_{k,l}; prints the dimension");
  app.get_subcommand("verify")->description("residual sweep of the assembled closed-form F");
  app.get_subcommand("series")->description("power-series solution against the closed form");
  app.get_subcommand("bessel")->description("evaluate J or Y at one point");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kExitBadInput;
  }

  cfg.subcommand = app.get_subcommands().front()->get_name();
  cfg.format = format == "csv" ? Format::Csv : Format::Json;
  if (cfg.subcommand == "series") {
    // the series check runs close to the axis and near x0 = 0 by default
    cfg.grid.x0_max = 0.5;
    cfg.grid.r_max = 2.0;
  }
  if (!x0_range.empty()) {
    cfg.grid.x0_min = x0_range.at(0);
    cfg.grid.x0_max = x0_range.at(1);
  }
  if (!r_range.empty()) {
    cfg.grid.r_min = r_range.at(0);
    cfg.grid.r_max = r_range.at(1);
  }

  if (cfg.subcommand == "gen") return cmd_gen(cfg, out, err);
  if (cfg.subcommand == "verify") return cmd_verify(cfg, out, err);
  if (cfg.subcommand == "series") return cmd_series(cfg, out, err);
  return cmd_bessel(cfg, out, err);
}

}  // namespace axial::cli
