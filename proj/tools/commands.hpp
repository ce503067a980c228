#pragma once

// Command-line front end. Each subcommand is a plain function of a parsed
// RunConfig so it can be driven from tests without a process boundary.
//
// Exit codes: 0 pass, 1 residual above threshold, 2 bad input.

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "axial/verify.hpp"

namespace axial::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitResidual = 1;
inline constexpr int kExitBadInput = 2;

enum class Format { Json, Csv };

struct RunConfig {
  std::string subcommand;
  int m = 2;
  int k = 0;
  int l = 0;
  double c1 = 1.0;
  double c2 = 0.0;
  GridSpec grid;
  double h = kDiracStep;
  int terms = 12;
  int trunc = 40;
  std::optional<double> threshold;
  std::string out;
  Format format = Format::Json;
  std::string basis_path;
  std::array<double, 3> scale{1.0, 1.0, 1.0};
  bool zero_seed = false;

  // bessel
  std::string kind = "J";
  std::string order = "0";
  double at = 1.0;
};

/// Default verify threshold on the relative residuals.
inline constexpr double kVerifyThreshold = 1e-6;
/// Default series/closed-form agreement threshold.
inline constexpr double kSeriesThreshold = 1e-10;

int cmd_gen(const RunConfig& cfg, std::ostream& out, std::ostream& err);
int cmd_verify(const RunConfig& cfg, std::ostream& out, std::ostream& err);
int cmd_series(const RunConfig& cfg, std::ostream& out, std::ostream& err);
int cmd_bessel(const RunConfig& cfg, std::ostream& out, std::ostream& err);

/// Parses args (without the program name) and dispatches.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace axial::cli
