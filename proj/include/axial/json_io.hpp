#pragma once

// JSON interchange for multivectors, polynomials, bases and radial series.
//
// Blade keys are comma-joined ascending generator indices ("" for the
// scalar part, "1,2" for e_1 e_2). Exact values are "p/q" strings; numeric
// values are decimal strings with 17 significant digits.

#include <filesystem>
#include <string>

#include "axial/clifford.hpp"
#include "axial/polynomial.hpp"
#include "axial/radial_series.hpp"
#include "json.hpp"

namespace axial::io {

using Json = nlohmann::ordered_json;

class FormatError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

std::string blade_key(Blade b);
Blade parse_blade_key(const std::string& key, int m);

/// "%.17g"
std::string format_double(double x);

Json to_json(const MultivectorQ& x);
Json to_json(const MultivectorD& x);
MultivectorQ multivector_q_from_json(const Json& j);
MultivectorD multivector_d_from_json(const Json& j);

/// {"m":..,"k":..,"l":..,"terms":[{"exps":[..],"coeff":{..}}]}; k and l
/// are written when k >= 0 / l >= 0.
Json to_json(const PolyMV& p, int k = -1, int l = -1);
PolyMV poly_from_json(const Json& j);

Json to_json(const MonogenicBasis& b);
MonogenicBasis basis_from_json(const Json& j);

Json to_json(const RadialSeries& s);
RadialSeries radial_series_from_json(const Json& j);

/// Serializes with fixed key order and every floating value printed at 17
/// significant digits, so equal inputs give byte-identical output. indent <= 0
/// gives the compact single-line form.
std::string dump_fixed(const Json& j, int indent = 2);

/// Writes to a sibling temporary and renames over the target.
void write_file_atomic(const std::filesystem::path& path, const std::string& content);

Json read_json_file(const std::filesystem::path& path);

}  // namespace axial::io
