#include "axial/json_io.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

namespace axial::io {

std::string blade_key(Blade b) {
  std::string out;
  for (int j = 1; j <= kMaxDim; ++j) {
    if ((b.mask >> (j - 1)) & 1u) {
      if (!out.empty()) out += ',';
      out += std::to_string(j);
    }
  }
  return out;
}

Blade parse_blade_key(const std::string& key, int m) {
  Blade b;
  if (key.empty()) return b;
  std::stringstream ss(key);
  std::string item;
  int last = 0;
  while (std::getline(ss, item, ',')) {
    int j = 0;
    try {
      std::size_t used = 0;
      j = std::stoi(item, &used);
      if (used != item.size()) throw std::invalid_argument("trailing");
    } catch (const std::logic_error&) {
      throw FormatError("malformed blade key '" + key + "'");
    }
    if (j < 1 || j > m) throw FormatError("generator index out of range in blade key '" + key + "'");
    if (j <= last) throw FormatError("blade key indices must be strictly ascending: '" + key + "'");
    last = j;
    b.mask |= 1u << (j - 1);
  }
  return b;
}

std::string format_double(double x) {
  if (std::isnan(x)) return "NaN";
  if (std::isinf(x)) return x > 0 ? "Infinity" : "-Infinity";
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

namespace {

int read_dim(const Json& j) {
  if (!j.is_object() || !j.contains("m") || !j["m"].is_number_integer()) throw FormatError("missing integer 'm'");
  const int m = j["m"].get<int>();
  if (m < 1 || m > kMaxDim) throw FormatError("'m' out of range");
  return m;
}

template <typename S, typename Conv>
Multivector<S> read_coeffs(const Json& j, Conv conv) {
  const int m = read_dim(j);
  Multivector<S> x(m);
  if (!j.contains("coeffs") || !j["coeffs"].is_object()) throw FormatError("missing object 'coeffs'");
  for (const auto& [key, value] : j["coeffs"].items()) x[parse_blade_key(key, m)] = conv(value);
  return x;
}

Rational rational_value(const Json& v) {
  try {
    if (v.is_string()) return parse_rational(v.get<std::string>());
    if (v.is_number_integer()) return Rational(v.get<long>());
  } catch (const std::invalid_argument& e) {
    throw FormatError(e.what());
  }
  throw FormatError("exact coefficient must be a \"p/q\" string");
}

double double_value(const Json& v) {
  if (v.is_number()) return v.get<double>();
  if (v.is_string()) {
    try {
      return std::stod(v.get<std::string>());
    } catch (const std::logic_error&) {
    }
  }
  throw FormatError("numeric coefficient must be a decimal string or number");
}

Json coeff_object(const MultivectorQ& x) {
  Json c = Json::object();
  for (std::uint32_t a = 0; a < x.size(); ++a)
    if (x.coeff(a) != 0) c[blade_key(Blade{a})] = to_string(x.coeff(a));
  return c;
}

}  // namespace

Json to_json(const MultivectorQ& x) {
  Json j;
  j["m"] = x.dim();
  j["coeffs"] = coeff_object(x);
  return j;
}

Json to_json(const MultivectorD& x) {
  Json j;
  j["m"] = x.dim();
  Json c = Json::object();
  for (std::uint32_t a = 0; a < x.size(); ++a)
    if (x.coeff(a) != 0.0) c[blade_key(Blade{a})] = format_double(x.coeff(a));
  j["coeffs"] = c;
  return j;
}

MultivectorQ multivector_q_from_json(const Json& j) { return read_coeffs<Rational>(j, rational_value); }

MultivectorD multivector_d_from_json(const Json& j) { return read_coeffs<double>(j, double_value); }

Json to_json(const PolyMV& p, int k, int l) {
  Json j;
  j["m"] = p.dim();
  if (k >= 0) j["k"] = k;
  if (l >= 0) j["l"] = l;
  Json terms = Json::array();
  for (const auto& [e, c] : p.terms()) {
    Json t;
    t["exps"] = e;
    t["coeff"] = coeff_object(c);
    terms.push_back(std::move(t));
  }
  j["terms"] = std::move(terms);
  return j;
}

PolyMV poly_from_json(const Json& j) {
  const int m = read_dim(j);
  PolyMV p(m);
  if (!j.contains("terms") || !j["terms"].is_array()) throw FormatError("missing array 'terms'");
  for (const auto& t : j["terms"]) {
    if (!t.contains("exps") || !t["exps"].is_array()) throw FormatError("term without 'exps'");
    Exponents e;
    for (const auto& v : t["exps"]) {
      if (!v.is_number_integer() || v.get<int>() < 0) throw FormatError("exponents must be non-negative integers");
      e.push_back(v.get<int>());
    }
    if (static_cast<int>(e.size()) != m) throw FormatError("exponent vector length differs from m");
    if (!t.contains("coeff") || !t["coeff"].is_object()) throw FormatError("term without 'coeff'");
    MultivectorQ c(m);
    for (const auto& [key, value] : t["coeff"].items()) c[parse_blade_key(key, m)] = rational_value(value);
    p.add_term(e, c);
  }
  if (j.contains("k") && !p.is_homogeneous(j["k"].get<int>())) throw FormatError("terms disagree with 'k'");
  if (j.contains("l") && !p.is_grade(j["l"].get<int>())) throw FormatError("coefficients disagree with 'l'");
  return p;
}

Json to_json(const MonogenicBasis& b) {
  Json j;
  j["m"] = b.m;
  j["k"] = b.k;
  j["l"] = b.l;
  j["dimension"] = b.dimension();
  Json arr = Json::array();
  for (const auto& p : b.basis) arr.push_back(to_json(p, b.k, b.l));
  j["basis"] = std::move(arr);
  return j;
}

MonogenicBasis basis_from_json(const Json& j) {
  MonogenicBasis b;
  b.m = read_dim(j);
  if (!j.contains("k") || !j.contains("l")) throw FormatError("basis needs 'k' and 'l'");
  b.k = j["k"].get<int>();
  b.l = j["l"].get<int>();
  if (!j.contains("basis") || !j["basis"].is_array()) throw FormatError("missing array 'basis'");
  for (const auto& p : j["basis"]) {
    PolyMV poly = poly_from_json(p);
    if (poly.dim() != b.m) throw FormatError("basis element dimension differs from m");
    b.basis.push_back(std::move(poly));
  }
  if (j.contains("dimension") && j["dimension"].get<std::size_t>() != b.basis.size())
    throw FormatError("'dimension' disagrees with the number of basis elements");
  return b;
}

Json to_json(const RadialSeries& s) {
  Json j;
  j["trunc"] = s.trunc();
  Json c = Json::object();
  for (const auto& [e, q] : s.coeffs()) c[std::to_string(e)] = to_string(q);
  j["coeffs"] = c;
  return j;
}

RadialSeries radial_series_from_json(const Json& j) {
  if (!j.contains("trunc") || !j["trunc"].is_number_integer()) throw FormatError("missing integer 'trunc'");
  RadialSeries s(j["trunc"].get<int>());
  if (!j.contains("coeffs") || !j["coeffs"].is_object()) throw FormatError("missing object 'coeffs'");
  for (const auto& [key, value] : j["coeffs"].items()) {
    int e = 0;
    try {
      std::size_t used = 0;
      e = std::stoi(key, &used);
      if (used != key.size()) throw std::invalid_argument("trailing");
    } catch (const std::logic_error&) {
      throw FormatError("malformed exponent key '" + key + "'");
    }
    try {
      s.set(e, rational_value(value));
    } catch (const std::logic_error& err) {
      throw FormatError(err.what());
    }
  }
  return s;
}

namespace {

void dump_rec(const Json& j, int indent, int depth, std::string& out) {
  indent = std::max(indent, 0);
  const std::string pad(static_cast<std::size_t>(indent * (depth + 1)), ' ');
  const std::string close_pad(static_cast<std::size_t>(indent * depth), ' ');
  const char* nl = indent > 0 ? "\n" : "";
  switch (j.type()) {
    case Json::value_t::object: {
      if (j.empty()) {
        out += "{}";
        return;
      }
      out += "{";
      out += nl;
      bool first = true;
      for (const auto& [key, value] : j.items()) {
        if (!first) {
          out += ",";
          out += nl;
        }
        first = false;
        out += pad;
        out += Json(key).dump();
        out += indent > 0 ? ": " : ":";
        dump_rec(value, indent, depth + 1, out);
      }
      out += nl;
      out += close_pad;
      out += "}";
      return;
    }
    case Json::value_t::array: {
      if (j.empty()) {
        out += "[]";
        return;
      }
      out += "[";
      out += nl;
      bool first = true;
      for (const auto& value : j) {
        if (!first) {
          out += ",";
          out += nl;
        }
        first = false;
        out += pad;
        dump_rec(value, indent, depth + 1, out);
      }
      out += nl;
      out += close_pad;
      out += "]";
      return;
    }
    case Json::value_t::number_float: {
      const double v = j.get<double>();
      // JSON has no NaN/Inf literals; emit them as strings.
      if (!std::isfinite(v))
        out += Json(format_double(v)).dump();
      else
        out += format_double(v);
      return;
    }
    default:
      out += j.dump();
  }
}

}  // namespace

std::string dump_fixed(const Json& j, int indent) {
  std::string out;
  dump_rec(j, indent, 0, out);
  return out;
}

void write_file_atomic(const std::filesystem::path& path, const std::string& content) {
  auto tmp = path;
  tmp += ".tmp";
  {
    std::ofstream f(tmp, std::ios::binary | std::ios::trunc);
    if (!f) throw std::runtime_error("cannot open " + tmp.string() + " for writing");
    f << content;
    f.flush();
    if (!f) {
      std::error_code ec;
      std::filesystem::remove(tmp, ec);
      throw std::runtime_error("failed writing " + tmp.string());
    }
  }
  std::filesystem::rename(tmp, path);
}

Json read_json_file(const std::filesystem::path& path) {
  std::ifstream f(path);
  if (!f) throw std::runtime_error("cannot open " + path.string());
  try {
    return Json::parse(f);
  } catch (const Json::parse_error& e) {
    throw FormatError(path.string() + ": " + e.what());
  }
}

}  // namespace axial::io
