#include "isowirt/io.hpp"

#include <fstream>

#include <nlohmann/json.hpp>

namespace isowirt {

namespace {

nlohmann::json complex_pair(const Complex& c) {
  return nlohmann::json::array({c.real(), c.imag()});
}

Complex pair_to_complex(const nlohmann::json& j, const char* what) {
  if (!j.is_array() || j.size() != 2 || !j[0].is_number() || !j[1].is_number())
    throw ParameterError(std::string(what) + ": expected a [re, im] pair");
  const Complex c(j[0].get<double>(), j[1].get<double>());
  if (!std::isfinite(c.real()) || !std::isfinite(c.imag()))
    throw ParameterError(std::string(what) + ": non-finite value");
  return c;
}

std::map<long, Complex> coeff_map_from_json(const nlohmann::json& j, const char* what) {
  if (!j.is_object()) throw ParameterError(std::string(what) + ": expected an object");
  std::map<long, Complex> coeffs;
  for (const auto& [key, value] : j.items()) {
    long n = 0;
    try {
      std::size_t pos = 0;
      n = std::stol(key, &pos);
      if (pos != key.size()) throw std::invalid_argument(key);
    } catch (const std::exception&) {
      throw ParameterError(std::string(what) + ": bad mode index '" + key + "'");
    }
    coeffs[n] = pair_to_complex(value, what);
  }
  return coeffs;
}

nlohmann::json coeff_map_to_json(const std::map<long, Complex>& coeffs) {
  nlohmann::json j = nlohmann::json::object();
  for (const auto& [n, a] : coeffs) j[std::to_string(n)] = complex_pair(a);
  return j;
}

nlohmann::json read_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ParameterError("cannot open " + path.string());
  nlohmann::json j;
  try {
    in >> j;
  } catch (const nlohmann::json::parse_error& e) {
    throw ParameterError("parse error in " + path.string() + ": " + e.what());
  }
  return j;
}

}  // namespace

nlohmann::json polygon_to_json(const Polygon& p) {
  nlohmann::json j = nlohmann::json::array();
  for (Index i = 0; i < p.size(); ++i) j.push_back(complex_pair(p.vertices()[i]));
  return j;
}

Polygon polygon_from_json(const nlohmann::json& j) {
  if (!j.is_array()) throw ParameterError("polygon: expected an array of vertex pairs");
  CVec z(static_cast<Index>(j.size()));
  for (std::size_t i = 0; i < j.size(); ++i)
    z[static_cast<Index>(i)] = pair_to_complex(j[i], "polygon vertex");
  return Polygon(std::move(z));  // validates k >= 3
}

nlohmann::json curve_to_json(const FourierCurve& c) { return coeff_map_to_json(c.coeffs()); }

FourierCurve curve_from_json(const nlohmann::json& j) {
  return FourierCurve(coeff_map_from_json(j, "curve"));
}

nlohmann::json support_to_json(const SupportFunction& h) {
  return coeff_map_to_json(h.coeffs());
}

SupportFunction support_from_json(const nlohmann::json& j) {
  return SupportFunction(coeff_map_from_json(j, "support"));
}

Polygon load_polygon(const std::filesystem::path& path) {
  return polygon_from_json(read_file(path));
}

FourierCurve load_curve(const std::filesystem::path& path) {
  return curve_from_json(read_file(path));
}

SupportFunction load_support(const std::filesystem::path& path) {
  return support_from_json(read_file(path));
}

void save_json(const nlohmann::json& j, const std::filesystem::path& path) {
  std::ofstream out(path);
  if (!out) throw ParameterError("cannot write " + path.string());
  out << j.dump(2) << '\n';
}

}  // namespace isowirt
