#include "hypfib/surface_io.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

#include "hypfib/errors.hpp"

namespace hypfib {

namespace {

BigInt ParseCoefficient(const nlohmann::json& v, const std::string& field) {
  if (v.is_number_integer()) return BigInt(v.get<long long>());
  Require(v.is_string(), "surface: coefficients of '" + field + "' must be decimal strings");
  const std::string s = v.get<std::string>();
  std::size_t start = (!s.empty() && (s[0] == '-' || s[0] == '+')) ? 1 : 0;
  Require(start < s.size() && s.find_first_not_of("0123456789", start) == std::string::npos,
          "surface: '" + s + "' in '" + field + "' is not a decimal integer");
  return BigInt(s);
}

BinaryForm ParseForm(const nlohmann::json& doc, const std::string& field, int degree) {
  Require(doc.contains(field) && doc[field].is_array(), "surface: missing array field '" + field + "'");
  const auto& arr = doc[field];
  Require(static_cast<int>(arr.size()) == degree + 1,
          "surface: '" + field + "' must have degree " + std::to_string(degree) + ", i.e. " +
              std::to_string(degree + 1) + " coefficients, got " + std::to_string(arr.size()));
  std::vector<BigInt> c;
  for (const auto& v : arr) c.push_back(ParseCoefficient(v, field));
  return BinaryForm(degree, std::move(c));
}

}  // namespace

Surface ParseSurface(const std::string& text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw InputError(std::string("surface: malformed JSON: ") + e.what());
  }
  Require(doc.is_object() && doc.contains("n") && doc["n"].is_number_integer(),
          "surface: field 'n' (odd integer >= 3) is required");
  const int n = doc["n"].get<int>();
  Require(n >= 3 && n % 2 == 1 && n <= 99, "surface: n must be odd with 3 <= n <= 99, got " + std::to_string(n));
  return MakeSurface(n, ParseForm(doc, "f", 2 * n - 2), ParseForm(doc, "g", 2 * n));
}

Surface LoadSurface(const std::string& path) {
  std::ifstream in(path);
  Require(static_cast<bool>(in), "surface: cannot open '" + path + "'");
  std::stringstream ss;
  ss << in.rdbuf();
  return ParseSurface(ss.str());
}

std::string SurfaceToJson(const Surface& s) {
  nlohmann::ordered_json doc;
  doc["n"] = s.n;
  auto arr = [](const BinaryForm& F) {
    nlohmann::json a = nlohmann::json::array();
    for (const auto& c : F.coeffs) a.push_back(c.str());
    return a;
  };
  doc["f"] = arr(s.f);
  doc["g"] = arr(s.g);
  return doc.dump();
}

}  // namespace hypfib
