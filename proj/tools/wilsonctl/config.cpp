#include "config.hpp"

#include <fstream>
#include <sstream>

#include "wilson/numeric/real.hpp"

namespace wilsonctl {

using nlohmann::json;
using wilson::numeric::Rational;

double RunConfig::tol(const std::string& key) const {
  auto it = tolerances.find(key);
  if (it == tolerances.end()) throw ParseFailure("no tolerance named '" + key + "'");
  return it->second;
}

int RunConfig::working_bits() const { return wilson::numeric::working_bits(precision_bits); }

wilson::ParamSet RunConfig::param_set() const {
  std::array<Rational, 4> v;
  for (std::size_t i = 0; i < 4; ++i) {
    try {
      v[i] = Rational::parse(params[i]);
    } catch (const std::exception& e) {
      throw ParseFailure("parameter '" + params[i] + "': " + e.what());
    }
  }
  return wilson::ParamSet(v[0], v[1], v[2], v[3]);
}

json RunConfig::to_json() const {
  json out;
  out["params"] = params;
  out["precision_bits"] = precision_bits;
  out["tolerances"] = tolerances;
  out["max_degree"] = max_degree;
  out["max_index"] = max_index;
  out["format"] = format == Format::csv ? "csv" : "json";
  out["seed"] = seed;
  out["lambda_grid"] = lambda_grid;
  return out;
}

Format parse_format(const std::string& text) {
  if (text == "csv") return Format::csv;
  if (text == "json") return Format::json;
  throw ParseFailure("unknown format '" + text + "' (csv or json)");
}

RunConfig config_from_json(const json& j) {
  RunConfig c;
  try {
    if (j.contains("params")) {
      auto list = j.at("params").get<std::vector<std::string>>();
      if (list.size() != 4) throw ParseFailure("params needs four entries t0, u0, t1, u1");
      for (std::size_t i = 0; i < 4; ++i) c.params[i] = list[i];
    }
    if (j.contains("precision_bits")) c.precision_bits = j.at("precision_bits").get<int>();
    if (j.contains("tolerances")) {
      for (const auto& [k, v] : j.at("tolerances").items()) c.tolerances[k] = v.get<double>();
    }
    if (j.contains("max_degree")) c.max_degree = j.at("max_degree").get<int>();
    if (j.contains("max_index")) c.max_index = j.at("max_index").get<int>();
    if (j.contains("format")) c.format = parse_format(j.at("format").get<std::string>());
    if (j.contains("seed")) c.seed = j.at("seed").get<std::uint64_t>();
    if (j.contains("lambda_grid")) c.lambda_grid = j.at("lambda_grid").get<std::vector<double>>();
  } catch (const json::exception& e) {
    throw ParseFailure(std::string("config: ") + e.what());
  }
  if (c.precision_bits < 64) throw ParseFailure("precision_bits must be at least 64");
  return c;
}

RunConfig load_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseFailure("cannot open config " + path);
  try {
    return config_from_json(json::parse(in));
  } catch (const json::parse_error& e) {
    throw ParseFailure("config " + path + ": " + e.what());
  }
}

std::array<std::string, 4> parse_params_flag(const std::string& text) {
  std::array<std::string, 4> out;
  std::stringstream ss(text);
  std::string item;
  std::size_t i = 0;
  while (std::getline(ss, item, ',')) {
    if (i == 4) throw ParseFailure("--params takes four values");
    out[i++] = item;
  }
  if (i != 4) throw ParseFailure("--params takes four values");
  return out;
}

}  // namespace wilsonctl
