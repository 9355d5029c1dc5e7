#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"
#include "wilson/daha/param_set.hpp"

namespace wilsonctl {

// Thrown for malformed config or input files; maps to exit code 3.
class ParseFailure : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

enum class Format { csv, json };

struct RunConfig {
  std::array<std::string, 4> params{"2/3", "1/5", "3/5", "1/7"};  // t0, u0, t1, u1
  int precision_bits = 128;
  std::map<std::string, double> tolerances{{"numeric", 1e-8}, {"quadrature", 1e-10}};
  int max_degree = 20;  // monomial degree for relation checks
  int max_index = 12;   // basis index for polynomial and transform checks
  Format format = Format::json;
  std::uint64_t seed = 1;
  std::vector<double> lambda_grid{0.2, 0.5, 0.8};  // imaginary parts

  double tol(const std::string& key) const;
  int working_bits() const;
  wilson::ParamSet param_set() const;
  nlohmann::json to_json() const;
};

RunConfig load_config(const std::string& path);
RunConfig config_from_json(const nlohmann::json& j);

// "t0,u0,t1,u1"
std::array<std::string, 4> parse_params_flag(const std::string& text);
Format parse_format(const std::string& text);

}  // namespace wilsonctl
