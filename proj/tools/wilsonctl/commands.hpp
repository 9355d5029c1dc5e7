#pragma once

#include <ostream>
#include <string>

#include "config.hpp"

namespace wilsonctl {

// Thrown when a numeric result misses its tolerance; maps to exit code 4.
class ToleranceFailure : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// family: nonsymmetric | symmetric | antisymmetric
void gen_polys(std::ostream& out, const RunConfig& config, const std::string& family, int max_m);

// kind: F | G | Fplus | Gplus | calF | calFsigma. The input is a JSON file,
//   {"type": "poly", "coefficients": ["p/q", ...], "scale": {"re", "im"}}
//   {"type": "spectral", "values": {"m": "p/q", ...}, "scale": ...}
// with "scale" optional.
void transform(std::ostream& out, const RunConfig& config, const std::string& kind,
               const std::string& input_path);

}  // namespace wilsonctl
