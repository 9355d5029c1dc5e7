#pragma once

#include <optional>
#include <string>
#include <vector>

#include "config.hpp"
#include "report.hpp"

namespace wilsonctl {

struct Hooks {
  // Replaces gamma_m in the eigenvalue table used by the polynomial suite.
  std::optional<int> corrupt_gamma_index;
};

inline const std::vector<std::string> kSuites = {"algebra", "polynomials", "transform",
                                                 "wilson-function"};

std::vector<Record> run_suite(const std::string& suite, const wilson::ParamSet& t,
                              const RunConfig& config, const Hooks& hooks = {});

}  // namespace wilsonctl
