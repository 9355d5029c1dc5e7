#pragma once

#include <ostream>
#include <string>
#include <vector>

#include "config.hpp"
#include "wilson/numeric/complex.hpp"

namespace wilsonctl {

struct Record {
  std::string name;
  std::string anchor;  // which statement the identity belongs to
  std::string method;  // exact | numeric
  std::string grid;    // degree cap or sample grid
  std::string residual;
  std::string status;  // pass | fail | skipped: <reason>

  bool failed() const { return status == "fail"; }
};

// Shorthands used by the suites.
Record exact_record(std::string name, std::string anchor, std::string grid, bool ok,
                    std::string witness = {});
Record numeric_record(std::string name, std::string anchor, std::string grid, double residual,
                      double tol);
Record skipped_record(std::string name, std::string anchor, std::string method, std::string reason);

std::string format_residual(double r);
// Quotes a field when it contains a comma, quote or newline.
std::string csv_field(const std::string& s);

nlohmann::json complex_json(const wilson::numeric::HPComplex& z, int digits);

void write_report(std::ostream& out, const RunConfig& config, const std::vector<Record>& rows);

}  // namespace wilsonctl
