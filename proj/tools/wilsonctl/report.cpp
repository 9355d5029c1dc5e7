#include "report.hpp"

#include <cstdio>

namespace wilsonctl {

using nlohmann::json;

std::string format_residual(double r) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3e", r);
  return buf;
}

Record exact_record(std::string name, std::string anchor, std::string grid, bool ok,
                    std::string witness) {
  return {std::move(name),
          std::move(anchor),
          "exact",
          std::move(grid),
          ok ? "0" : (witness.empty() ? "nonzero" : std::move(witness)),
          ok ? "pass" : "fail"};
}

Record numeric_record(std::string name, std::string anchor, std::string grid, double residual,
                      double tol) {
  const bool ok = residual <= tol;  // NaN fails
  return {std::move(name), std::move(anchor),         "numeric",
          std::move(grid), format_residual(residual), ok ? "pass" : "fail"};
}

Record skipped_record(std::string name, std::string anchor, std::string method,
                      std::string reason) {
  return {std::move(name),
          std::move(anchor),
          std::move(method),
          "-",
          "-",
          "skipped: " + std::move(reason)};
}

json complex_json(const wilson::numeric::HPComplex& z, int digits) {
  return json{
      {"re", z.real().str(digits)}, {"im", z.imag().str(digits)}, {"bits", z.precision_bits()}};
}

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

void write_report(std::ostream& out, const RunConfig& config, const std::vector<Record>& rows) {
  if (config.format == Format::csv) {
    out << "name,anchor,method,max_degree_or_grid,residual,status\n";
    for (const auto& r : rows) {
      out << csv_field(r.name) << ',' << csv_field(r.anchor) << ',' << r.method << ','
          << csv_field(r.grid) << ',' << csv_field(r.residual) << ',' << csv_field(r.status)
          << '\n';
    }
    return;
  }
  json j;
  j["meta"] = config.to_json();
  j["rows"] = json::array();
  for (const auto& r : rows) {
    j["rows"].push_back({{"name", r.name},
                         {"anchor", r.anchor},
                         {"method", r.method},
                         {"max_degree_or_grid", r.grid},
                         {"residual", r.residual},
                         {"status", r.status}});
  }
  out << j.dump(2) << '\n';
}

}  // namespace wilsonctl
