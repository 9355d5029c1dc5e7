#include "commands.hpp"

#include <fstream>

#include "report.hpp"
#include "wilson/errors.hpp"
#include "wilson/function/calf.hpp"
#include "wilson/polys/wilson_basis.hpp"
#include "wilson/transform/symmetric.hpp"

namespace wilsonctl {

using nlohmann::json;
using wilson::FiniteSpectralFunction;
using wilson::HPComplex;
using wilson::ParamSet;
using wilson::Poly;
using wilson::Rational;

namespace {

constexpr int kDigits = 30;

std::string joined(const std::vector<std::string>& items) {
  std::string out = "[";
  for (std::size_t i = 0; i < items.size(); ++i) out += (i ? ", " : "") + items[i];
  return out + "]";
}

struct Table {
  std::vector<std::string> header;
  std::vector<std::vector<json>> rows;  // strings, or arrays of strings

  void write(std::ostream& out, const RunConfig& config, json meta) const {
    if (config.format == Format::csv) {
      for (std::size_t i = 0; i < header.size(); ++i) out << (i ? "," : "") << header[i];
      out << '\n';
      for (const auto& row : rows) {
        for (std::size_t i = 0; i < row.size(); ++i) {
          std::string cell = row[i].is_string()  ? row[i].get<std::string>()
                             : row[i].is_array() ? joined(row[i].get<std::vector<std::string>>())
                                                 : row[i].dump();
          out << (i ? "," : "") << csv_field(cell);
        }
        out << '\n';
      }
      return;
    }
    json j;
    j["meta"] = std::move(meta);
    j["rows"] = json::array();
    for (const auto& row : rows) {
      json r;
      for (std::size_t i = 0; i < header.size(); ++i) r[header[i]] = row[i];
      j["rows"].push_back(std::move(r));
    }
    out << j.dump(2) << '\n';
  }
};

HPComplex parse_scale(const json& j, int bits) {
  if (!j.contains("scale")) return HPComplex(Rational(1), bits);
  const json& s = j.at("scale");
  auto part = [&](const char* key) {
    if (!s.contains(key)) return wilson::numeric::Real(Rational(0), bits);
    const json& v = s.at(key);
    return v.is_number() ? wilson::numeric::Real(v.get<double>(), bits)
                         : wilson::numeric::Real::parse(v.get<std::string>(), bits);
  };
  return HPComplex(part("re"), part("im"));
}

Rational parse_rational(const json& v) {
  if (v.is_number_integer()) return Rational(v.get<long>());
  return Rational::parse(v.get<std::string>());
}

struct Input {
  bool is_poly = false;
  Poly poly;
  FiniteSpectralFunction spectral;
  HPComplex scale;
};

Input read_input(const std::string& path, int bits) {
  std::ifstream in(path);
  if (!in) throw ParseFailure("cannot open input " + path);
  Input input;
  try {
    const json j = json::parse(in);
    const std::string type = j.at("type").get<std::string>();
    input.scale = parse_scale(j, bits);
    if (type == "poly") {
      std::vector<Rational> c;
      for (const auto& v : j.at("coefficients")) c.push_back(parse_rational(v));
      input.is_poly = true;
      input.poly = Poly(std::move(c));
    } else if (type == "spectral") {
      std::map<int, Rational> values;
      for (const auto& [key, v] : j.at("values").items()) {
        std::size_t used = 0;
        const int m = std::stoi(key, &used);
        if (used != key.size())
          throw ParseFailure("spectral label '" + key + "' is not an integer");
        values[m] = parse_rational(v);
      }
      input.spectral = FiniteSpectralFunction(std::move(values), input.scale);
    } else {
      throw ParseFailure("input type must be poly or spectral, got '" + type + "'");
    }
  } catch (const json::exception& e) {
    throw ParseFailure("input " + path + ": " + e.what());
  } catch (const std::invalid_argument&) {
    throw ParseFailure("input " + path + ": spectral labels must be integers");
  } catch (const std::out_of_range&) {
    throw ParseFailure("input " + path + ": spectral label out of range");
  }
  return input;
}

json poly_json(const Poly& p, const HPComplex& scale) {
  return json{{"type", "poly"},
              {"coefficients", p.coefficient_strings()},
              {"scale", complex_json(scale, kDigits)}};
}

json spectral_json(const FiniteSpectralFunction& f) {
  json values = json::object();
  for (const auto& [m, v] : f.values()) values[std::to_string(m)] = v.str();
  return json{{"type", "spectral"},
              {"values", values},
              {"scale", complex_json(f.scale(), kDigits)},
              {"log_scale", complex_json(wilson::numeric::log(f.scale()), kDigits)}};
}

void write_object(std::ostream& out, const RunConfig& config, json object) {
  if (config.format == Format::json) {
    json j;
    j["meta"] = config.to_json();
    j["result"] = std::move(object);
    out << j.dump(2) << '\n';
    return;
  }
  // CSV: one row per exact entry, the scale in a trailing row.
  out << "key,value\n";
  if (object["type"] == "poly") {
    const auto& c = object["coefficients"];
    for (std::size_t k = 0; k < c.size(); ++k)
      out << "x^" << k << ',' << c[k].get<std::string>() << '\n';
  } else {
    for (const auto& [m, v] : object["values"].items())
      out << m << ',' << v.get<std::string>() << '\n';
  }
  const auto& s = object["scale"];
  out << "scale,"
      << csv_field(s["re"].get<std::string>() + " + " + s["im"].get<std::string>() + "i") << '\n';
}

void require_poly(const Input& input, const std::string& kind) {
  if (!input.is_poly) throw ParseFailure(kind + " expects a poly input");
}

void require_spectral(const Input& input, const std::string& kind) {
  if (input.is_poly) throw ParseFailure(kind + " expects a spectral input");
}

void tabulate_calF(std::ostream& out, const RunConfig& config, const ParamSet& t,
                   const Input& input) {
  const int bits = config.working_bits();
  const ParamSet tt = wilson::dual_tau(t);
  const Poly image = wilson::calF_exact(t, input.poly);
  const bool numeric = t.quadrature_ok() && tt.quadrature_ok();
  wilson::ThetaOptions theta;
  theta.bits = bits;
  theta.tol = config.tol("quadrature");
  const double tol = config.tol("numeric");

  Table table{{"lambda", "exact", "numeric", "error"}, {}};
  double worst = 0.0;
  for (double im : config.lambda_grid) {
    const HPComplex l(0.0, im, bits);
    const HPComplex exact = input.scale * image(l) * wilson::gaussian_G_sigma_tau(t, l).value;
    json num = nullptr, err = nullptr;
    if (numeric) {
      const HPComplex value = input.scale * wilson::calF_numeric(t, input.poly, l, theta);
      const double e = wilson::numeric::relative_difference(value, exact);
      worst = std::max(worst, e);
      num = complex_json(value, kDigits);
      err = format_residual(e);
    }
    table.rows.push_back({complex_json(l, 6), complex_json(exact, kDigits), num, err});
  }
  if (config.format == Format::csv) {
    // Flatten the complex cells for CSV.
    for (auto& row : table.rows) {
      for (auto& cell : row) {
        if (cell.is_object())
          cell = cell["re"].get<std::string>() + " + " + cell["im"].get<std::string>() + "i";
        else if (cell.is_null())
          cell = "-";
      }
    }
  }
  json meta = config.to_json();
  meta["image_coefficients"] = image.coefficient_strings();
  meta["mode"] = numeric ? "exact+numeric" : "exact-only";
  table.write(out, config, meta);
  if (worst > tol)
    throw ToleranceFailure("calF quadrature error " + format_residual(worst) + " exceeds " +
                           format_residual(tol));
}

}  // namespace

void gen_polys(std::ostream& out, const RunConfig& config, const std::string& family, int max_m) {
  const ParamSet t = config.param_set();
  t.require_exact();
  const auto basis = wilson::WilsonBasis::of(t);
  const Rational base = t.t0() + t.t1();
  const Rational minus_x0 = -basis->x_dual(0);
  Table table{{"m", "gamma_m", "coefficients", "value_at_minus_x0"}, {}};
  auto row = [&](int m, const Rational& gamma, const Poly& p) {
    table.rows.push_back(
        {std::to_string(m), gamma.str(), p.coefficient_strings(), p(minus_x0).str()});
  };
  if (family == "nonsymmetric") {
    for (int m = 0; m <= max_m; ++m) row(m, basis->gamma(m), basis->p(m));
  } else if (family == "symmetric") {
    for (int n = 0; n <= max_m; ++n) row(n, wilson::gamma_value(base, 2 * n), basis->P_plus(n));
  } else if (family == "antisymmetric") {
    for (int n = 1; n <= max_m; ++n) row(n, wilson::gamma_value(base, 2 * n), basis->P_minus(n));
  } else {
    throw ParseFailure("unknown family '" + family + "'");
  }
  json meta = config.to_json();
  meta["family"] = family;
  table.write(out, config, meta);
}

void transform(std::ostream& out, const RunConfig& config, const std::string& kind,
               const std::string& input_path) {
  const ParamSet t = config.param_set();
  t.require_exact();
  const Input input = read_input(input_path, config.working_bits());
  if (kind == "F" || kind == "Fplus") {
    require_poly(input, kind);
    FiniteSpectralFunction f;
    try {
      f = kind == "F" ? wilson::forward_F(t, input.poly) : wilson::forward_F_plus(t, input.poly);
    } catch (const wilson::NotSymmetricError& e) {
      throw ParseFailure(std::string("Fplus needs an even polynomial: ") + e.what());
    }
    write_object(out, config, spectral_json(f.with_scale(f.scale() * input.scale)));
  } else if (kind == "G" || kind == "Gplus") {
    require_spectral(input, kind);
    const auto g = kind == "G" ? wilson::inverse_G(t, input.spectral)
                               : wilson::inverse_G_plus(t, input.spectral);
    write_object(out, config, poly_json(g.poly, g.scale));
  } else if (kind == "calF" || kind == "calFsigma") {
    require_poly(input, kind);
    const ParamSet s = kind == "calF" ? t : wilson::dual_sigma(t);
    s.require_exact();
    wilson::dual_tau(s).require_exact();
    wilson::params_sigma_tau(s).require_exact();
    tabulate_calF(out, config, s, input);
  } else {
    throw ParseFailure("unknown transform kind '" + kind + "'");
  }
}

}  // namespace wilsonctl
