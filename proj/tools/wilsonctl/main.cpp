#include <fstream>
#include <iostream>
#include <optional>

#include "CLI11.hpp"
#include "commands.hpp"
#include "suites.hpp"
#include "wilson/errors.hpp"

namespace {

enum Exit { kPass = 0, kCheckFailure = 1, kAdmissibility = 2, kParse = 3, kTolerance = 4 };

struct Overrides {
  std::string config_path;
  std::string params;
  std::optional<int> precision;
  std::vector<std::string> tol;  // "value" or "key=value"
  std::optional<int> max_degree;
  std::string format;
  std::string out;
  std::optional<std::uint64_t> seed;
};

wilsonctl::RunConfig resolve(const Overrides& o) {
  wilsonctl::RunConfig c =
      o.config_path.empty() ? wilsonctl::RunConfig{} : wilsonctl::load_config(o.config_path);
  if (!o.params.empty()) c.params = wilsonctl::parse_params_flag(o.params);
  if (o.precision) {
    if (*o.precision < 64) throw wilsonctl::ParseFailure("--precision must be at least 64");
    c.precision_bits = *o.precision;
  }
  for (const auto& item : o.tol) {
    const auto eq = item.find('=');
    const std::string key = eq == std::string::npos ? "numeric" : item.substr(0, eq);
    const std::string value = eq == std::string::npos ? item : item.substr(eq + 1);
    try {
      std::size_t used = 0;
      c.tolerances[key] = std::stod(value, &used);
      if (used != value.size()) throw std::invalid_argument(value);
    } catch (const std::exception&) {
      throw wilsonctl::ParseFailure("--tol: cannot read '" + item + "'");
    }
  }
  if (o.max_degree) c.max_degree = *o.max_degree;
  if (!o.format.empty()) c.format = wilsonctl::parse_format(o.format);
  if (o.seed) c.seed = *o.seed;
  return c;
}

// Runs `body` with the output stream selected by --out.
template <class Body>
int with_output(const std::string& path, Body body) {
  if (path.empty()) return body(std::cout);
  std::ofstream file(path);
  if (!file) throw wilsonctl::ParseFailure("cannot write " + path);
  return body(file);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "Exact and high-precision checks for the rank-one degenerate DAHA and its Wilson transforms"};
  app.require_subcommand(1);
  Overrides o;
  app.add_option("--config", o.config_path, "JSON run configuration")->check(CLI::ExistingFile);
  app.add_option("--params", o.params, "t0,u0,t1,u1 as rationals, e.g. 2/3,1/5,3/5,1/7");
  app.add_option("--precision", o.precision, "precision in bits (guard bits are added)");
  app.add_option("--tol", o.tol, "tolerance, 'value' for numeric or 'key=value'");
  app.add_option("--max-degree", o.max_degree, "monomial degree cap for relation checks");
  app.add_option("--format", o.format, "csv or json");
  app.add_option("--out", o.out, "report file (default stdout)");
  app.add_option("--seed", o.seed, "seed for randomized checks");

  std::string suite = "all";
  std::optional<int> corrupt_gamma;
  auto* verify = app.add_subcommand("verify", "run a verification suite");
  verify->add_option("--suite", suite, "algebra | polynomials | transform | wilson-function | all")
      ->check(CLI::IsMember({"algebra", "polynomials", "transform", "wilson-function", "all"}));
  verify->add_option("--corrupt-gamma", corrupt_gamma)->group("");  // test hook

  std::string family = "nonsymmetric";
  int max_m = 4;
  auto* gen = app.add_subcommand("gen-polys", "tabulate a polynomial family");
  gen->add_option("--family", family, "nonsymmetric | symmetric | antisymmetric")
      ->check(CLI::IsMember({"nonsymmetric", "symmetric", "antisymmetric"}));
  gen->add_option("--max-m", max_m, "largest index")->check(CLI::NonNegativeNumber);

  std::string kind;
  std::string input;
  auto* tr = app.add_subcommand("transform", "apply a transform to an input file");
  tr->add_option("--kind", kind, "F | G | Fplus | Gplus | calF | calFsigma")
      ->required()
      ->check(CLI::IsMember({"F", "G", "Fplus", "Gplus", "calF", "calFsigma"}));
  tr->add_option("--input", input, "JSON poly or spectral file")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kPass : kParse;
  }

  try {
    const wilsonctl::RunConfig config = resolve(o);
    const wilson::ParamSet t = config.param_set();
    if (!t.exact_ok()) {
      std::cerr << "wilsonctl: inadmissible parameters " << t.str() << ": " << t.exact_violation()
                << '\n';
      return kAdmissibility;
    }
    if (*verify) {
      wilsonctl::Hooks hooks;
      hooks.corrupt_gamma_index = corrupt_gamma;
      const auto rows = wilsonctl::run_suite(suite, t, config, hooks);
      return with_output(o.out, [&](std::ostream& out) {
        wilsonctl::write_report(out, config, rows);
        bool failed = false;
        for (const auto& r : rows) {
          if (r.failed()) {
            failed = true;
            std::cerr << "FAIL " << r.name << " [" << r.anchor << "]: " << r.residual << '\n';
          }
        }
        return failed ? kCheckFailure : kPass;
      });
    }
    if (*gen) {
      return with_output(o.out, [&](std::ostream& out) {
        wilsonctl::gen_polys(out, config, family, max_m);
        return kPass;
      });
    }
    return with_output(o.out, [&](std::ostream& out) {
      wilsonctl::transform(out, config, kind, input);
      return kPass;
    });
  } catch (const wilson::AdmissibilityError& e) {
    std::cerr << "wilsonctl: " << e.what() << '\n';
    return kAdmissibility;
  } catch (const wilsonctl::ParseFailure& e) {
    std::cerr << "wilsonctl: " << e.what() << '\n';
    return kParse;
  } catch (const wilson::ParseError& e) {
    std::cerr << "wilsonctl: " << e.what() << '\n';
    return kParse;
  } catch (const wilsonctl::ToleranceFailure& e) {
    std::cerr << "wilsonctl: " << e.what() << '\n';
    return kTolerance;
  } catch (const wilson::ToleranceNotMetError& e) {
    std::cerr << "wilsonctl: " << e.what() << '\n';
    return kTolerance;
  } catch (const wilson::ConvergenceBudgetError& e) {
    std::cerr << "wilsonctl: " << e.what() << '\n';
    return kTolerance;
  }
}
