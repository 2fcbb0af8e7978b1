// Command-line front end: batch verification, coefficient-table dumps, and
// fixture generation.  See README.md for the exit-code contract.

#include "isowirt/coeff_poly.hpp"
#include "isowirt/discrete_ineq.hpp"
#include "isowirt/io.hpp"
#include "isowirt/smooth_curve.hpp"

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <string>

namespace {

constexpr const char* kVersion = "0.1.0";

using namespace isowirt;

enum class InputKind { PolygonFile, CurveFile, SupportFile };

InputKind input_kind(TheoremId id) {
  switch (id) {
    case TheoremId::GenWirtinger:
    case TheoremId::SmoothIsoperimetric:
      return InputKind::CurveFile;
    case TheoremId::ChernoffCore:
    case TheoremId::ChernoffTheorem:
      return InputKind::SupportFile;
    default:
      return InputKind::PolygonFile;
  }
}

std::string fmt17(double v) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

struct VerifyConfig {
  std::string theorem;
  std::string input_path;
  long k = 8;
  int m = 1;
  int count = 1;
  std::uint64_t seed = 1;
  double tolerance = tol::kDefault;
  bool auto_recenter = false;
  bool auto_reparametrize = false;
  std::string format = "json";
  std::string output_path;
};

std::uint64_t item_seed(std::uint64_t seed, int index) {
  return seed ^ (0x9e3779b97f4a7c15ull * static_cast<std::uint64_t>(index + 1));
}

SupportFunction random_support_function(std::uint64_t seed, long degree) {
  RandomSource rng(seed);
  std::map<long, Complex> upper;
  for (long n = 1; n <= degree; ++n)
    upper[n] = rng.unit_disc() / (1.0 + static_cast<double>(n) * n);
  return SupportFunction::from_harmonics(2.0 + rng.uniform(), upper);
}

// Perturbations shrink with the spectral distance from the base circle so the
// arc-length resampled spectrum fits the truncation degree (see tests).
FourierCurve random_constant_speed_curve(std::uint64_t seed, long degree) {
  RandomSource rng(seed);
  std::map<long, Complex> c;
  c[1] = Complex(1.0, 0.0);
  c[2] = 0.04 * rng.unit_disc();
  c[3] = 0.006 * rng.unit_disc();
  c[-2] = 0.001 * rng.unit_disc();
  return reparametrize_by_arclength(FourierCurve(std::move(c)), degree).recentered();
}

Polygon random_equilateral(Index k, std::uint64_t seed) {
  RandomSource rng(seed);
  const Complex scale = std::polar(0.5 + rng.uniform(), kTwoPi * rng.uniform());
  return make_regular(1, k, scale);
}

InequalityReport run_theorem(TheoremId id, const VerifyConfig& cfg, int index) {
  EvalOptions popts;
  popts.auto_recenter = cfg.auto_recenter;
  popts.tolerance = cfg.tolerance;
  SmoothEvalOptions sopts;
  sopts.auto_recenter = cfg.auto_recenter;
  sopts.auto_reparametrize = cfg.auto_reparametrize;
  sopts.tolerance = cfg.tolerance;
  ChernoffOptions copts;
  copts.tolerance = cfg.tolerance;

  const bool from_file = !cfg.input_path.empty();
  switch (input_kind(id)) {
    case InputKind::PolygonFile: {
      const Polygon p = from_file ? load_polygon(cfg.input_path)
                        : id == TheoremId::EquilateralBound
                            ? random_equilateral(cfg.k, item_seed(cfg.seed, index))
                            : random_polygon(cfg.k, cfg.k - 1, item_seed(cfg.seed, index));
      switch (id) {
        case TheoremId::WirtingerM: return wirtinger_m(p, cfg.m, popts);
        case TheoremId::WirtingerLambda: return wirtinger_lambda_form(p, cfg.m, popts);
        case TheoremId::WirtingerS: return wirtinger_s_form(p, cfg.m, popts);
        case TheoremId::StabilityC: return stability_c(p, cfg.m, popts);
        case TheoremId::StabilityS: return stability_s(p, cfg.m, popts);
        case TheoremId::ChakerianV1: return chakerian_v1(p, popts);
        case TheoremId::ChakerianV2: return chakerian_v2(p, popts);
        case TheoremId::DiscreteHigher: return isoperimetric_higher(p, cfg.m, popts);
        case TheoremId::EquilateralBound: return equilateral_bound(p, popts);
        case TheoremId::LengthFormEven: return length_form_even(p, cfg.m, popts);
        default: break;
      }
      break;
    }
    case InputKind::CurveFile: {
      const FourierCurve c = from_file
                                 ? load_curve(cfg.input_path)
                                 : random_constant_speed_curve(item_seed(cfg.seed, index), 12);
      if (id == TheoremId::GenWirtinger) return gen_wirtinger(c, cfg.m, sopts);
      return smooth_isoperimetric(c, cfg.m, sopts);
    }
    case InputKind::SupportFile: {
      const SupportFunction h =
          from_file ? load_support(cfg.input_path)
                    : random_support_function(item_seed(cfg.seed, index), 6);
      if (id == TheoremId::ChernoffCore)
        return chernoff_core(h, static_cast<int>(cfg.k), cfg.m, copts);
      return chernoff_theorem(h, static_cast<int>(cfg.k), cfg.m, copts);
    }
  }
  throw ParameterError("verify: unsupported theorem");
}

int cmd_verify(const VerifyConfig& cfg) {
  const TheoremId id = theorem_from_name(cfg.theorem);

  std::ofstream file;
  if (!cfg.output_path.empty()) {
    file.open(cfg.output_path);
    if (!file) throw ParameterError("cannot write " + cfg.output_path);
  }
  std::ostream& out = cfg.output_path.empty() ? std::cout : file;

  const bool csv = cfg.format == "csv";
  if (csv) {
    out << "# isowirt " << kVersion << "\n";
    out << "index,status," << report_csv_header() << "\n";
  } else {
    out << nlohmann::json{{"tool", "isowirt"}, {"version", kVersion}}.dump() << "\n";
  }

  const int count = cfg.input_path.empty() ? cfg.count : 1;
  bool all_hold = true;
  for (int i = 0; i < count; ++i) {
    try {
      const InequalityReport r = run_theorem(id, cfg, i);
      const std::string status = r.holds ? "ok" : "violation";
      all_hold = all_hold && r.holds;
      if (csv) {
        out << i << ',' << status << ',' << report_to_csv(r) << "\n";
      } else {
        nlohmann::json j = report_to_json(r);
        j["index"] = i;
        j["status"] = status;
        out << j.dump() << "\n";
      }
    } catch (const HypothesisError& e) {
      // A violated hypothesis is a per-item outcome, not a fatal error.
      all_hold = false;
      if (csv)
        out << i << ",hypothesis-error," << e.what() << "\n";
      else
        out << nlohmann::json{{"index", i},
                              {"status", "hypothesis-error"},
                              {"error", e.what()}}
                   .dump()
            << "\n";
    }
  }
  return all_hold ? 0 : 2;
}

int cmd_tables(bool smooth, int m, long k, const std::string& output_path) {
  std::ofstream file;
  if (!output_path.empty()) {
    file.open(output_path);
    if (!file) throw ParameterError("cannot write " + output_path);
  }
  std::ostream& out = output_path.empty() ? std::cout : file;

  out << "# isowirt " << kVersion << "\n";
  out << "family,m,k,index,value\n";
  if (smooth) {
    const SmoothTable t = smooth_table(m);
    for (int l = 1; l <= m - 1; ++l)
      out << "s," << m << ",," << l << ',' << fmt17(t.s[l - 1]) << "\n";
    out << "p_at_one," << m << ",,0," << fmt17(t.p_at_one) << "\n";
    out << "theorem_constant," << m << ",,0," << fmt17(t.theorem_constant) << "\n";
  } else {
    const CoefficientTable t = discrete_table(m, k);
    for (int j = 0; j <= m; ++j)
      out << "c," << m << ',' << k << ',' << j << ',' << fmt17(t.c[j]) << "\n";
    for (int j = 0; j < m; ++j)
      out << "lambda," << m << ',' << k << ',' << j << ',' << fmt17(t.lambda[j]) << "\n";
    for (int j = 0; j < m; ++j)
      out << "S," << m << ',' << k << ',' << j << ',' << fmt17(t.s_cap[j]) << "\n";
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Verification tool for discrete and smooth Wirtinger, "
               "isoperimetric, and Chernoff-type inequalities"};
  app.set_version_flag("--version", std::string("isowirt ") + kVersion);
  app.require_subcommand(1);

  double default_tol = tol::kDefault;
  if (const char* env = std::getenv("ISO_WIRTINGER_TOLERANCE")) {
    try {
      default_tol = std::stod(env);
    } catch (const std::exception&) {
      std::cerr << "isowirt: bad ISO_WIRTINGER_TOLERANCE value '" << env << "'\n";
      return 1;
    }
    if (default_tol <= 0.0) {
      std::cerr << "isowirt: ISO_WIRTINGER_TOLERANCE must be positive\n";
      return 1;
    }
  }

  VerifyConfig vcfg;
  vcfg.tolerance = default_tol;
  CLI::App* verify = app.add_subcommand("verify", "Evaluate a theorem on fixtures");
  verify->add_option("--theorem", vcfg.theorem, "Theorem name")->required();
  verify->add_option("--input", vcfg.input_path,
                     "Input JSON file (polygon/curve/support)");
  verify->add_option("--k", vcfg.k, "Polygon size / operator index");
  verify->add_option("--m", vcfg.m, "Inequality order");
  verify->add_option("--count", vcfg.count, "Number of random fixtures")
      ->check(CLI::PositiveNumber);
  verify->add_option("--seed", vcfg.seed, "Random seed");
  verify->add_option("--tolerance", vcfg.tolerance, "Verification tolerance")
      ->check(CLI::PositiveNumber);
  verify->add_flag("--auto-recenter", vcfg.auto_recenter, "Recenter off-centre input");
  verify->add_flag("--auto-reparametrize", vcfg.auto_reparametrize,
                   "Arc-length reparametrize non-constant-speed curves");
  verify->add_option("--format", vcfg.format, "json or csv")
      ->check(CLI::IsMember({"json", "csv"}));
  verify->add_option("--output", vcfg.output_path, "Write the report stream here");

  bool smooth = false;
  int tm = 1;
  long tk = 8;
  std::string tout;
  CLI::App* tables = app.add_subcommand("tables", "Dump coefficient tables as CSV");
  tables->add_flag("--smooth", smooth, "Smooth family instead of the discrete one");
  tables->add_option("--m", tm, "Order")->required();
  tables->add_option("--k", tk, "Polygon size (discrete family)");
  tables->add_option("--output", tout, "Output file");

  CLI::App* generate = app.add_subcommand("generate", "Write fixture files");
  long gk = 8, gmodes = 0, gdegree = 0;
  int gm = 3;
  std::uint64_t gseed = 1;
  double gr = 1.0;
  bool gcircle = false, gequality = false;
  std::string gout;
  CLI::App* gpoly = generate->add_subcommand("polygon", "Random zero-centroid polygon");
  gpoly->add_option("--k", gk, "Vertex count")->required();
  gpoly->add_option("--modes", gmodes, "Restrict the spectrum to |nu| <= modes");
  gpoly->add_option("--seed", gseed, "Random seed");
  gpoly->add_option("--output", gout, "Output file")->required();
  CLI::App* gsupport = generate->add_subcommand("support", "Support function");
  gsupport->add_flag("--circle", gcircle, "Constant support function");
  gsupport->add_option("--r", gr, "Circle radius");
  gsupport->add_option("--degree", gdegree, "Truncation degree (random)");
  gsupport->add_option("--seed", gseed, "Random seed");
  gsupport->add_option("--output", gout, "Output file")->required();
  CLI::App* gcurve = generate->add_subcommand("curve", "Fourier curve");
  gcurve->add_flag("--equality", gequality, "Equality-class fixture (modes 1..m)");
  gcurve->add_option("--m", gm, "Highest mode of the equality fixture");
  gcurve->add_option("--degree", gdegree, "Truncation degree (random)");
  gcurve->add_option("--seed", gseed, "Random seed");
  gcurve->add_option("--output", gout, "Output file")->required();
  generate->require_subcommand(1);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);  // prints the usage message
    return 1;
  }

  try {
    if (verify->parsed()) return cmd_verify(vcfg);
    if (tables->parsed()) return cmd_tables(smooth, tm, tk, tout);
    if (generate->parsed()) {
      nlohmann::json j;
      if (gpoly->parsed()) {
        const long modes = gmodes > 0 ? gmodes : gk - 1;
        j = polygon_to_json(random_polygon(gk, modes, gseed));
      } else if (gsupport->parsed()) {
        j = support_to_json(gcircle ? SupportFunction::circle(gr)
                                    : random_support_function(
                                          gseed, gdegree > 0 ? gdegree : 6));
      } else {
        if (gequality) {
          RandomSource rng(gseed);
          std::map<long, Complex> c;
          c[1] = Complex(1.0, 0.0);
          for (long n = 2; n <= gm; ++n)
            c[n] = rng.unit_disc() / (2.0 * static_cast<double>(n));
          j = curve_to_json(FourierCurve(std::move(c)));
        } else {
          j = curve_to_json(
              random_constant_speed_curve(gseed, gdegree > 0 ? gdegree : 12));
        }
      }
      save_json(j, gout);
      return 0;
    }
  } catch (const ParameterError& e) {
    std::cerr << "isowirt: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "isowirt: " << e.what() << "\n";
    return 1;
  }
  return 1;
}
