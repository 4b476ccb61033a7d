// Command-line front end: assemble symbols into truncated operators, run the
// named experiments, validate symbol files, compute norms and singular values.
// Exit codes: 0 ok, 2 parse/validation failure, 3 numeric non-convergence.

#include <fstream>
#include <iostream>
#include <numbers>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "bergtop/experiments.hpp"
#include "bergtop/io.hpp"
#include "bergtop/operators.hpp"

namespace {

using namespace bergtop;

void emit_table(const RunConfig& cfg, const io::Table& table) {
  std::string text;
  if (cfg.format == "json") {
    text = io::to_json(table).dump(2) + "\n";
  } else if (cfg.format == "csv") {
    text = io::to_csv(table);
  } else {
    throw ValidationError("format must be csv or json");
  }
  if (cfg.out.empty()) {
    std::cout << text;
  } else {
    std::ofstream out(cfg.out, std::ios::binary);
    if (!out) throw ValidationError("cannot open output file: " + cfg.out);
    out << text;
  }
}

void emit_json(const RunConfig& cfg, const io::json& j) {
  const std::string text = j.dump(2) + "\n";
  if (cfg.out.empty()) {
    std::cout << text;
  } else {
    std::ofstream out(cfg.out, std::ios::binary);
    if (!out) throw ValidationError("cannot open output file: " + cfg.out);
    out << text;
  }
}

std::vector<double> parse_number_list(const std::string& text) {
  std::vector<double> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item.empty()) continue;
    out.push_back(std::stod(item));
  }
  if (out.empty()) throw ValidationError("expected a comma-separated number list");
  return out;
}

Complex parse_point(const std::string& text) {
  const std::vector<double> parts = parse_number_list(text);
  if (parts.size() != 2) throw ValidationError("expected a point as re,im");
  return {parts[0], parts[1]};
}

struct ExperimentArgs {
  std::string name;
  int n_max = 20;
  std::string profile = "const";
  double value = 1.0;
  double r1 = 0.5;
  std::string coeffs;
  int family_n = 1;
  double h = 1.0;
  double theta1 = 0.5 * std::numbers::pi;
  int count = 0;  // 0: use cfg.dim
  double x_min = 0.1, x_max = 10.0;
  int points = 25;
  std::string symbol_file;
  std::string collection_file;
  std::vector<double> orders{0.0};
  int window = 10;
  std::string poly_file;
  std::vector<std::string> z_points;
  std::string deltas = "0.005,0.01,0.02,0.05,0.1,0.2,0.5,1.0";
  std::string kind = "radial";
  bool alternating = false;
};

RadialProfile radial_profile_from_args(const ExperimentArgs& a) {
  RadialProfile p;
  if (a.profile == "const") {
    p.kind = RadialProfile::Kind::Const;
    p.value = a.value;
  } else if (a.profile == "chi") {
    p.kind = RadialProfile::Kind::Chi;
    p.r1 = a.r1;
  } else if (a.profile == "poly_r2") {
    p.kind = RadialProfile::Kind::PolyR2;
    const auto cs = parse_number_list(a.coeffs);
    p.coeffs = Eigen::Map<const RealVec>(cs.data(), cs.size());
  } else if (a.profile == "p0") {
    p.kind = RadialProfile::Kind::P0Family;
    p.n = a.family_n;
  } else {
    throw ValidationError("unknown radial profile: " + a.profile +
                          " (expected const|chi|poly_r2|p0)");
  }
  return p;
}

RealVec linear_grid(double lo, double hi, int points) {
  if (points < 1) throw ValidationError("grid needs at least one point");
  RealVec g(points);
  for (int i = 0; i < points; ++i) {
    g[i] = points == 1 ? lo : lo + (hi - lo) * i / (points - 1);
  }
  return g;
}

int run_experiment(const RunConfig& cfg, const ExperimentArgs& args) {
  const int count = args.count > 0 ? args.count : cfg.dim;  // 0 means auto
  if (args.name == "p0-approx") {
    emit_table(cfg, experiment_p0_approx(cfg, args.n_max));
  } else if (args.name == "gamma-radial") {
    emit_table(cfg, experiment_gamma_radial(cfg, radial_profile_from_args(args), count));
  } else if (args.name == "gamma-vertical") {
    HalfLineProfile p;
    if (args.profile == "const") {
      p.kind = HalfLineProfile::Kind::Const;
      p.value = args.value;
    } else if (args.profile == "chi") {
      p.kind = HalfLineProfile::Kind::Chi;
      p.h = args.h;
    } else if (args.profile == "exp") {
      p.kind = HalfLineProfile::Kind::ExpDecay;
    } else {
      throw ValidationError("unknown vertical profile (expected const|chi|exp)");
    }
    emit_table(cfg, experiment_gamma_vertical(
                        cfg, p, linear_grid(args.x_min, args.x_max, args.points)));
  } else if (args.name == "gamma-angular") {
    AngleProfile p;
    if (args.profile == "const") {
      p.kind = AngleProfile::Kind::Const;
      p.value = args.value;
    } else if (args.profile == "chi") {
      p.kind = AngleProfile::Kind::Chi;
      p.theta1 = args.theta1;
    } else {
      throw ValidationError("unknown angular profile (expected const|chi)");
    }
    double lo = args.x_min, hi = args.x_max;
    if (lo == 0.1 && hi == 10.0) { lo = -5.0; hi = 5.0; }  // friendlier default
    emit_table(cfg, experiment_gamma_angular(cfg, p, linear_grid(lo, hi, args.points)));
  } else if (args.name == "kcarleson") {
    if (args.symbol_file.empty()) throw ValidationError("kcarleson: --symbol required");
    const Symbol s = io::parse_symbol(io::load_json_file(args.symbol_file));
    emit_table(cfg, experiment_kcarleson(cfg, s, args.orders));
  } else if (args.name == "afn-type") {
    if (args.collection_file.empty()) throw ValidationError("afn-type: --collection required");
    const MeasureCollection c =
        io::parse_collection(io::load_json_file(args.collection_file));
    SeriesReport report;
    const io::Table t = experiment_afn_type(cfg, c, args.window, &report);
    emit_table(cfg, t);
    std::cerr << "verdict: " << to_string(report.verdict)
              << " (ratio threshold " << report.ratio_threshold << ", window "
              << report.window << (report.origin_rule ? ", origin rule" : "")
              << ")\n";
  } else if (args.name == "decay") {
    DecayReport report;
    const int sv_count = args.count > 0 ? args.count : std::min(cfg.dim, 21);
    emit_table(cfg, experiment_decay(cfg, args.r1, sv_count, &report));
    std::cerr << "classification: " << to_string(report.verdict)
              << " rate " << io::format_sci(report.rate)
              << (report.excluded ? " (" + report.note + ")" : "") << "\n";
  } else if (args.name == "weak-compress") {
    if (args.symbol_file.empty()) throw ValidationError("weak-compress: --symbol required");
    const Symbol s = io::parse_symbol(io::load_json_file(args.symbol_file));
    AnalyticPoly f = AnalyticPoly::basis(0) + AnalyticPoly::basis(1);
    if (!args.poly_file.empty()) {
      f = io::parse_poly(io::load_json_file(args.poly_file), "poly");
    }
    std::vector<Complex> zs;
    for (const auto& zp : args.z_points) zs.push_back(parse_point(zp));
    if (zs.empty()) {
      zs = {Complex{0.3, 0.0}, Complex{0.0, 0.2}, Complex{-0.25, 0.0},
            Complex{-0.1, -0.2}, Complex{0.15, 0.1}};
    }
    emit_table(cfg, experiment_weak_compress(cfg, s, f, zs));
  } else if (args.name == "oscillation") {
    SpectralData data;
    if (args.kind == "radial") {
      RealVec values(count);
      if (args.alternating) {
        for (int n = 0; n < count; ++n) values[n] = n % 2 == 0 ? 1.0 : -1.0;
      } else {
        const RadialProfile p = radial_profile_from_args(args);
        for (int n = 0; n < count; ++n) values[n] = radial_gamma(p, n, cfg.tol, p.breakpoints());
      }
      data = SpectralData::radial(std::move(values));
    } else if (args.kind == "vertical" || args.kind == "angular") {
      const RealVec grid = linear_grid(args.x_min, args.x_max, args.points);
      RealVec values(grid.size());
      if (args.kind == "vertical") {
        HalfLineProfile p;
        p.kind = args.profile == "chi" ? HalfLineProfile::Kind::Chi
                                       : HalfLineProfile::Kind::Const;
        p.h = args.h;
        for (Eigen::Index i = 0; i < grid.size(); ++i) {
          values[i] = vertical_gamma(p, grid[i], 1e-11, p.breakpoints());
        }
        data = SpectralData::vertical(grid, std::move(values));
      } else {
        AngleProfile p;
        p.kind = args.profile == "chi" ? AngleProfile::Kind::Chi
                                       : AngleProfile::Kind::Const;
        p.theta1 = args.theta1;
        for (Eigen::Index i = 0; i < grid.size(); ++i) {
          values[i] = angular_gamma(p, grid[i], 1e-11, p.breakpoints());
        }
        data = SpectralData::angular(grid, std::move(values));
      }
    } else {
      throw ValidationError("oscillation: kind must be radial|vertical|angular");
    }
    const auto ds = parse_number_list(args.deltas);
    emit_table(cfg, experiment_oscillation(
                        cfg, data, Eigen::Map<const RealVec>(ds.data(), ds.size())));
  } else {
    std::cerr << "unknown experiment '" << args.name << "'. available:";
    for (const auto& n : experiment_names()) std::cerr << ' ' << n;
    std::cerr << '\n';
    return 2;
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  RunConfig cfg;

  // First pass: a config file supplies defaults, explicit flags then override.
  for (int i = 1; i < argc; ++i) {
    const std::string arg = argv[i];
    std::string path;
    if (arg == "--config" && i + 1 < argc) {
      path = argv[i + 1];
    } else if (arg.rfind("--config=", 0) == 0) {
      path = arg.substr(9);
    }
    if (!path.empty()) {
      try {
        apply_config_json(cfg, io::load_json_file(path));
      } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
      }
    }
  }

  CLI::App app{"Toeplitz operators on the Bergman space of the unit disk"};
  app.require_subcommand(1);
  std::string config_path;
  app.add_option("--config", config_path, "JSON config file (defaults layer)");
  app.add_option("--dim", cfg.dim, "truncation dimension");
  app.add_option("--n-radial", cfg.n_radial, "radial quadrature nodes");
  app.add_option("--n-theta", cfg.n_theta, "angular quadrature nodes");
  app.add_option("--p", cfg.p, "Carleson class constant p in (0,1)");
  app.add_option("--tol", cfg.tol, "numeric tolerance");
  app.add_option("--seed", cfg.seed, "seed for randomized checks");
  app.add_option("--out", cfg.out, "output file (default stdout)");
  app.add_option("--format", cfg.format, "output format: csv|json");

  std::string symbol_file, matrix_file;
  int svd_count = 8;

  CLI::App* assemble_cmd = app.add_subcommand("assemble", "assemble a symbol into a truncated operator");
  assemble_cmd->add_option("--symbol", symbol_file, "symbol JSON file")->required();
  assemble_cmd->fallthrough();

  CLI::App* validate_cmd = app.add_subcommand("validate", "check a symbol file against the schema and invariants");
  validate_cmd->add_option("--symbol", symbol_file, "symbol JSON file")->required();
  validate_cmd->fallthrough();

  CLI::App* norm_cmd = app.add_subcommand("norm", "operator norm of a matrix file");
  norm_cmd->add_option("--matrix", matrix_file, "matrix JSON file")->required();
  norm_cmd->fallthrough();

  CLI::App* svd_cmd = app.add_subcommand("svd", "top singular values of a matrix file");
  svd_cmd->add_option("--matrix", matrix_file, "matrix JSON file")->required();
  svd_cmd->add_option("--count", svd_count, "number of singular values");
  svd_cmd->fallthrough();

  ExperimentArgs ex;
  CLI::App* exp_cmd = app.add_subcommand("experiment", "run a named experiment");
  exp_cmd->add_option("name", ex.name, "experiment name")->required();
  exp_cmd->add_option("--n-max", ex.n_max, "largest family index (p0-approx)");
  exp_cmd->add_option("--profile", ex.profile, "profile kind");
  exp_cmd->add_option("--value", ex.value, "constant profile value");
  exp_cmd->add_option("--r1", ex.r1, "indicator radius");
  exp_cmd->add_option("--coeffs", ex.coeffs, "poly_r2 coefficients c0,c1,...");
  exp_cmd->add_option("--n", ex.family_n, "family index for the p0 profile");
  exp_cmd->add_option("--cut", ex.h, "vertical indicator cut");
  exp_cmd->add_option("--theta1", ex.theta1, "angular indicator cut");
  exp_cmd->add_option("--count", ex.count, "sequence length (0: dim)");
  exp_cmd->add_option("--x-min", ex.x_min, "grid start");
  exp_cmd->add_option("--x-max", ex.x_max, "grid end");
  exp_cmd->add_option("--points", ex.points, "grid size");
  exp_cmd->add_option("--symbol", ex.symbol_file, "symbol JSON file");
  exp_cmd->add_option("--collection", ex.collection_file, "measure collection JSON file");
  exp_cmd->add_option("--k", ex.orders, "class orders (repeatable)");
  exp_cmd->add_option("--window", ex.window, "ratio-test window");
  exp_cmd->add_option("--f", ex.poly_file, "test polynomial JSON file");
  exp_cmd->add_option("--z", ex.z_points, "evaluation points re,im (repeatable)");
  exp_cmd->add_option("--deltas", ex.deltas, "oscillation resolutions");
  exp_cmd->add_option("--kind", ex.kind, "oscillation kind: radial|vertical|angular");
  exp_cmd->add_flag("--alternating", ex.alternating, "use the sequence (-1)^n");
  exp_cmd->fallthrough();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    const DiskRule rule = cfg.make_rule();
    if (assemble_cmd->parsed()) {
      const Symbol s = io::parse_symbol(io::load_json_file(symbol_file));
      const Mat t = assemble(s, cfg.dim, rule);
      emit_json(cfg, io::matrix_to_json(t));
      std::cerr << "op_norm: " << io::format_sci(op_norm(t, cfg.tol)) << '\n';
    } else if (validate_cmd->parsed()) {
      const Symbol s = io::parse_symbol(io::load_json_file(symbol_file));
      std::cout << "OK " << symbol_kind_name(s)
                << " support_radius " << io::format_sci(support_radius(s)) << '\n';
    } else if (norm_cmd->parsed()) {
      const Mat t = io::parse_matrix(io::load_json_file(matrix_file));
      std::cout << io::format_sci(op_norm(t, cfg.tol)) << '\n';
    } else if (svd_cmd->parsed()) {
      const Mat t = io::parse_matrix(io::load_json_file(matrix_file));
      const RealVec s = singular_values(t, svd_count);
      io::Table table;
      table.columns = {"n", "sigma"};
      for (Eigen::Index i = 0; i < s.size(); ++i) {
        auto& row = table.new_row();
        row = {std::to_string(i), io::format_sci(s[i])};
      }
      emit_table(cfg, table);
    } else if (exp_cmd->parsed()) {
      return run_experiment(cfg, ex);
    }
  } catch (const ValidationError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  } catch (const NumericError& e) {
    std::cerr << "numeric error: " << e.what() << '\n';
    return 3;
  } catch (const io::json::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }
  return 0;
}
