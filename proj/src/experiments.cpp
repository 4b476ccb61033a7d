#include "bergtop/experiments.hpp"

#include <cmath>

#include "bergtop/operators.hpp"

namespace bergtop {

namespace {

double factorial(int n) {
  double v = 1.0;
  for (int i = 2; i <= n; ++i) v *= i;
  return v;
}

std::string fmt(double x) { return io::format_sci(x); }

}  // namespace

void apply_config_json(RunConfig& cfg, const io::json& j) {
  if (!j.is_object()) throw ValidationError("config: expected a JSON object");
  if (j.contains("dim")) cfg.dim = j["dim"].get<int>();
  if (j.contains("n_radial")) cfg.n_radial = j["n_radial"].get<int>();
  if (j.contains("n_theta")) cfg.n_theta = j["n_theta"].get<int>();
  if (j.contains("p")) cfg.p = j["p"].get<double>();
  if (j.contains("tol")) cfg.tol = j["tol"].get<double>();
  if (j.contains("seed")) cfg.seed = j["seed"].get<std::uint64_t>();
  if (j.contains("format")) cfg.format = j["format"].get<std::string>();
  if (j.contains("out")) cfg.out = j["out"].get<std::string>();
  if (cfg.dim < 1 || cfg.n_radial < 1 || cfg.n_theta < 1) {
    throw ValidationError("config: dimensions must be positive");
  }
  if (!(cfg.p > 0.0 && cfg.p < 1.0)) throw ValidationError("config: p must lie in (0,1)");
  if (!(cfg.tol > 0.0)) throw ValidationError("config: tol must be positive");
}

double HalfLineProfile::operator()(double t) const {
  switch (kind) {
    case Kind::Const: return value;
    case Kind::Chi: return t <= h ? 1.0 : 0.0;
    case Kind::ExpDecay: return std::exp(-t);
  }
  return 0.0;
}

double AngleProfile::operator()(double theta) const {
  switch (kind) {
    case Kind::Const: return value;
    case Kind::Chi: return theta <= theta1 ? 1.0 : 0.0;
  }
  return 0.0;
}

io::Table experiment_p0_approx(const RunConfig& cfg, int n_max) {
  if (n_max < 1) throw ValidationError("p0-approx: n_max must be positive");
  io::Table t;
  t.columns = {"n", "closed_form", "norm_spectral", "norm_quadrature",
               "abs_err_spectral", "abs_err_quadrature", "identity"};
  const DiskRule rule = cfg.make_rule();
  for (int n = 1; n <= n_max; ++n) {
    const double reference = 2.0 / (n + 4.0);
    Vec diag_exact(cfg.dim), diag_quad(cfg.dim);
    const RadialProfile prof{RadialProfile::Kind::P0Family, 1.0, 0.5, {}, n};
    for (int k = 0; k < cfg.dim; ++k) {
      const double delta0 = k == 0 ? 1.0 : 0.0;
      diag_exact[k] = approx_family_gamma(n, k) - delta0;
      diag_quad[k] = radial_gamma(prof, k, cfg.tol) - delta0;
    }
    const double ns = op_norm(assemble(SpectralSequenceSymbol{diag_exact},
                                       cfg.dim, rule), cfg.tol);
    const double nq = op_norm(assemble(SpectralSequenceSymbol{diag_quad},
                                       cfg.dim, rule), cfg.tol);
    auto& row = t.new_row();
    row = {std::to_string(n), fmt(reference), fmt(ns),  fmt(nq),
           fmt(std::abs(ns - reference)), fmt(std::abs(nq - reference)),
           "norm(T_a_n - P_0) == 2/(n+4)"};
  }
  return t;
}

io::Table experiment_gamma_radial(const RunConfig& cfg, const RadialProfile& a,
                                  int count) {
  if (count < 1) throw ValidationError("gamma-radial: count must be positive");
  io::Table t;
  t.columns = {"n", "gamma", "identity"};
  for (int n = 0; n < count; ++n) {
    auto& row = t.new_row();
    row = {std::to_string(n), fmt(radial_gamma(a, n, cfg.tol, a.breakpoints())),
           "gamma(n) == (n+1) int_0^1 a(sqrt(r)) r^n dr"};
  }
  return t;
}

io::Table experiment_gamma_vertical(const RunConfig& cfg,
                                    const HalfLineProfile& a,
                                    const RealVec& grid) {
  (void)cfg;
  io::Table t;
  t.columns = {"x", "gamma", "identity"};
  for (Eigen::Index i = 0; i < grid.size(); ++i) {
    auto& row = t.new_row();
    row = {fmt(grid[i]), fmt(vertical_gamma(a, grid[i], 1e-11, a.breakpoints())),
           "gamma(x) == 2x int_0^inf a(t) e^{-2tx} dt"};
  }
  return t;
}

io::Table experiment_gamma_angular(const RunConfig& cfg, const AngleProfile& a,
                                   const RealVec& grid) {
  (void)cfg;
  io::Table t;
  t.columns = {"x", "gamma", "identity"};
  for (Eigen::Index i = 0; i < grid.size(); ++i) {
    auto& row = t.new_row();
    row = {fmt(grid[i]), fmt(angular_gamma(a, grid[i], 1e-11, a.breakpoints())),
           "gamma(x) == 2x/(1-e^{-2 pi x}) int_0^pi a e^{-2x theta} dtheta"};
  }
  return t;
}

io::Table experiment_kcarleson(const RunConfig& cfg, const Symbol& measure,
                               const std::vector<double>& orders) {
  io::Table t;
  t.columns = {"k", "p", "varpi", "argsup_re", "argsup_im", "vanishing",
               "method", "identity"};
  for (double k : orders) {
    const KCarlesonReport r = varpi(measure, KClassParams{k, cfg.p});
    auto& row = t.new_row();
    row = {fmt(k), fmt(cfg.p), fmt(r.varpi), fmt(r.argsup.real()),
           fmt(r.argsup.imag()), r.vanishing ? "true" : "false",
           r.method == SupMethod::Exact ? "exact" : "grid",
           "varpi_k == sup_z mass(z) (1-|z|)^{-2(k+1)} Gamma(k+1)^2 p^{-2k}"};
  }
  return t;
}

io::Table experiment_afn_type(const RunConfig& cfg,
                              const MeasureCollection& collection, int window,
                              SeriesReport* report_out) {
  const SeriesReport r = check_norm_af_type(collection, cfg.p, window);
  if (report_out != nullptr) *report_out = r;
  io::Table t;
  t.columns = {"level", "term", "partial_sum", "verdict", "identity"};
  for (Eigen::Index i = 0; i < r.level_terms.size(); ++i) {
    auto& row = t.new_row();
    row = {std::to_string(r.levels[static_cast<std::size_t>(i)]),
           fmt(r.level_terms[i]), fmt(r.partial_sums[i]), to_string(r.verdict),
           "sum_lj M_{l,k}^(1/2) M_{j,k}^(1/2) varpi_k(mu_lj) converges"};
  }
  return t;
}

io::Table experiment_decay(const RunConfig& cfg, double r1, int count,
                           DecayReport* report_out) {
  if (!(r1 > 0.0 && r1 < 1.0)) throw ValidationError("decay: r1 must lie in (0,1)");
  if (count < 8 || count > cfg.dim) {
    throw ValidationError("decay: count must lie in [8, dim]");
  }
  const DiskRule rule = cfg.make_rule();
  const RadialProfile chi{RadialProfile::Kind::Chi, 1.0, r1, {}, 1};
  Vec gamma(cfg.dim);
  for (int n = 0; n < cfg.dim; ++n) gamma[n] = radial_gamma(chi, n, cfg.tol, chi.breakpoints());
  const Mat op = assemble(SpectralSequenceSymbol{gamma}, cfg.dim, rule);
  const RealVec s = singular_values(op, count);
  const DecayReport r = decay_classify(s);
  if (report_out != nullptr) *report_out = r;

  io::Table t;
  t.columns = {"n", "s_n", "reference", "abs_err", "verdict", "rate", "identity"};
  for (int n = 0; n < count; ++n) {
    const double ref = std::pow(r1, 2.0 * (n + 1));
    auto& row = t.new_row();
    row = {std::to_string(n), fmt(s[n]), fmt(ref), fmt(std::abs(s[n] - ref)),
           to_string(r.verdict), fmt(r.rate), "s_n == r1^{2(n+1)}"};
  }
  return t;
}

io::Table experiment_weak_compress(const RunConfig& cfg, const Symbol& symbol,
                                   const AnalyticPoly& f,
                                   const std::vector<Complex>& points) {
  if (f.degree() >= cfg.dim) {
    throw ValidationError("weak-compress: test polynomial degree must be below dim");
  }
  const DiskRule rule = cfg.make_rule();
  const Mat op = assemble(symbol, cfg.dim, rule);
  std::vector<int> schedule;
  for (int m = 1; m <= cfg.dim; ++m) schedule.push_back(m);

  io::Table t;
  t.columns = {"m", "z_re", "z_im", "value_re", "value_im", "abs_err", "identity"};
  for (Complex z : points) {
    const WeakConvergenceResult r =
        weak_convergence_check(op, f, z, schedule, cfg.tol);
    for (std::size_t i = 0; i < schedule.size(); ++i) {
      auto& row = t.new_row();
      row = {std::to_string(schedule[i]), fmt(z.real()), fmt(z.imag()),
             fmt(r.values[i].real()), fmt(r.values[i].imag()),
             fmt(std::abs(r.values[i] - r.reference)),
             "(compress(T,m) f)(z) -> (T f)(z)"};
    }
  }
  return t;
}

io::Table experiment_oscillation(const RunConfig& cfg, const SpectralData& data,
                                 const RealVec& deltas) {
  (void)cfg;
  const OscillationProfile p = oscillation_profile(data, deltas);
  io::Table t;
  t.columns = {"delta", "omega", "identity"};
  for (Eigen::Index i = 0; i < p.delta.size(); ++i) {
    auto& row = t.new_row();
    row = {fmt(p.delta[i]), fmt(p.omega[i]),
           "omega(delta) == max |gamma(n)-gamma(m)| within metric distance delta"};
  }
  return t;
}

std::vector<std::string> experiment_names() {
  return {"p0-approx",  "gamma-radial",  "gamma-vertical",
          "gamma-angular", "kcarleson",  "afn-type",
          "decay",      "weak-compress", "oscillation"};
}

DerivativeDeltaCollection hyperfunction_origin_symbol(int order) {
  if (order < 1) throw ValidationError("hyperfunction: order must be positive");
  DerivativeDeltaCollection c;
  for (int s = 0; s <= 2 * (order - 1); ++s) {
    for (int l = 0; l <= s; ++l) {
      const int j = s - l;
      if (l >= order || j >= order) continue;
      const double m = std::pow(4.0, -s) / (factorial(l) * factorial(j));
      c.terms.push_back({Complex{0.0, 0.0}, Complex{m, 0.0}, l, j});
    }
  }
  return c;
}

MeasureCollection hyperfunction_origin_collection(int order) {
  const DerivativeDeltaCollection sym = hyperfunction_origin_symbol(order);
  MeasureCollection c;
  for (const auto& t : sym.terms) {
    CollectionEntry e;
    e.order_left = t.order_left;
    e.order_right = t.order_right;
    e.measure = DiscreteMeasure{{{t.position, t.mass}}};
    c.entries.push_back(std::move(e));
  }
  return c;
}

}  // namespace bergtop
