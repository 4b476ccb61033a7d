#include "bergtop/io.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>

namespace bergtop::io {

namespace {

[[noreturn]] void fail(const std::string& path, const std::string& what) {
  throw ValidationError(path + ": " + what);
}

const json& need(const json& v, const char* key, const std::string& path) {
  if (!v.is_object() || !v.contains(key)) fail(path, std::string("missing field '") + key + "'");
  return v[key];
}

double parse_real(const json& v, const std::string& path) {
  if (!v.is_number()) fail(path, "expected a number");
  return v.get<double>();
}

int parse_order(const json& v, const std::string& path) {
  if (!v.is_number_integer() || v.get<int>() < 0) {
    fail(path, "expected a nonnegative integer");
  }
  return v.get<int>();
}

}  // namespace

Complex parse_complex(const json& v, const std::string& path) {
  if (!v.is_array() || v.size() != 2 || !v[0].is_number() || !v[1].is_number()) {
    fail(path, "expected a complex number as [re, im]");
  }
  return {v[0].get<double>(), v[1].get<double>()};
}

json complex_to_json(Complex z) { return json::array({z.real(), z.imag()}); }

AnalyticPoly parse_poly(const json& v, const std::string& path) {
  if (!v.is_array() || v.empty()) fail(path, "expected a nonempty coefficient list");
  Vec c(v.size());
  for (std::size_t k = 0; k < v.size(); ++k) {
    c[static_cast<Eigen::Index>(k)] =
        parse_complex(v[k], path + "/" + std::to_string(k));
  }
  return AnalyticPoly(std::move(c));
}

json poly_to_json(const AnalyticPoly& f) {
  json out = json::array();
  for (int k = 0; k < f.size(); ++k) out.push_back(complex_to_json(f.coeff(k)));
  return out;
}

namespace {

RadialProfile parse_radial_profile(const json& v, const std::string& path) {
  RadialProfile p;
  const json& kind = need(v, "kind", path);
  if (kind == "const") {
    p.kind = RadialProfile::Kind::Const;
    p.value = parse_real(need(v, "value", path), path + "/value");
  } else if (kind == "chi") {
    p.kind = RadialProfile::Kind::Chi;
    p.r1 = parse_real(need(v, "r1", path), path + "/r1");
    if (!(p.r1 > 0.0 && p.r1 <= 1.0)) fail(path + "/r1", "must lie in (0, 1]");
  } else if (kind == "poly_r2") {
    p.kind = RadialProfile::Kind::PolyR2;
    const json& cs = need(v, "coeffs", path);
    if (!cs.is_array() || cs.empty()) fail(path + "/coeffs", "expected a nonempty list");
    p.coeffs.resize(cs.size());
    for (std::size_t k = 0; k < cs.size(); ++k) {
      p.coeffs[static_cast<Eigen::Index>(k)] =
          parse_real(cs[k], path + "/coeffs/" + std::to_string(k));
    }
  } else if (kind == "p0_family") {
    p.kind = RadialProfile::Kind::P0Family;
    p.n = parse_order(need(v, "n", path), path + "/n");
  } else {
    fail(path + "/kind", "unknown radial profile kind");
  }
  return p;
}

json radial_profile_to_json(const RadialProfile& p) {
  switch (p.kind) {
    case RadialProfile::Kind::Const:
      return {{"kind", "const"}, {"value", p.value}};
    case RadialProfile::Kind::Chi:
      return {{"kind", "chi"}, {"r1", p.r1}};
    case RadialProfile::Kind::PolyR2: {
      json cs = json::array();
      for (Eigen::Index k = 0; k < p.coeffs.size(); ++k) cs.push_back(p.coeffs[k]);
      return {{"kind", "poly_r2"}, {"coeffs", cs}};
    }
    case RadialProfile::Kind::P0Family:
      return {{"kind", "p0_family"}, {"n", p.n}};
  }
  fail("profile", "unserializable profile");
}

}  // namespace

Symbol parse_symbol(const json& v) {
  const std::string path = "symbol";
  const json& type = need(v, "type", path);
  Symbol out;
  if (type == "bounded_radial") {
    out = RadialSymbol::from_profile(
        parse_radial_profile(need(v, "profile", path), path + "/profile"));
  } else if (type == "discrete") {
    DiscreteMeasure d;
    const json& atoms = need(v, "atoms", path);
    if (!atoms.is_array()) fail(path + "/atoms", "expected a list");
    for (std::size_t i = 0; i < atoms.size(); ++i) {
      const std::string ap = path + "/atoms/" + std::to_string(i);
      d.atoms.push_back({parse_complex(need(atoms[i], "zeta", ap), ap + "/zeta"),
                         parse_complex(need(atoms[i], "m", ap), ap + "/m")});
    }
    out = std::move(d);
  } else if (type == "circle") {
    CircleMeasure c;
    if (v.contains("theta_convention")) {
      const json& conv = v["theta_convention"];
      if (conv == "definition") {
        c.convention = ThetaConvention::Definition;
      } else if (conv == "analytic") {
        c.convention = ThetaConvention::AnalyticIdentity;
      } else {
        fail(path + "/theta_convention", "expected 'definition' or 'analytic'");
      }
    }
    const json& entries = need(v, "entries", path);
    if (!entries.is_array()) fail(path + "/entries", "expected a list");
    for (std::size_t i = 0; i < entries.size(); ++i) {
      const std::string ep = path + "/entries/" + std::to_string(i);
      CircleEntry e;
      e.radius = parse_real(need(entries[i], "r", ep), ep + "/r");
      e.mass = parse_complex(need(entries[i], "m", ep), ep + "/m");
      e.radial_order_left = entries[i].contains("dr_f")
          ? parse_order(entries[i]["dr_f"], ep + "/dr_f") : 0;
      e.circular_order_left = entries[i].contains("dtheta_f")
          ? parse_order(entries[i]["dtheta_f"], ep + "/dtheta_f") : 0;
      e.radial_order_right = entries[i].contains("dr_g")
          ? parse_order(entries[i]["dr_g"], ep + "/dr_g") : 0;
      c.entries.push_back(e);
    }
    out = std::move(c);
  } else if (type == "deriv_delta") {
    DerivativeDeltaCollection d;
    const json& terms = need(v, "terms", path);
    if (!terms.is_array()) fail(path + "/terms", "expected a list");
    for (std::size_t i = 0; i < terms.size(); ++i) {
      const std::string tp = path + "/terms/" + std::to_string(i);
      d.terms.push_back({parse_complex(need(terms[i], "zeta", tp), tp + "/zeta"),
                         parse_complex(need(terms[i], "m", tp), tp + "/m"),
                         parse_order(need(terms[i], "l", tp), tp + "/l"),
                         parse_order(need(terms[i], "j", tp), tp + "/j")});
    }
    out = std::move(d);
  } else if (type == "spectral") {
    SpectralSequenceSymbol s;
    const json& values = need(v, "values", path);
    if (!values.is_array() || values.empty()) {
      fail(path + "/values", "expected a nonempty list");
    }
    s.gamma.resize(values.size());
    for (std::size_t i = 0; i < values.size(); ++i) {
      s.gamma[static_cast<Eigen::Index>(i)] =
          parse_complex(values[i], path + "/values/" + std::to_string(i));
    }
    out = std::move(s);
  } else if (type == "finite_rank") {
    FiniteRankFormSymbol s;
    const json& fl = need(v, "f_list", path);
    const json& gl = need(v, "g_list", path);
    if (!fl.is_array() || !gl.is_array() || fl.empty() || fl.size() != gl.size()) {
      fail(path, "f_list and g_list must be nonempty lists of equal length");
    }
    for (std::size_t i = 0; i < fl.size(); ++i) {
      s.left.push_back(parse_poly(fl[i], path + "/f_list/" + std::to_string(i)));
      s.right.push_back(parse_poly(gl[i], path + "/g_list/" + std::to_string(i)));
    }
    out = std::move(s);
  } else {
    fail(path + "/type", "unknown symbol type");
  }
  validate(out);
  return out;
}

json symbol_to_json(const Symbol& s) {
  struct Writer {
    json operator()(const RadialSymbol& r) const {
      if (!r.description) {
        throw ValidationError("symbol_to_json: radial symbol has no serializable profile");
      }
      return {{"type", "bounded_radial"},
              {"profile", radial_profile_to_json(*r.description)}};
    }
    json operator()(const DiscreteMeasure& d) const {
      json atoms = json::array();
      for (const auto& a : d.atoms) {
        atoms.push_back({{"zeta", complex_to_json(a.position)},
                         {"m", complex_to_json(a.mass)}});
      }
      return {{"type", "discrete"}, {"atoms", atoms}};
    }
    json operator()(const CircleMeasure& c) const {
      json entries = json::array();
      for (const auto& e : c.entries) {
        entries.push_back({{"r", e.radius},
                           {"m", complex_to_json(e.mass)},
                           {"dr_f", e.radial_order_left},
                           {"dtheta_f", e.circular_order_left},
                           {"dr_g", e.radial_order_right}});
      }
      return {{"type", "circle"},
              {"entries", entries},
              {"theta_convention",
               c.convention == ThetaConvention::Definition ? "definition"
                                                           : "analytic"}};
    }
    json operator()(const DerivativeDeltaCollection& d) const {
      json terms = json::array();
      for (const auto& t : d.terms) {
        terms.push_back({{"zeta", complex_to_json(t.position)},
                         {"m", complex_to_json(t.mass)},
                         {"l", t.order_left},
                         {"j", t.order_right}});
      }
      return {{"type", "deriv_delta"}, {"terms", terms}};
    }
    json operator()(const SpectralSequenceSymbol& sp) const {
      json values = json::array();
      for (Eigen::Index i = 0; i < sp.gamma.size(); ++i) {
        values.push_back(complex_to_json(sp.gamma[i]));
      }
      return {{"type", "spectral"}, {"values", values}};
    }
    json operator()(const FiniteRankFormSymbol& fr) const {
      json fl = json::array(), gl = json::array();
      for (const auto& f : fr.left) fl.push_back(poly_to_json(f));
      for (const auto& g : fr.right) gl.push_back(poly_to_json(g));
      return {{"type", "finite_rank"}, {"f_list", fl}, {"g_list", gl}};
    }
  };
  return std::visit(Writer{}, s);
}

Mat parse_matrix(const json& v) {
  const std::string path = "matrix";
  const json& dim = need(v, "dim", path);
  if (!dim.is_number_integer() || dim.get<int>() < 1) {
    fail(path + "/dim", "expected a positive integer");
  }
  const int n = dim.get<int>();
  const json& entries = need(v, "entries", path);
  if (!entries.is_array() || entries.size() != static_cast<std::size_t>(n) * n) {
    fail(path + "/entries", "expected dim*dim complex entries, row-major");
  }
  Mat m(n, n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      m(i, j) = parse_complex(entries[static_cast<std::size_t>(i) * n + j],
                              path + "/entries/" + std::to_string(i * n + j));
    }
  }
  return m;
}

json matrix_to_json(const Mat& m) {
  json entries = json::array();
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    for (Eigen::Index j = 0; j < m.cols(); ++j) {
      entries.push_back(complex_to_json(m(i, j)));
    }
  }
  return {{"dim", m.rows()}, {"entries", entries}};
}

MeasureCollection parse_collection(const json& v) {
  const std::string path = "collection";
  MeasureCollection c;
  const json& entries = need(v, "entries", path);
  if (!entries.is_array() || entries.empty()) {
    fail(path + "/entries", "expected a nonempty list");
  }
  for (std::size_t i = 0; i < entries.size(); ++i) {
    const std::string ep = path + "/entries/" + std::to_string(i);
    CollectionEntry e;
    e.order_left = parse_order(need(entries[i], "l", ep), ep + "/l");
    e.order_right = parse_order(need(entries[i], "j", ep), ep + "/j");
    e.measure = parse_symbol(need(entries[i], "measure", ep));
    c.entries.push_back(std::move(e));
  }
  return c;
}

json to_json(const KCarlesonReport& r) {
  return {{"varpi", r.varpi},
          {"argsup", complex_to_json(r.argsup)},
          {"vanishing", r.vanishing},
          {"method", r.method == SupMethod::Exact ? "exact" : "grid"},
          {"k", r.k},
          {"p", r.p}};
}

json to_json(const SeriesReport& r) {
  json terms = json::array(), sums = json::array(), levels = json::array();
  for (Eigen::Index i = 0; i < r.level_terms.size(); ++i) {
    terms.push_back(r.level_terms[i]);
    sums.push_back(r.partial_sums[i]);
    levels.push_back(r.levels[static_cast<std::size_t>(i)]);
  }
  return {{"verdict", to_string(r.verdict)},
          {"levels", levels},
          {"terms", terms},
          {"partial_sums", sums},
          {"ratio_threshold", r.ratio_threshold},
          {"window", r.window},
          {"origin_rule", r.origin_rule}};
}

json to_json(const DecayReport& r) {
  return {{"verdict", to_string(r.verdict)},
          {"rate", r.rate},
          {"slope_first_half", r.slope_first},
          {"mean_curvature", r.mean_curvature},
          {"excluded", r.excluded},
          {"note", r.note}};
}

json to_json(const FormBoundReport& r) {
  return {{"empirical_C", r.empirical_constant},
          {"denominator", r.denominator},
          {"max_form_value", r.max_form_value},
          {"trials", r.trials},
          {"seed", r.seed}};
}

std::string format_sci(double x) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.16e", x);
  return buf;
}

std::string to_csv(const Table& t) {
  std::ostringstream out;
  for (std::size_t i = 0; i < t.columns.size(); ++i) {
    if (i) out << ',';
    out << t.columns[i];
  }
  out << '\n';
  for (const auto& row : t.rows) {
    for (std::size_t i = 0; i < row.size(); ++i) {
      if (i) out << ',';
      out << row[i];
    }
    out << '\n';
  }
  return out.str();
}

json to_json(const Table& t) {
  json rows = json::array();
  for (const auto& row : t.rows) {
    json r = json::object();
    for (std::size_t i = 0; i < row.size() && i < t.columns.size(); ++i) {
      r[t.columns[i]] = row[i];
    }
    rows.push_back(r);
  }
  return {{"columns", t.columns}, {"rows", rows}};
}

json load_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ValidationError("cannot open file: " + path);
  try {
    return json::parse(in);
  } catch (const json::parse_error& e) {
    throw ValidationError(path + ": " + e.what());
  }
}

}  // namespace bergtop::io
