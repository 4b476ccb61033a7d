#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "bergtop/experiments.hpp"
#include "bergtop/io.hpp"
#include "bergtop/rng.hpp"
#include "bergtop/symbols.hpp"

using namespace bergtop;
using io::json;

namespace {
const DiskRule& rule() {
  static const DiskRule r = DiskRule::make(32, 64);
  return r;
}
}  // namespace

TEST_CASE("symbol schema round trip preserves matrix elements") {
  std::vector<json> docs = {
      json::parse(R"({"type":"bounded_radial","profile":{"kind":"chi","r1":0.7}})"),
      json::parse(R"({"type":"bounded_radial","profile":{"kind":"poly_r2","coeffs":[0.5,-0.25]}})"),
      json::parse(R"({"type":"discrete","atoms":[{"zeta":[0.3,-0.1],"m":[1,2]}]})"),
      json::parse(R"({"type":"circle","entries":[{"r":0.6,"m":[1,0],"dr_f":1,"dtheta_f":1,"dr_g":0}]})"),
      json::parse(R"({"type":"deriv_delta","terms":[{"zeta":[0,0],"m":[0.5,0],"l":1,"j":2}]})"),
      json::parse(R"({"type":"spectral","values":[[1,0],[-1,0],[0.5,0.5]]})"),
      json::parse(R"({"type":"finite_rank","f_list":[[[1,0],[0,1]]],"g_list":[[[0,0],[2,0]]]})"),
  };
  for (const json& doc : docs) {
    const Symbol s = io::parse_symbol(doc);
    const Symbol back = io::parse_symbol(io::symbol_to_json(s));
    for (int p = 0; p < 5; ++p) {
      for (int q = 0; q < 5; ++q) {
        CHECK(matrix_element(s, p, q, rule()) == matrix_element(back, p, q, rule()));
      }
    }
  }
}

TEST_CASE("schema violations carry field paths") {
  CHECK_THROWS_WITH_AS(io::parse_symbol(json::parse(R"({"foo":1})")),
                       "symbol: missing field 'type'", ValidationError);
  CHECK_THROWS_AS(io::parse_symbol(json::parse(R"({"type":"nope"})")), ValidationError);
  try {
    io::parse_symbol(json::parse(R"({"type":"discrete","atoms":[{"zeta":[0.3],"m":[1,0]}]})"));
    CHECK(false);
  } catch (const ValidationError& e) {
    CHECK(std::string(e.what()).find("atoms/0/zeta") != std::string::npos);
  }
  // boundary support is rejected on parse
  CHECK_THROWS_AS(io::parse_symbol(json::parse(
                      R"({"type":"discrete","atoms":[{"zeta":[1.0,0],"m":[1,0]}]})")),
                  ValidationError);
  CHECK_THROWS_AS(io::parse_symbol(json::parse(
                      R"({"type":"circle","entries":[{"r":0.5,"m":[1,0],"dr_f":-1}]})")),
                  ValidationError);
}

TEST_CASE("matrix schema round trip") {
  SplitMix64 rng(31415);
  Mat m(3, 3);
  for (int i = 0; i < 3; ++i) {
    for (int j = 0; j < 3; ++j) m(i, j) = rng.complex_in_square();
  }
  const Mat back = io::parse_matrix(io::matrix_to_json(m));
  CHECK((m - back).norm() == 0.0);
  CHECK_THROWS_AS(io::parse_matrix(json::parse(R"({"dim":2,"entries":[[1,0]]})")),
                  ValidationError);
  CHECK_THROWS_AS(io::parse_matrix(json::parse(R"({"entries":[]})")), ValidationError);
}

TEST_CASE("measure collection schema") {
  const json doc = json::parse(R"({
    "entries": [
      {"l": 0, "j": 0, "measure": {"type":"discrete","atoms":[{"zeta":[0,0],"m":[1,0]}]}},
      {"l": 1, "j": 1, "measure": {"type":"discrete","atoms":[{"zeta":[0,0],"m":[0.25,0]}]}}
    ]})");
  const MeasureCollection c = io::parse_collection(doc);
  CHECK(c.entries.size() == 2);
  CHECK(c.entries[1].order_left == 1);
  const SeriesReport r = check_norm_af_type(c, 1.0 / 9.0, 10);
  CHECK(r.origin_rule);
  CHECK_THROWS_AS(io::parse_collection(json::parse(R"({"entries":[]})")), ValidationError);
}

TEST_CASE("full-precision formatting and CSV shape") {
  CHECK(io::format_sci(1.0 / 3.0) == "3.3333333333333331e-01");
  CHECK(io::format_sci(1.0) == "1.0000000000000000e+00");
  io::Table t;
  t.columns = {"a", "b"};
  auto& r0 = t.new_row();
  r0 = {"1", io::format_sci(0.5)};
  CHECK(io::to_csv(t) == "a,b\n1,5.0000000000000000e-01\n");
  const json tj = io::to_json(t);
  CHECK(tj["rows"][0]["b"] == "5.0000000000000000e-01");
}

TEST_CASE("experiment output is deterministic") {
  const RunConfig cfg;
  const RadialProfile prof{RadialProfile::Kind::Chi, 1.0, 0.9, {}, 1};
  const std::string once = io::to_csv(experiment_gamma_radial(cfg, prof, 16));
  const std::string twice = io::to_csv(experiment_gamma_radial(cfg, prof, 16));
  CHECK(once == twice);
  CHECK(once.find("identity") != std::string::npos);
}

TEST_CASE("config layering and validation") {
  RunConfig cfg;
  apply_config_json(cfg, json::parse(R"({"dim": 128, "p": 0.25, "seed": 9})"));
  CHECK(cfg.dim == 128);
  CHECK(cfg.p == 0.25);
  CHECK(cfg.seed == 9);
  CHECK(cfg.n_theta == 256);  // untouched default
  CHECK_THROWS_AS(apply_config_json(cfg, json::parse(R"({"p": 1.5})")), ValidationError);
  CHECK_THROWS_AS(apply_config_json(cfg, json::parse(R"({"dim": 0})")), ValidationError);
  CHECK_THROWS_AS(apply_config_json(cfg, json::parse(R"([1,2])")), ValidationError);
}

TEST_CASE("reports serialize with their fields") {
  const KCarlesonReport r =
      varpi(DiscreteMeasure{{{Complex{0, 0}, Complex{1, 0}}}}, KClassParams{});
  const json rj = io::to_json(r);
  CHECK(rj["varpi"].get<double>() == doctest::Approx(2.25));
  CHECK(rj["method"] == "exact");
  CHECK(rj["vanishing"] == true);

  const SeriesReport sr = check_norm_af_type(hyperfunction_origin_collection(8), 1.0 / 9.0, 5);
  const json sj = io::to_json(sr);
  CHECK(sj["verdict"] == "CONVERGENT");
  CHECK(sj["partial_sums"].size() == sr.partial_sums.size());

  RealVec geo(20);
  for (int n = 0; n < 20; ++n) geo[n] = std::pow(0.5, n);
  const json dj = io::to_json(decay_classify(geo));
  CHECK(dj["verdict"] == "EXPONENTIAL");
}
